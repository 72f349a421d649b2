use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Deserialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group::GroupSpec;

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../../data/catalog.jsonl");

/// Keys an entry may set in `expect`.
pub const EXPECTATION_KEYS: &[&str] = &[
    "alpha",
    "chi",
    "complete",
    "complete_bipartite",
    "connected",
    "diameter",
    "edges",
    "girth",
    "isolated",
    "k12_free",
    "k13_free",
    "k14_free",
    "k22_free",
    "k23_free",
    "k33_free",
    "k5_free",
    "omega",
    "path",
    "planar",
    "shape",
    "star",
    "tree",
    "unicyclic",
    "vertices",
];

#[derive(Clone, Debug, PartialEq)]
pub struct CatalogEntry {
    pub spec: GroupSpec,
    pub expect: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    spec: String,
    #[serde(default)]
    expect: BTreeMap<String, Value>,
}

/// Parses JSON Lines; blank lines are ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let at = |msg: String| Error::Parse(format!("catalog line {}: {msg}", lineno + 1));
        let raw: RawEntry = serde_json::from_str(line).map_err(|e| at(e.to_string()))?;
        let spec = GroupSpec::from_str(&raw.spec).map_err(|e| at(e.to_string()))?;
        if let Some(key) = raw.expect.keys().find(|k| !EXPECTATION_KEYS.contains(&k.as_str())) {
            return Err(at(format!("unknown expectation key {key:?}")));
        }
        entries.push(CatalogEntry { spec, expect: raw.expect });
    }
    Ok(entries)
}

pub fn default_catalog() -> Result<Vec<CatalogEntry>> {
    parse_catalog(DEFAULT_CATALOG)
}
