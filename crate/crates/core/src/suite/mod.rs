//! Catalog-driven verification of the structural classification of `P(G)`.
//!
//! A catalog is JSON Lines, one `{"spec": "...", "expect": {"key": value}}`
//! object per group. Every entry is built, analyzed and compared against its
//! expectations, and a fixed set of universal checks runs on every entry.

mod catalog;
mod report;
mod theorems;
mod universal;

pub use catalog::{default_catalog, parse_catalog, CatalogEntry, DEFAULT_CATALOG, EXPECTATION_KEYS};
pub use report::{Row, Summary, VerificationReport};
pub use universal::UNIVERSAL_CHECKS;
pub use theorems::{
    check_connectivity_criterion, check_degree_theorem, check_embedding_theorem, check_embedding_theorem_with_seed,
    EMBEDDING_SEED,
};

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde_json::{json, Value};

use crate::analysis::{analyze, AnalysisOptions, AnalysisReport};
use crate::coprime::CoprimeGraph;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group order in the default catalog run.
pub const DEFAULT_MAX_ORDER: u64 = 200;
/// The largest catalog graph has 114 vertices.
pub const SUITE_EXACT_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_order: u64,
    pub exact_cap: usize,
    pub jobs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_order: DEFAULT_MAX_ORDER, exact_cap: SUITE_EXACT_CAP, jobs: 1 }
    }
}

/// Everything computed for one group, shared by the expectation and universal checks.
pub struct Computed {
    pub group: FiniteGroup,
    pub graph: CoprimeGraph,
    pub report: AnalysisReport,
}

impl Computed {
    pub fn new(group: FiniteGroup, exact_cap: usize) -> Result<Self> {
        let graph = CoprimeGraph::build(&group)?;
        let report = analyze(graph.graph(), AnalysisOptions { exact_cap })?;
        Ok(Computed { group, graph, report })
    }

    /// The observed value for an expectation key, `None` for unknown keys.
    pub fn observe(&self, key: &str) -> Option<Value> {
        let r = &self.report;
        let p = &r.predicates;
        let free = |pattern: &str| r.contains(pattern).map(|c| json!(!c));
        Some(match key {
            "shape" => json!(r.shape.core.to_string()),
            "isolated" => json!(r.shape.isolated_count),
            "vertices" => json!(r.n_vertices),
            "edges" => json!(r.n_edges),
            "connected" => json!(r.is_connected),
            "diameter" => serde_json::to_value(r.diameter).ok()?,
            "girth" => serde_json::to_value(r.girth).ok()?,
            "planar" => json!(r.is_planar()),
            "k12_free" => free("K1,2")?,
            "k13_free" => free("K1,3")?,
            "k14_free" => free("K1,4")?,
            "k22_free" => free("K2,2")?,
            "k23_free" => free("K2,3")?,
            "k33_free" => free("K3,3")?,
            "k5_free" => free("K5")?,
            "unicyclic" => json!(p.unicyclic),
            "tree" => json!(p.tree),
            "star" => json!(p.star),
            "path" => json!(p.path),
            "complete" => json!(p.complete),
            "complete_bipartite" => json!(p.complete_bipartite),
            "alpha" => json!(r.alpha),
            "omega" => json!(r.omega),
            "chi" => json!(r.chi),
            _ => return None,
        })
    }
}

/// Runs the built-in catalog.
pub fn run_catalog(max_order: u64) -> Result<VerificationReport> {
    let entries = default_catalog()?;
    Ok(run_entries(&entries, SuiteOptions { max_order, ..SuiteOptions::default() }))
}

/// Verifies every entry with order at most `options.max_order`. Construction
/// and cap failures become failing `build` rows instead of aborting the run.
pub fn run_entries(entries: &[CatalogEntry], options: SuiteOptions) -> VerificationReport {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<EntryOutcome>> = Mutex::new(Vec::with_capacity(entries.len()));
    let workers = options.jobs.clamp(1, entries.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = entries.get(i) else { break };
                let outcome = verify_entry(entry, options);
                results.lock().expect("no worker panicked").push(outcome);
            });
        }
    });

    let mut report = VerificationReport::default();
    for outcome in results.into_inner().expect("no worker panicked") {
        match outcome {
            EntryOutcome::Skipped => report.summary.skipped += 1,
            EntryOutcome::Checked(rows) => {
                report.summary.entries += 1;
                report.rows.extend(rows);
            }
            EntryOutcome::Error(row) => {
                report.summary.entries += 1;
                report.summary.errors += 1;
                report.rows.push(row);
            }
        }
    }
    report.finish();
    report
}

enum EntryOutcome {
    Skipped,
    Checked(Vec<Row>),
    Error(Row),
}

fn verify_entry(entry: &CatalogEntry, options: SuiteOptions) -> EntryOutcome {
    let name = entry.spec.to_string();
    match entry.spec.nominal_order() {
        Ok(Some(order)) if order > options.max_order => return EntryOutcome::Skipped,
        _ => {}
    }
    let cap = usize::try_from(options.max_order).unwrap_or(usize::MAX);
    let computed = match entry.spec.build(cap).and_then(|g| Computed::new(g, options.exact_cap)) {
        Ok(c) => c,
        Err(Error::CapExceeded { what: "group order", .. }) => return EntryOutcome::Skipped,
        Err(e) => return EntryOutcome::Error(Row::new(&name, "build", json!("ok"), json!(e.to_string()), false)),
    };

    let mut rows = Vec::new();
    for (key, expected) in &entry.expect {
        let observed = computed.observe(key).unwrap_or(Value::Null);
        let pass = observed == *expected;
        rows.push(Row::new(&name, key, expected.clone(), observed, pass));
    }
    rows.extend(universal::checks(&name, &computed));
    EntryOutcome::Checked(rows)
}
