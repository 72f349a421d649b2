use std::fmt::Write;

use coprime_core::analysis::{AnalysisReport, KuratowskiKind, PlanarityCertificate};
use coprime_core::suite::CatalogEntry;
use coprime_core::{export, CoprimeGraph};
use serde_json::{json, Value};

pub fn json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
    text.push('\n');
    text
}

/// The export schema plus vertex labels and the full report under `analysis`.
pub fn analysis_json(p: &CoprimeGraph, report: &AnalysisReport) -> Value {
    let mut value = export::to_json(p);
    let labels: Vec<String> = p.vertices().iter().map(|v| v.label()).collect();
    value["labels"] = json!(labels);
    value["analysis"] = serde_json::to_value(report).expect("report serializes");
    value
}

fn list(items: impl IntoIterator<Item = String>) -> String {
    let items: Vec<String> = items.into_iter().collect();
    if items.is_empty() {
        "-".to_string()
    } else {
        items.join(" ")
    }
}

pub fn analysis_table(p: &CoprimeGraph, r: &AnalysisReport) -> String {
    let label = |v: &usize| p.vertices()[*v].label();
    let planar = match &r.planarity {
        PlanarityCertificate::Planar { .. } => "yes".to_string(),
        PlanarityCertificate::NonPlanar { subdivision_of, .. } => {
            let kind = match subdivision_of {
                KuratowskiKind::K5 => "K5",
                KuratowskiKind::K33 => "K3,3",
            };
            format!("no ({kind} subdivision)")
        }
    };
    let contained = r.forbidden.iter().filter(|(_, &c)| c).map(|(k, _)| k.clone());
    let free = r.forbidden.iter().filter(|(_, &c)| !c).map(|(k, _)| k.clone());
    let components = r.components.iter().map(|c| format!("{{{}}}", c.iter().map(label).collect::<Vec<_>>().join(",")));

    let fields: Vec<(&str, String)> = vec![
        ("group", p.source().to_string()),
        ("order", p.group_order().to_string()),
        ("vertices", list(p.vertices().iter().map(|v| v.label()))),
        ("vertex count", r.n_vertices.to_string()),
        ("edge count", r.n_edges.to_string()),
        ("components", list(components)),
        ("connected", r.is_connected.to_string()),
        ("diameter", r.diameter.to_string()),
        ("girth", r.girth.to_string()),
        ("independence number", r.alpha.to_string()),
        ("clique number", r.omega.to_string()),
        ("chromatic number", r.chi.to_string()),
        ("maximum clique", list(r.max_clique.iter().map(label))),
        ("bipartite", r.is_bipartite.to_string()),
        ("unicyclic", r.is_unicyclic.to_string()),
        ("planar", planar),
        ("shape", r.shape.core.to_string()),
        ("isolated vertices", r.shape.isolated_count.to_string()),
        ("contains", list(contained)),
        ("free of", list(free)),
    ];
    let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in fields {
        writeln!(out, "{k:<width$}  {v}").unwrap();
    }
    out
}

pub fn catalog_json(entries: &[CatalogEntry]) -> Value {
    let rows: Vec<Value> =
        entries.iter().map(|e| json!({"spec": e.spec.to_string(), "expect": e.expect})).collect();
    Value::Array(rows)
}

pub fn catalog_table(entries: &[CatalogEntry]) -> String {
    let width = entries.iter().map(|e| e.spec.to_string().len()).max().unwrap_or(4).max(4);
    let mut out = String::new();
    writeln!(out, "{:<width$}  {:>5}  EXPECTATIONS", "SPEC", "ORDER").unwrap();
    for e in entries {
        let order = match e.spec.nominal_order() {
            Ok(Some(n)) => n.to_string(),
            _ => "?".to_string(),
        };
        let keys: Vec<String> = e
            .expect
            .iter()
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        writeln!(out, "{:<width$}  {order:>5}  {}", e.spec.to_string(), keys.join(" ")).unwrap();
    }
    writeln!(out, "{} entries", entries.len()).unwrap();
    out
}
