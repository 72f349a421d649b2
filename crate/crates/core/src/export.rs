//! DOT and JSON renderings of a coprime graph.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::analysis::PlanarityCertificate;
use crate::coprime::CoprimeGraph;

/// Undirected DOT with one node per vertex labelled by its order. A planar
/// certificate adds a comment block listing the rotation system.
pub fn to_dot(p: &CoprimeGraph, planarity: Option<&PlanarityCertificate>) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"P({})\" {{", p.source()).unwrap();
    if let Some(PlanarityCertificate::Planar { rotation }) = planarity {
        writeln!(out, "  // rotation system (cyclic neighbor order per vertex)").unwrap();
        for (v, rot) in rotation.iter().enumerate() {
            let body: Vec<String> = rot.iter().map(usize::to_string).collect();
            writeln!(out, "  // {v}: {}", body.join(" ")).unwrap();
        }
    }
    for v in p.vertices() {
        writeln!(out, "  {} [label=\"{}\"];", v.id, v.label()).unwrap();
    }
    for (u, v) in p.graph().edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// `{group, group_order, vertices: [{id, order}], edges: [[u, v]]}`.
pub fn to_json(p: &CoprimeGraph) -> Value {
    let edges: Vec<[usize; 2]> = p.graph().edges().into_iter().map(|(u, v)| [u, v]).collect();
    json!({
        "group": p.source(),
        "group_order": p.group_order(),
        "vertices": p.vertices(),
        "edges": edges,
    })
}
