//! Named graph shapes.

use std::fmt;

use serde::Serialize;

use super::metric::{components, cyclomatic_number, is_connected, two_coloring};
use crate::graph::Graph;

/// Pattern of the non-isolated core. When several apply, the first in
/// declaration order wins (so `K2` is `Complete(2)` and `C4` is `Cycle(4)`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum CoreShape {
    Null,
    Complete { n: usize },
    Star { leaves: usize },
    Path { edges: usize },
    Cycle { length: usize },
    CompleteBipartite { m: usize, n: usize },
    Tree,
    Unicyclic,
    Other,
}

/// Compact form used in catalogs and tables: `Star(3)`, `CompleteBipartite(4,4)`, `Null`.
impl fmt::Display for CoreShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreShape::Null => write!(f, "Null"),
            CoreShape::Complete { n } => write!(f, "Complete({n})"),
            CoreShape::Star { leaves } => write!(f, "Star({leaves})"),
            CoreShape::Path { edges } => write!(f, "Path({edges})"),
            CoreShape::Cycle { length } => write!(f, "Cycle({length})"),
            CoreShape::CompleteBipartite { m, n } => write!(f, "CompleteBipartite({m},{n})"),
            CoreShape::Tree => write!(f, "Tree"),
            CoreShape::Unicyclic => write!(f, "Unicyclic"),
            CoreShape::Other => write!(f, "Other"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeDescriptor {
    pub core: CoreShape,
    pub isolated_count: usize,
}

impl ShapeDescriptor {
    /// True when the whole graph is a cycle, with no isolated vertices beside it.
    pub fn is_cycle_graph(&self) -> bool {
        matches!(self.core, CoreShape::Cycle { .. }) && self.isolated_count == 0
    }
}

/// Whole-graph predicates, independent of the precedence used by [`CoreShape`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapePredicates {
    pub null: bool,
    pub complete: bool,
    pub complete_bipartite: bool,
    pub star: bool,
    pub path: bool,
    pub cycle: bool,
    pub tree: bool,
    pub unicyclic: bool,
    pub connected: bool,
}

/// Part sizes `(m, n)` with `m <= n` when `g` is a connected complete bipartite graph.
fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    if g.n() < 2 || !is_connected(g) {
        return None;
    }
    let sides = two_coloring(g)?;
    let a = sides.iter().filter(|&&s| s == 0).count();
    let b = g.n() - a;
    (a * b == g.edge_count()).then_some((a.min(b), a.max(b)))
}

fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && is_connected(g) && g.edge_count() + 1 == g.n()
}

fn is_path(g: &Graph) -> bool {
    is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && (0..g.n()).all(|v| g.degree(v) == 2)
}

fn is_complete(g: &Graph) -> bool {
    g.n() >= 1 && 2 * g.edge_count() == g.n() * (g.n() - 1)
}

fn is_star(g: &Graph) -> bool {
    g.n() >= 2 && is_tree(g) && (0..g.n()).any(|v| g.degree(v) == g.n() - 1)
}

pub fn predicates(g: &Graph) -> ShapePredicates {
    ShapePredicates {
        null: g.edge_count() == 0,
        complete: is_complete(g),
        complete_bipartite: complete_bipartite_parts(g).is_some(),
        star: is_star(g),
        path: is_path(g),
        cycle: is_cycle(g),
        tree: is_tree(g),
        unicyclic: cyclomatic_number(g) == 1,
        connected: is_connected(g),
    }
}

pub fn classify_shape(g: &Graph) -> ShapeDescriptor {
    let core_vertices: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let isolated_count = g.n() - core_vertices.len();
    let core = g.induced(&core_vertices);
    let n = core.n();
    let shape = if n == 0 {
        CoreShape::Null
    } else if is_complete(&core) {
        CoreShape::Complete { n }
    } else if n >= 4 && is_star(&core) {
        CoreShape::Star { leaves: n - 1 }
    } else if is_path(&core) {
        CoreShape::Path { edges: core.edge_count() }
    } else if is_cycle(&core) {
        CoreShape::Cycle { length: n }
    } else if let Some((m, n)) = complete_bipartite_parts(&core) {
        CoreShape::CompleteBipartite { m, n }
    } else if is_tree(&core) {
        CoreShape::Tree
    } else if components(&core).len() + core.edge_count() == n + 1 {
        CoreShape::Unicyclic
    } else {
        CoreShape::Other
    };
    ShapeDescriptor { core: shape, isolated_count }
}
