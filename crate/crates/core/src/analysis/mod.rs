//! Exact graph invariants.
//!
//! [`analyze`] gathers everything into an [`AnalysisReport`], whose JSON form
//! is the stable schema used by the CLI and the verification suite.

pub mod exact;
pub mod iso;
pub mod metric;
pub mod planarity;
pub mod shape;
pub mod subgraph;

use std::collections::BTreeMap;

use serde::Serialize;

pub use exact::{
    chromatic_number, clique_number, independence_number, is_proper_coloring, maximum_clique,
    maximum_independent_set, optimal_coloring, DEFAULT_EXACT_CAP,
};
pub use iso::small_graph_isomorphic;
pub use metric::{
    component_diameters, components, cyclomatic_number, diameter, girth, is_bipartite, is_connected, is_unicyclic,
    Extended,
};
pub use planarity::{is_planar, planarity, KuratowskiKind, PlanarityCertificate};
pub use shape::{classify_shape, predicates, CoreShape, ShapeDescriptor, ShapePredicates};
pub use subgraph::{contains_complete_bipartite, forbidden_map, FORBIDDEN_PATTERNS};

use crate::error::Result;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Largest vertex count for the exact clique, independence and coloring solvers.
    pub exact_cap: usize,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { exact_cap: DEFAULT_EXACT_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n_vertices: usize,
    pub n_edges: usize,
    pub components: Vec<Vec<usize>>,
    pub is_connected: bool,
    pub diameter: Extended,
    pub component_diameters: Vec<usize>,
    pub girth: Extended,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
    pub max_clique: Vec<usize>,
    pub coloring: Vec<usize>,
    pub is_bipartite: bool,
    pub is_unicyclic: bool,
    pub planarity: PlanarityCertificate,
    pub forbidden: BTreeMap<String, bool>,
    pub shape: ShapeDescriptor,
    pub predicates: ShapePredicates,
}

impl AnalysisReport {
    pub fn is_planar(&self) -> bool {
        self.planarity.is_planar()
    }

    pub fn contains(&self, pattern: &str) -> Option<bool> {
        self.forbidden.get(pattern).copied()
    }
}

pub fn analyze(g: &Graph, options: AnalysisOptions) -> Result<AnalysisReport> {
    let cap = options.exact_cap;
    let max_clique = maximum_clique(g, cap)?;
    let alpha = independence_number(g, cap)?;
    let coloring = optimal_coloring(g, cap)?;
    let chi = coloring.iter().max().map_or(0, |c| c + 1);
    let omega = max_clique.len();
    Ok(AnalysisReport {
        n_vertices: g.n(),
        n_edges: g.edge_count(),
        components: components(g),
        is_connected: is_connected(g),
        diameter: diameter(g),
        component_diameters: component_diameters(g),
        girth: girth(g),
        alpha,
        omega,
        chi,
        max_clique,
        coloring,
        is_bipartite: is_bipartite(g),
        is_unicyclic: is_unicyclic(g),
        planarity: planarity(g),
        forbidden: forbidden_map(g, omega),
        shape: classify_shape(g),
        predicates: predicates(g),
    })
}
