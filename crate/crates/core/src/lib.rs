//! Coprime subgroup graphs of finite groups.
//!
//! The graph `P(G)` has one vertex per subgroup `H` with `1 < |H| < |G|`;
//! two vertices are adjacent when their orders are coprime.

pub mod analysis;
pub mod coprime;
pub mod embed;
pub mod error;
pub mod export;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod numtheory;
pub mod suite;

pub use analysis::{analyze, AnalysisOptions, AnalysisReport};
pub use coprime::CoprimeGraph;
pub use error::{Error, Result};
pub use graph::Graph;
pub use group::{FiniteGroup, GroupSpec};
