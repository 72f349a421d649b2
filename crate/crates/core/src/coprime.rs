//! The coprime subgroup graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::FiniteGroup;
use crate::lattice::{self, Subgroup};
use crate::numtheory::{divisors, factorize, gcd, is_prime};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub id: usize,
    pub order: u64,
    /// 1-based index among vertices of the same order; 0 when the order is unique.
    #[serde(skip)]
    pub copy: usize,
}

impl Vertex {
    /// `"4"` for a unique order, `"4_2"` for the second subgroup of order 4.
    pub fn label(&self) -> String {
        if self.copy == 0 {
            self.order.to_string()
        } else {
            format!("{}_{}", self.order, self.copy)
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoprimeGraph {
    source: String,
    group_order: u64,
    vertices: Vec<Vertex>,
    subgroups: Vec<Subgroup>,
    graph: Graph,
}

impl CoprimeGraph {
    /// Builds `P(G)` from the full subgroup lattice of `g`.
    pub fn build(g: &FiniteGroup) -> Result<Self> {
        check_defined(g.order() as u64)?;
        let sl = lattice::all_subgroups(g)?;
        let subgroups = lattice::proper_nontrivial(&sl);
        let orders: Vec<u64> = subgroups.iter().map(|h| h.order() as u64).collect();
        Ok(Self::from_orders(g.name().to_string(), g.order() as u64, &orders, subgroups))
    }

    /// Builds `P(Z_n)` directly from the divisors of `n`.
    pub fn build_cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group of order 0".into()));
        }
        check_defined(n)?;
        let orders: Vec<u64> = divisors(n).into_iter().filter(|&d| d != 1 && d != n).collect();
        Ok(Self::from_orders(format!("Z:{n}"), n, &orders, Vec::new()))
    }

    fn from_orders(source: String, group_order: u64, orders: &[u64], subgroups: Vec<Subgroup>) -> Self {
        let mut vertices: Vec<Vertex> = Vec::with_capacity(orders.len());
        for (id, &order) in orders.iter().enumerate() {
            let total = orders.iter().filter(|&&o| o == order).count();
            let copy = if total == 1 { 0 } else { orders[..id].iter().filter(|&&o| o == order).count() + 1 };
            vertices.push(Vertex { id, order, copy });
        }
        let mut edges = Vec::new();
        for u in 0..orders.len() {
            for v in u + 1..orders.len() {
                if gcd(orders[u], orders[v]) == 1 {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(orders.len(), &edges).expect("coprime edges are simple");
        CoprimeGraph { source, group_order, vertices, subgroups, graph }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// The subgroup behind each vertex; empty for graphs built with [`CoprimeGraph::build_cyclic`].
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order_of(&self, v: usize) -> u64 {
        self.vertices[v].order
    }

    /// Vertex ids whose subgroup has order `order`.
    pub fn vertices_of_order(&self, order: u64) -> Vec<usize> {
        self.vertices.iter().filter(|v| v.order == order).map(|v| v.id).collect()
    }
}

fn check_defined(order: u64) -> Result<()> {
    if order <= 1 || is_prime(order) {
        return Err(Error::Undefined { order });
    }
    Ok(())
}

/// Degree of the vertex of order `h` in `P(Z_n)`: the number of divisors of
/// `n` coprime to `h`, minus the trivial one.
pub fn degree_formula(n: u64, h: u64) -> Result<u64> {
    if n < 2 || h <= 1 || h >= n || !n.is_multiple_of(h) {
        return Err(Error::InvalidArgument(format!("{h} is not a proper nontrivial divisor of {n}")));
    }
    let count: u64 = factorize(n).into_iter().filter(|&(p, _)| !h.is_multiple_of(p)).map(|(_, a)| a as u64 + 1).product();
    Ok(count - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, named};

    #[test]
    fn undefined_for_trivial_and_prime_orders() {
        assert_eq!(CoprimeGraph::build_cyclic(7).unwrap_err(), Error::Undefined { order: 7 });
        assert_eq!(CoprimeGraph::build_cyclic(1).unwrap_err(), Error::Undefined { order: 1 });
        assert!(matches!(CoprimeGraph::build(&cyclic(5).unwrap()), Err(Error::Undefined { order: 5 })));
        assert!(CoprimeGraph::build_cyclic(0).is_err());
    }

    #[test]
    fn z6_is_a_single_edge() {
        let p = CoprimeGraph::build_cyclic(6).unwrap();
        assert_eq!(p.vertices().iter().map(|v| v.order).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(p.graph().edges(), vec![(0, 1)]);
    }

    #[test]
    fn cyclic_fast_path_matches_lattice() {
        for n in [12u64, 30, 36, 60] {
            let fast = CoprimeGraph::build_cyclic(n).unwrap();
            let slow = CoprimeGraph::build(&cyclic(n as usize).unwrap()).unwrap();
            assert_eq!(fast.vertices(), slow.vertices());
            assert_eq!(fast.graph(), slow.graph());
        }
    }

    #[test]
    fn duplicate_orders_get_distinct_vertices() {
        let p = CoprimeGraph::build(&named("S3", &[]).unwrap()).unwrap();
        let labels: Vec<String> = p.vertices().iter().map(Vertex::label).collect();
        assert_eq!(labels, vec!["2_1", "2_2", "2_3", "3"]);
        assert_eq!(p.graph().degree(3), 3);
        assert_eq!(p.subgroups().len(), 4);
    }

    #[test]
    fn degree_formula_examples() {
        assert_eq!(degree_formula(36, 2).unwrap(), 2);
        assert_eq!(degree_formula(360, 45).unwrap(), 3);
        assert_eq!(degree_formula(8, 2).unwrap(), 0);
        assert!(degree_formula(36, 5).is_err());
        assert!(degree_formula(36, 36).is_err());
        assert!(degree_formula(36, 1).is_err());
    }
}
