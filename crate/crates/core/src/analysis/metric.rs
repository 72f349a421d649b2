//! Breadth-first invariants: components, distances, girth, bipartiteness.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::Graph;

/// A nonnegative integer or infinity; serializes as a number or `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extended {
    Finite(usize),
    Infinite,
}

impl Extended {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinite => None,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => s.serialize_u64(*x as u64),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let u = comp[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// Distances from `s`; `usize::MAX` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn eccentricity(g: &Graph, s: usize) -> usize {
    bfs_distances(g, s).into_iter().filter(|&d| d != usize::MAX).max().unwrap_or(0)
}

/// Diameter of each component, in the order of [`components`].
pub fn component_diameters(g: &Graph) -> Vec<usize> {
    components(g).iter().map(|comp| comp.iter().map(|&v| eccentricity(g, v)).max().unwrap_or(0)).collect()
}

/// Diameter; infinite for disconnected graphs.
pub fn diameter(g: &Graph) -> Extended {
    if !is_connected(g) {
        return Extended::Infinite;
    }
    Extended::Finite((0..g.n()).map(|v| eccentricity(g, v)).max().unwrap_or(0))
}

/// Length of a shortest cycle; infinite for forests.
pub fn girth(g: &Graph) -> Extended {
    let mut best = usize::MAX;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        let mut parent = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Extended::Infinite
    } else {
        Extended::Finite(best)
    }
}

/// A 2-coloring when one exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<usize>> {
    let mut side = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if side[w] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_coloring(g).is_some()
}

/// `E - V + C`: the number of independent cycles.
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.edge_count() + components(g).len() - g.n()
}

/// Exactly one cycle; connectivity is not required.
pub fn is_unicyclic(g: &Graph) -> bool {
    cyclomatic_number(g) == 1
}
