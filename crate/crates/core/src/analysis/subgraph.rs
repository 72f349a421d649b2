//! Subgraph (not induced) containment of small complete bipartite graphs and `K5`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Whether `g` contains `K_{a,b}` as a subgraph, for `a` in `1..=3` and `a <= b`.
pub fn contains_complete_bipartite(g: &Graph, a: usize, b: usize) -> Result<bool> {
    if !(1..=3).contains(&a) || b < a {
        return Err(Error::InvalidArgument(format!("K_{{{a},{b}}} is not supported (need 1 <= a <= 3, a <= b)")));
    }
    let n = g.n();
    Ok(match a {
        1 => (0..n).any(|v| g.degree(v) >= b),
        2 => (0..n).any(|u| g.degree(u) >= b && (u + 1..n).any(|v| g.common_neighbor_count(&[u, v]) >= b)),
        _ => {
            let heavy: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= b).collect();
            heavy.iter().enumerate().any(|(i, &u)| {
                heavy[i + 1..].iter().enumerate().any(|(j, &v)| {
                    g.common_neighbor_count(&[u, v]) >= b
                        && heavy[i + 1 + j + 1..].iter().any(|&w| g.common_neighbor_count(&[u, v, w]) >= b)
                })
            })
        }
    })
}

/// Keys of the forbidden-subgraph map, in report order.
pub const FORBIDDEN_PATTERNS: [&str; 7] = ["K1,2", "K1,3", "K1,4", "K2,2", "K2,3", "K3,3", "K5"];

/// Containment of each pattern in [`FORBIDDEN_PATTERNS`]; `K5` uses the clique number.
pub fn forbidden_map(g: &Graph, omega: usize) -> BTreeMap<String, bool> {
    let mut out = BTreeMap::new();
    for (key, (a, b)) in FORBIDDEN_PATTERNS.iter().zip([(1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 3)]) {
        out.insert(key.to_string(), contains_complete_bipartite(g, a, b).expect("supported pattern"));
    }
    out.insert("K5".to_string(), omega >= 5);
    out
}
