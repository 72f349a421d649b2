//! Isomorphism test for small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ISOMORPHISM_CAP: usize = 16;

/// Exact isomorphism by backtracking over degree-compatible assignments.
pub fn small_graph_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.n() > ISOMORPHISM_CAP {
            return Err(Error::CapExceeded { what: "isomorphism vertices", size: g.n(), cap: ISOMORPHISM_CAP });
        }
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let degrees = |g: &Graph| {
        let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g1) != degrees(g2) {
        return Ok(false);
    }
    let mut order: Vec<usize> = (0..g1.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g1.degree(v)));
    let mut image = vec![usize::MAX; g1.n()];
    let mut used = vec![false; g2.n()];
    Ok(extend(g1, g2, &order, 0, &mut image, &mut used))
}

fn extend(g1: &Graph, g2: &Graph, order: &[usize], depth: usize, image: &mut [usize], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..g2.n() {
        if used[w] || g2.degree(w) != g1.degree(v) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| g1.has_edge(u, v) == g2.has_edge(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        used[w] = true;
        if extend(g1, g2, order, depth + 1, image, used) {
            return true;
        }
        used[w] = false;
    }
    image[v] = usize::MAX;
    false
}
