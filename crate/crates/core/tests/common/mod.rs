//! Brute-force oracles, deliberately naive and independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use coprime_core::group::FiniteGroup;
use coprime_core::Graph;
use proptest::prelude::*;

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Subgroups found by testing every subset containing the identity. Orders up to 16.
pub fn subgroups_by_subsets(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 16, "exhaustive subset search is for tiny groups");
    let e = g.identity();
    let others: Vec<usize> = (0..n).filter(|&x| x != e).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << others.len()) {
        let mut set = vec![e];
        set.extend(others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
        set.sort_unstable();
        let member = |x: usize| set.binary_search(&x).is_ok();
        if set.iter().all(|&a| set.iter().all(|&b| member(g.mul(a, b)))) {
            out.insert(set);
        }
    }
    out
}

/// Closure of a generating set by repeated multiplication until nothing new appears.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([g.identity()]);
    set.extend(gens.iter().copied());
    loop {
        let current: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            for &b in &current {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// Subgroups as closures of every subset of at most `floor(log2 |G|)` elements.
/// Each generator beyond the first at least doubles a subgroup, so no
/// subgroup needs more generators than that. Generators already inside the
/// current closure are skipped since they add nothing.
pub fn subgroups_by_generator_subsets(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    let depth = usize::BITS as usize - 1 - n.leading_zeros() as usize;
    let mut out = BTreeSet::new();
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(Vec::new(), 0)];
    while let Some((gens, start)) = stack.pop() {
        let span = closure(g, &gens);
        if gens.len() < depth {
            for x in start..n {
                if span.binary_search(&x).is_err() {
                    let mut next = gens.clone();
                    next.push(x);
                    stack.push((next, x + 1));
                }
            }
        }
        out.insert(span);
    }
    out
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect()
}

fn is_clique(adj: &[Vec<bool>], mask: u32) -> bool {
    let vs: Vec<usize> = (0..adj.len()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter().all(|&u| vs.iter().all(|&v| u == v || adj[u][v]))
}

fn is_independent(adj: &[Vec<bool>], mask: u32) -> bool {
    let vs: Vec<usize> = (0..adj.len()).filter(|&v| mask >> v & 1 == 1).collect();
    vs.iter().all(|&u| vs.iter().all(|&v| !adj[u][v]))
}

pub fn clique_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u32..1 << g.n()).filter(|&m| is_clique(&adj, m)).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

pub fn independence_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u32..1 << g.n()).filter(|&m| is_independent(&adj, m)).map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

/// Minimum number of independent sets covering all vertices, by dynamic
/// programming over vertex subsets.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    let adj = adjacency(g);
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> = (0..=full).map(|m| is_independent(&adj, m)).collect();
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for mask in 1..=full {
        // Fix the lowest vertex to avoid counting the same cover twice.
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        let mut sub = rest;
        loop {
            let class = sub | low;
            if independent[class as usize] {
                let prev = best[(mask ^ class) as usize];
                if prev != usize::MAX {
                    best[mask as usize] = best[mask as usize].min(prev + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

/// All-pairs distances by Floyd–Warshall; `None` marks unreachable pairs.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let n = g.n();
    let mut d: Vec<Vec<Option<usize>>> = (0..n)
        .map(|u| (0..n).map(|v| if u == v { Some(0) } else if g.has_edge(u, v) { Some(1) } else { None }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].is_none_or(|c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Largest finite distance between two vertices of the same component.
pub fn max_component_distance(g: &Graph) -> usize {
    distances(g).into_iter().flatten().flatten().max().unwrap_or(0)
}

/// Shortest cycle: for each edge, the shortest path between its ends avoiding it, plus one.
pub fn girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in 0..g.n() {
                if g.has_edge(x, y) && !(x == u && y == v) && dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if dist[v] != usize::MAX {
            best = Some(best.map_or(dist[v] + 1, |b| b.min(dist[v] + 1)));
        }
    }
    best
}

/// Whether some disjoint vertex sets of sizes `a` and `b` are completely joined.
pub fn contains_complete_bipartite(g: &Graph, a: usize, b: usize) -> bool {
    let n = g.n();
    let adj = adjacency(g);
    (0u32..1 << n).filter(|m| m.count_ones() as usize == a).any(|left| {
        let common = (0..n).filter(|&v| left >> v & 1 == 0 && (0..n).all(|u| left >> u & 1 == 0 || adj[u][v]));
        common.count() >= b
    })
}

/// Degree of the vertex of order `h` in `P(Z_n)`, by counting divisors of `n` coprime to `h`.
pub fn cyclic_degree(n: u64, h: u64) -> u64 {
    (2..n).filter(|&d| n.is_multiple_of(d) && gcd(d, h) == 1).count() as u64
}

/// Graph on `n <= 11` vertices whose edges are the set bits of `mask`, pairs in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Random simple graphs with `min..=max` vertices.
pub fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = all.zip(&bits).filter(|(_, &b)| b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}
