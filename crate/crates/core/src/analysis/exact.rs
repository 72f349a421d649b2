//! Exact clique, independence and chromatic numbers.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex count above which exact solvers refuse to run unless configured otherwise.
pub const DEFAULT_EXACT_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Set(Vec<u64>);

impl Set {
    fn empty(n: usize) -> Self {
        Set(vec![0; n.div_ceil(64).max(1)])
    }
    fn full(n: usize) -> Self {
        let mut s = Set::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }
    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn and(&self, other: &Set) -> Set {
        Set(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn first(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "exact solver vertices", size: g.n(), cap });
    }
    Ok(())
}

fn adjacency_sets(g: &Graph) -> Vec<Set> {
    (0..g.n())
        .map(|u| {
            let mut s = Set::empty(g.n());
            for &v in g.neighbors(u) {
                s.insert(v);
            }
            s
        })
        .collect()
}

struct CliqueSearch {
    adj: Vec<Set>,
    best: Vec<usize>,
}

impl CliqueSearch {
    /// Greedy coloring of `p`; returns vertices in nondecreasing color order with their colors.
    fn color_sort(&self, p: &Set) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut uncolored = p.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncolored.remove(v);
                for (qw, aw) in q.0.iter_mut().zip(&self.adj[v].0) {
                    *qw &= !aw;
                }
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, r: &mut Vec<usize>, mut p: Set) {
        let order = self.color_sort(&p);
        for &(v, color) in order.iter().rev() {
            if r.len() + color <= self.best.len() {
                return;
            }
            r.push(v);
            let np = p.and(&self.adj[v]);
            if np.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, np);
            }
            r.pop();
            p.remove(v);
        }
    }
}

/// A maximum clique, found by color-bounded branch and bound. Sorted ids.
pub fn maximum_clique(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let mut search = CliqueSearch { adj: adjacency_sets(g), best: Vec::new() };
    search.expand(&mut Vec::new(), Set::full(g.n()));
    search.best.sort_unstable();
    Ok(search.best)
}

pub fn clique_number(g: &Graph, cap: usize) -> Result<usize> {
    maximum_clique(g, cap).map(|c| c.len())
}

/// A maximum independent set, as a maximum clique of the complement.
pub fn maximum_independent_set(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    check_cap(g, cap)?;
    maximum_clique(&g.complement(), cap)
}

pub fn independence_number(g: &Graph, cap: usize) -> Result<usize> {
    maximum_independent_set(g, cap).map(|s| s.len())
}

struct ColorSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    lower: usize,
}

impl ColorSearch<'_> {
    /// Uncolored vertex with the most distinct neighbor colors, ties by uncolored degree.
    fn pick(&self) -> Option<usize> {
        let mut pick = None;
        let mut key = (0usize, 0usize);
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let mut seen: Vec<usize> = self.g.neighbors(v).iter().map(|&w| self.colors[w]).filter(|&c| c != 0).collect();
            seen.sort_unstable();
            seen.dedup();
            let free = self.g.neighbors(v).iter().filter(|&&w| self.colors[w] == 0).count();
            let k = (seen.len(), free);
            if pick.is_none() || k > key {
                pick = Some(v);
                key = k;
            }
        }
        pick
    }

    fn search(&mut self, used: usize) {
        if self.best_count == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_count {
                self.best_count = used;
                self.best = self.colors.clone();
            }
            return;
        };
        for c in 1..=(used + 1).min(self.best_count - 1) {
            if self.g.neighbors(v).iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            self.search(used.max(c));
            self.colors[v] = 0;
            if self.best_count == self.lower {
                return;
            }
        }
    }
}

/// Greedy DSATUR coloring with colors `1..`.
fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let mut s = ColorSearch { g, colors: vec![0; g.n()], best: Vec::new(), best_count: 0, lower: 0 };
    while let Some(v) = s.pick() {
        let c = (1..).find(|c| g.neighbors(v).iter().all(|&w| s.colors[w] != *c)).unwrap();
        s.colors[v] = c;
    }
    s.colors
}

/// An optimal proper coloring with colors `0..chi`.
pub fn optimal_coloring(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    check_cap(g, cap)?;
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    let lower = clique_number(g, cap)?;
    let greedy = dsatur_greedy(g);
    let greedy_count = greedy.iter().copied().max().unwrap_or(0);
    let mut s = ColorSearch { g, colors: vec![0; g.n()], best: greedy, best_count: greedy_count, lower };
    s.search(0);
    Ok(s.best.into_iter().map(|c| c - 1).collect())
}

pub fn chromatic_number(g: &Graph, cap: usize) -> Result<usize> {
    Ok(optimal_coloring(g, cap)?.into_iter().max().map_or(0, |c| c + 1))
}

pub fn is_proper_coloring(g: &Graph, colors: &[usize]) -> bool {
    colors.len() == g.n() && g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}
