//! Simple undirected graphs on vertices `0..n`.

use crate::error::{Error, Result};

/// Graphs up to this many vertices also keep a dense adjacency bit matrix.
pub const DENSE_LIMIT: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    neighbors: Vec<Vec<usize>>,
    dense: Option<Vec<Vec<u64>>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges are merged, loops rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_neighbor_lists(neighbors))
    }

    /// Sorted, deduplicated, symmetric neighbor lists are assumed.
    fn from_neighbor_lists(neighbors: Vec<Vec<usize>>) -> Self {
        let n = neighbors.len();
        let edge_count = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        let dense = (n <= DENSE_LIMIT).then(|| {
            let words = n.div_ceil(64).max(1);
            neighbors
                .iter()
                .map(|list| {
                    let mut row = vec![0u64; words];
                    for &v in list {
                        row[v / 64] |= 1 << (v % 64);
                    }
                    row
                })
                .collect()
        });
        Graph { n, neighbors, dense, edge_count }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_neighbor_lists(vec![Vec::new(); n])
    }

    pub fn complete(n: usize) -> Self {
        Self::from_neighbor_lists((0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect())
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let n = a + b;
        Self::from_neighbor_lists(
            (0..n).map(|u| if u < a { (a..n).collect() } else { (0..a).collect() }).collect(),
        )
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("cycle on n >= 3 vertices")
    }

    pub fn path(edges: usize) -> Self {
        let list: Vec<(usize, usize)> = (0..edges).map(|i| (i, i + 1)).collect();
        Self::from_edges(edges + 1, &list).expect("valid path")
    }

    /// Disjoint union, `other`'s vertices renumbered after `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut lists = self.neighbors.clone();
        lists.extend(other.neighbors.iter().map(|l| l.iter().map(|v| v + shift).collect()));
        Self::from_neighbor_lists(lists)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.dense {
            Some(rows) => rows[u][v / 64] >> (v % 64) & 1 == 1,
            None => self.neighbors[u].binary_search(&v).is_ok(),
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of common neighbors of every vertex in `set`.
    pub fn common_neighbor_count(&self, set: &[usize]) -> usize {
        match (&self.dense, set.split_first()) {
            (_, None) => self.n,
            (Some(rows), Some((&first, rest))) => {
                let mut acc = rows[first].clone();
                for &v in rest {
                    acc.iter_mut().zip(&rows[v]).for_each(|(a, b)| *a &= b);
                }
                acc.iter().map(|w| w.count_ones() as usize).sum()
            }
            (None, Some((&first, rest))) => self.neighbors[first]
                .iter()
                .filter(|&&w| rest.iter().all(|&v| self.has_edge(v, w)))
                .count(),
        }
    }

    /// Adjacency rows as 64-bit masks; `None` for graphs over 64 vertices.
    pub fn bitmasks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            self.neighbors
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v))
                .collect()
        })
    }

    pub fn complement(&self) -> Graph {
        Self::from_neighbor_lists(
            (0..self.n)
                .map(|u| (0..self.n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
                .collect(),
        )
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Self::from_edges(vertices.len(), &edges).expect("induced subgraph of a simple graph")
    }
}
