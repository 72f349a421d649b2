//! Planarity testing with checkable certificates.
//!
//! Planar graphs get a rotation system built block by block with the
//! Demoucron–Malgrange–Pertuiset face-insertion algorithm. Nonplanar graphs
//! get a subdivision of `K5` or `K3,3`, found directly when the graph holds
//! one as a subgraph and otherwise by deleting edges while nonplanarity is
//! preserved. Both certificates are verified before they are returned.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::metric::components;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum PlanarityCertificate {
    /// Cyclic neighbor order around each vertex.
    Planar { rotation: Vec<Vec<usize>> },
    NonPlanar { subdivision_of: KuratowskiKind, branch_vertices: Vec<usize>, edges: Vec<(usize, usize)> },
}

impl PlanarityCertificate {
    pub fn is_planar(&self) -> bool {
        matches!(self, PlanarityCertificate::Planar { .. })
    }

    /// Checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        match self {
            PlanarityCertificate::Planar { rotation } => verify_rotation(g, rotation).map(|_| ()),
            PlanarityCertificate::NonPlanar { subdivision_of, branch_vertices, edges } => {
                let (kind, branch) = verify_subdivision(g, edges)?;
                if kind != *subdivision_of {
                    return Err(format!("witness is a subdivision of {kind:?}, not {subdivision_of:?}"));
                }
                if &branch != branch_vertices {
                    return Err("branch vertex list does not match the witness".into());
                }
                Ok(())
            }
        }
    }
}

/// Decides planarity and returns a verified certificate.
pub fn planarity(g: &Graph) -> PlanarityCertificate {
    let cert = match embed(g) {
        Some(rotation) => PlanarityCertificate::Planar { rotation },
        None => {
            let edges = kuratowski_edges(g);
            let (kind, branch) = verify_subdivision(g, &edges).expect("extracted witness is a subdivision");
            PlanarityCertificate::NonPlanar { subdivision_of: kind, branch_vertices: branch, edges }
        }
    };
    if let Err(e) = cert.verify(g) {
        panic!("planarity certificate failed verification: {e}");
    }
    cert
}

pub fn is_planar(g: &Graph) -> bool {
    embed(g).is_some()
}

/// `E > 3V - 6` over the vertices that carry an edge.
fn exceeds_edge_bound(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut touched = vec![false; n];
    for &(u, v) in edges {
        touched[u] = true;
        touched[v] = true;
    }
    let v = touched.iter().filter(|&&t| t).count();
    v >= 3 && edges.len() > 3 * v - 6
}

/// Traces faces of `rotation` and checks Euler's formula `V - E + F = 1 + C`.
/// Returns the total face count.
pub fn verify_rotation(g: &Graph, rotation: &[Vec<usize>]) -> Result<usize, String> {
    if rotation.len() != g.n() {
        return Err(format!("rotation covers {} vertices, graph has {}", rotation.len(), g.n()));
    }
    let mut position: Vec<HashMap<usize, usize>> = Vec::with_capacity(g.n());
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        if sorted != g.neighbors(v) {
            return Err(format!("rotation at {v} is not a permutation of its neighbors"));
        }
        position.push(rot.iter().enumerate().map(|(i, &w)| (w, i)).collect());
    }
    let mut visited: HashMap<(usize, usize), ()> = HashMap::new();
    let comps = components(g);
    let mut comp_of = vec![0; g.n()];
    for (c, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = c;
        }
    }
    let mut faces_per_comp = vec![0usize; comps.len()];
    for (u, v) in g.edges().into_iter().flat_map(|(u, v)| [(u, v), (v, u)]) {
        if visited.contains_key(&(u, v)) {
            continue;
        }
        faces_per_comp[comp_of[u]] += 1;
        let (mut a, mut b) = (u, v);
        while visited.insert((a, b), ()).is_none() {
            let rot = &rotation[b];
            let next = rot[(position[b][&a] + 1) % rot.len()];
            (a, b) = (b, next);
        }
        if (a, b) != (u, v) {
            return Err("face tracing did not close up".into());
        }
    }
    for (c, comp) in comps.iter().enumerate() {
        let v = comp.len() as i64;
        let e = comp.iter().map(|&x| g.degree(x)).sum::<usize>() as i64 / 2;
        let f = if e == 0 { 1 } else { faces_per_comp[c] as i64 };
        faces_per_comp[c] = f as usize;
        if v - e + f != 2 {
            return Err(format!("component {c}: V - E + F = {} - {} + {} != 2", v, e, f));
        }
    }
    let c = comps.len();
    let f = (faces_per_comp.iter().sum::<usize>() + 1).saturating_sub(c.max(1));
    let lhs = g.n() as i64 - g.edge_count() as i64 + f as i64;
    if c > 0 && lhs != 1 + c as i64 {
        return Err(format!("V - E + F = {lhs}, expected {}", 1 + c));
    }
    Ok(f)
}

/// Rotation system of a planar embedding, or `None` when `g` is nonplanar.
fn embed(g: &Graph) -> Option<Vec<Vec<usize>>> {
    if exceeds_edge_bound(g.n(), &g.edges()) {
        return None;
    }
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        let local = embed_block(&block)?;
        for (v, cyc) in local {
            rotation[v].extend(cyc);
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected blocks of `g`.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut idx)) = frames.last_mut() {
            if *idx < g.degree(u) {
                let w = g.neighbors(u)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(p, _, _)) = frames.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one biconnected block; returns each block vertex's cyclic neighbor
/// order within the block, starting from its smallest neighbor.
fn embed_block(edges: &[(usize, usize)]) -> Option<Vec<(usize, Vec<usize>)>> {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let m = verts.len();
    let id = |x: usize| verts.binary_search(&x).unwrap();
    let mut adj = vec![Vec::new(); m];
    for &(u, v) in edges {
        adj[id(u)].push(id(v));
        adj[id(v)].push(id(u));
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    if edges.len() == 1 {
        return Some(vec![(verts[0], vec![verts[1]]), (verts[1], vec![verts[0]])]);
    }

    let mut in_h = vec![false; m];
    let mut h_edge = vec![vec![false; m]; m];
    let mut h_edges = 0;
    let mut add_path = |path: &[usize], in_h: &mut Vec<bool>, h_edge: &mut Vec<Vec<bool>>| {
        for w in path.windows(2) {
            h_edge[w[0]][w[1]] = true;
            h_edge[w[1]][w[0]] = true;
            h_edges += 1;
        }
        for &x in path {
            in_h[x] = true;
        }
        h_edges
    };

    let cycle = find_cycle(&adj)?;
    let mut closed = cycle.clone();
    closed.push(cycle[0]);
    let mut embedded = add_path(&closed, &mut in_h, &mut h_edge);
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle.iter().rev().copied().collect()];

    while embedded < edges.len() {
        let fragments = fragments(&adj, &in_h, &h_edge);
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.attachments.iter().all(|a| face.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("an unembedded edge implies a fragment");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
        embedded = add_path(&path, &mut in_h, &mut h_edge);
    }

    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for face in &faces {
        let l = face.len();
        for i in 0..l {
            succ.insert((face[(i + 1) % l], face[i]), face[(i + 2) % l]);
        }
    }
    let mut out = Vec::with_capacity(m);
    for v in 0..m {
        let start = adj[v][0];
        let mut cyc = vec![verts[start]];
        let mut cur = succ[&(v, start)];
        while cur != start {
            cyc.push(verts[cur]);
            cur = succ[&(v, cur)];
        }
        if cyc.len() != adj[v].len() {
            return None;
        }
        out.push((verts[v], cyc));
    }
    Some(out)
}

/// Any cycle in a graph where every vertex has degree at least 2.
fn find_cycle(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let m = adj.len();
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![usize::MAX; m];
    depth[0] = 0;
    let mut stack = vec![(0usize, 0usize)];
    while let Some(&mut (u, ref mut idx)) = stack.last_mut() {
        if *idx == adj[u].len() {
            stack.pop();
            continue;
        }
        let w = adj[u][*idx];
        *idx += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            stack.push((w, 0));
        } else if w != parent[u] && depth[w] < depth[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return Some(cycle);
        }
    }
    None
}

struct Fragment {
    /// Interior vertices; empty for a chord between two embedded vertices.
    interior: Vec<usize>,
    attachments: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[Vec<bool>]) -> Vec<Fragment> {
    let m = adj.len();
    let mut out = Vec::new();
    for u in 0..m {
        if in_h[u] {
            for &v in &adj[u] {
                if u < v && in_h[v] && !h_edge[u][v] {
                    out.push(Fragment { interior: Vec::new(), attachments: vec![u, v] });
                }
            }
        }
    }
    let mut seen = vec![false; m];
    for s in 0..m {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut head = 0;
        while head < interior.len() {
            let u = interior[head];
            head += 1;
            for &w in &adj[u] {
                if in_h[w] {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { interior, attachments });
    }
    out
}

/// A path through `frag` joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let a = frag.attachments[0];
    let start = *adj[a].iter().find(|&&w| !in_h[w] && frag.interior.contains(&w)).expect("attachment touches fragment");
    let mut prev: HashMap<usize, usize> = HashMap::new();
    prev.insert(start, usize::MAX);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if let Some(&b) = adj[u].iter().find(|&&w| in_h[w] && w != a) {
            let mut path = vec![b, u];
            let mut x = u;
            while prev[&x] != usize::MAX {
                x = prev[&x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[u] {
            if !in_h[w] && !prev.contains_key(&w) {
                prev.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Splits a face along a path whose endpoints lie on it, keeping dart orientation.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let l = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let ia = face.iter().position(|&x| x == a).unwrap();
    let ib = face.iter().position(|&x| x == b).unwrap();
    let walk = |from: usize, to: usize| {
        let mut out = vec![face[from]];
        let mut i = from;
        while i != to {
            i = (i + 1) % l;
            out.push(face[i]);
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut f1 = walk(ia, ib);
    f1.extend(inner.iter().rev());
    let mut f2 = walk(ib, ia);
    f2.extend(inner.iter());
    (f1, f2)
}

/// Edges of a Kuratowski subdivision inside nonplanar `g`, sorted.
fn kuratowski_edges(g: &Graph) -> Vec<(usize, usize)> {
    if let Some(edges) = find_k33_subgraph(g) {
        return edges;
    }
    let mut current = g.edges();
    let mut i = 0;
    while i < current.len() {
        let mut trial = current.clone();
        trial.remove(i);
        if !planar_edges(g.n(), &trial) {
            current = trial;
        } else {
            i += 1;
        }
    }
    current
}

fn planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    if exceeds_edge_bound(n, edges) {
        return false;
    }
    let h = Graph::from_edges(n, edges).expect("subset of a simple graph");
    embed(&h).is_some()
}

/// A `K3,3` subgraph: three vertices with three common neighbors.
fn find_k33_subgraph(g: &Graph) -> Option<Vec<(usize, usize)>> {
    let n = g.n();
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    for (i, &a) in candidates.iter().enumerate() {
        for (j, &b) in candidates.iter().enumerate().skip(i + 1) {
            if g.common_neighbor_count(&[a, b]) < 3 {
                continue;
            }
            for &c in &candidates[j + 1..] {
                if g.common_neighbor_count(&[a, b, c]) >= 3 {
                    let common: Vec<usize> = g
                        .neighbors(a)
                        .iter()
                        .copied()
                        .filter(|&w| g.has_edge(b, w) && g.has_edge(c, w))
                        .take(3)
                        .collect();
                    let mut edges: Vec<(usize, usize)> = [a, b, c]
                        .iter()
                        .flat_map(|&x| common.iter().map(move |&y| (x.min(y), x.max(y))))
                        .collect();
                    edges.sort_unstable();
                    return Some(edges);
                }
            }
        }
    }
    None
}

/// Checks that `edges` (all edges of `g`) form a subdivision of `K5` or `K3,3`.
/// Returns the kind and the sorted branch vertices.
pub fn verify_subdivision(g: &Graph, edges: &[(usize, usize)]) -> Result<(KuratowskiKind, Vec<usize>), String> {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    let mut seen = std::collections::HashSet::new();
    for &(u, v) in edges {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(format!("({u},{v}) is not an edge of the graph"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(format!("edge ({u},{v}) listed twice"));
        }
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    let mut branch: Vec<usize> = adj.iter().filter(|(_, l)| l.len() >= 3).map(|(&v, _)| v).collect();
    branch.sort_unstable();
    if adj.values().any(|l| l.len() < 2) {
        return Err("witness has a vertex of degree below 2".into());
    }
    let kind = match (branch.len(), branch.iter().map(|v| adj[v].len()).max()) {
        (5, Some(4)) if branch.iter().all(|v| adj[v].len() == 4) => KuratowskiKind::K5,
        (6, Some(3)) if branch.iter().all(|v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return Err(format!("degree profile does not match K5 or K3,3 ({} branch vertices)", branch.len())),
    };

    let is_branch = |v: usize| branch.binary_search(&v).is_ok();
    let mut covered = std::collections::HashSet::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for &s in &branch {
        for &first in &adj[&s] {
            let (mut prev, mut cur) = (s, first);
            covered.insert((s.min(first), s.max(first)));
            while !is_branch(cur) {
                let next = *adj[&cur].iter().find(|&&w| w != prev).unwrap();
                covered.insert((cur.min(next), cur.max(next)));
                (prev, cur) = (cur, next);
            }
            if cur == s {
                return Err(format!("path from {s} returns to itself"));
            }
            if s < cur {
                pairs.push((s, cur));
            }
        }
    }
    if covered.len() != edges.len() {
        return Err("witness contains edges off the branch paths".into());
    }
    pairs.sort_unstable();
    let before = pairs.len();
    pairs.dedup();
    if pairs.len() != before {
        return Err("two paths join the same branch pair".into());
    }
    match kind {
        KuratowskiKind::K5 => {
            if pairs.len() != 10 {
                return Err("branch paths do not form K5".into());
            }
        }
        KuratowskiKind::K33 => {
            let contracted = Graph::from_edges(
                6,
                &pairs
                    .iter()
                    .map(|&(u, v)| (branch.binary_search(&u).unwrap(), branch.binary_search(&v).unwrap()))
                    .collect::<Vec<_>>(),
            )
            .map_err(|e| e.to_string())?;
            let sides = super::metric::two_coloring(&contracted).ok_or("branch paths contain an odd cycle")?;
            if pairs.len() != 9 || sides.iter().filter(|&&s| s == 0).count() != 3 {
                return Err("branch paths do not form K3,3".into());
            }
        }
    }
    Ok((kind, branch))
}
