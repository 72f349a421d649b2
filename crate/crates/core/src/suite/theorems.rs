//! Checks over whole families: the connectivity criterion, the degree formula
//! for cyclic groups and the embedding into cyclic coprime graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::report::{Row, VerificationReport};
use crate::analysis::{diameter, is_connected, Extended};
use crate::coprime::{degree_formula, CoprimeGraph};
use crate::embed::{embed_with_cap, verify_embedding, DEFAULT_MIS_CAP};
use crate::error::Result;
use crate::graph::Graph;
use crate::group::FiniteGroup;
use crate::numtheory::{is_prime, pi};

/// Seed used by [`check_embedding_theorem`].
pub const EMBEDDING_SEED: u64 = 0x5eed_c0de;

/// `P(G)` is connected exactly when no proper subgroup has an order divisible
/// by every prime dividing `|G|`; when connected its diameter is at most 3.
pub fn check_connectivity_criterion(g: &FiniteGroup) -> Result<bool> {
    let p = CoprimeGraph::build(g)?;
    let full = pi(p.group_order());
    let no_full_subgroup = p.vertices().iter().all(|v| pi(v.order) != full);
    let connected = is_connected(p.graph());
    let diameter_ok = !connected || matches!(diameter(p.graph()), Extended::Finite(1..=3));
    Ok(connected == no_full_subgroup && diameter_ok)
}

/// Compares the closed-form degree of every vertex of `P(Z_n)` with a direct
/// count, for every composite `4 <= n <= n_max`. One row per `n`.
pub fn check_degree_theorem(n_max: u64) -> VerificationReport {
    let mut rows = Vec::new();
    for n in 4..=n_max {
        if is_prime(n) {
            continue;
        }
        let p = CoprimeGraph::build_cyclic(n).expect("composite order");
        let mut expected = BTreeMap::new();
        let mut counted = BTreeMap::new();
        for v in p.vertices() {
            let formula = degree_formula(n, v.order).expect("vertex order is a proper divisor");
            expected.insert(v.order.to_string(), json!(formula));
            counted.insert(v.order.to_string(), json!(p.graph().degree(v.id)));
        }
        let pass = expected == counted;
        rows.push(Row::new(&format!("Z:{n}"), "degree_formula", json!(expected), json!(counted), pass));
    }
    VerificationReport::from_rows(rows)
}

pub fn check_embedding_theorem(trials: usize, n_max_vertices: usize) -> VerificationReport {
    check_embedding_theorem_with_seed(trials, n_max_vertices, EMBEDDING_SEED)
}

/// Embeds and verifies every labeled graph on 1 to 5 vertices, then `trials`
/// random graphs with 1 to `n_max_vertices` vertices and edge density drawn
/// uniformly from [0, 1].
pub fn check_embedding_theorem_with_seed(trials: usize, n_max_vertices: usize, seed: u64) -> VerificationReport {
    let cap = n_max_vertices.max(DEFAULT_MIS_CAP);
    let ok = |g: &Graph| embed_with_cap(g, cap).map(|cert| verify_embedding(g, &cert)).unwrap_or(false);
    let mut rows = Vec::new();

    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let total = 1usize << pairs.len();
        let verified = (0..total)
            .filter(|mask| {
                let edges: Vec<(usize, usize)> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                ok(&Graph::from_edges(n, &edges).expect("valid edges"))
            })
            .count();
        let group = format!("all graphs on {n} vertices");
        rows.push(Row::new(&group, "embedding", json!(total), json!(verified), verified == total));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let n = rng.gen_range(1..=n_max_vertices.max(1));
        let density: f64 = rng.gen();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(n, &edges).expect("valid edges");
        let group = format!("random #{trial:03} (n={n}, m={})", g.edge_count());
        let pass = ok(&g);
        rows.push(Row::new(&group, "embedding", json!(true), json!(pass), pass));
    }
    VerificationReport::from_rows(rows)
}
