//! Checks that hold for every group, whatever its catalog expectations.

use serde_json::{json, Value};

use super::report::Row;
use super::Computed;
use crate::analysis::{is_proper_coloring, Extended};
use crate::numtheory::{factorize, is_prime_power, pi};

pub const UNIVERSAL_CHECKS: &[&str] = &[
    "alpha_max_prime_class",
    "bipartite_iff_two_primes",
    "chi_eq_prime_count",
    "connected_diameter_at_most_3",
    "connectivity_criterion",
    "girth_in_3_4_inf",
    "k33_implies_nonplanar",
    "not_a_cycle",
    "null_iff_prime_power",
    "omega_eq_prime_count",
    "pi_full_isolated",
    "planarity_certificate",
    "prime_class_coloring",
    "prime_power_square_planarity",
    "sylow_counts",
];

pub fn checks(group: &str, c: &Computed) -> Vec<Row> {
    let r = &c.report;
    let n = c.graph.group_order();
    let primes: Vec<u64> = pi(n).into_iter().collect();
    let k = primes.len();
    let g = c.graph.graph();
    let support = |v: usize| pi(c.graph.order_of(v));
    let pi_full: Vec<usize> = (0..g.n()).filter(|&v| support(v).len() == k).collect();

    let mut rows = Vec::new();
    let mut push = |check: &str, expected: Value, computed: Value, pass: bool| {
        rows.push(Row::new(group, check, expected, computed, pass));
    };
    let eq = |push: &mut dyn FnMut(&str, Value, Value, bool), check: &str, expected: Value, computed: Value| {
        let pass = expected == computed;
        push(check, expected, computed, pass);
    };

    let girth = serde_json::to_value(r.girth).unwrap();
    let girth_ok = matches!(r.girth, Extended::Finite(3 | 4) | Extended::Infinite);
    push("girth_in_3_4_inf", json!([3, 4, "inf"]), girth, girth_ok);
    eq(&mut push, "not_a_cycle", json!(false), json!(r.predicates.cycle));
    eq(&mut push, "omega_eq_prime_count", json!(k), json!(r.omega));
    eq(&mut push, "chi_eq_prime_count", json!(k), json!(r.chi));
    eq(&mut push, "bipartite_iff_two_primes", json!(k <= 2), json!(r.is_bipartite));
    eq(&mut push, "null_iff_prime_power", json!(is_prime_power(n)), json!(r.predicates.null));
    eq(&mut push, "connectivity_criterion", json!(pi_full.is_empty()), json!(r.is_connected));

    if r.is_connected {
        let d = serde_json::to_value(r.diameter).unwrap();
        let ok = matches!(r.diameter, Extended::Finite(1..=3));
        push("connected_diameter_at_most_3", json!("<= 3"), d, ok);
    }

    // Subgroups using every prime are isolated; the rest form one component.
    let isolated_ok = pi_full.iter().all(|&v| g.degree(v) == 0);
    let rest: Vec<usize> = (0..g.n()).filter(|v| !pi_full.contains(v)).collect();
    let rest_connected = crate::analysis::is_connected(&g.induced(&rest));
    eq(&mut push, "pi_full_isolated", json!(true), json!(isolated_ok && rest_connected));

    // Color each vertex by the smallest prime dividing its order.
    let coloring: Vec<usize> = (0..g.n())
        .map(|v| {
            let p = *support(v).iter().next().expect("vertex orders exceed 1");
            primes.iter().position(|&q| q == p).unwrap()
        })
        .collect();
    let used = coloring.iter().collect::<std::collections::BTreeSet<_>>().len();
    let ok = is_proper_coloring(g, &coloring) && used <= k;
    eq(&mut push, "prime_class_coloring", json!(true), json!(ok));

    let largest_class = primes
        .iter()
        .map(|&p| (0..g.n()).filter(|&v| c.graph.order_of(v).is_multiple_of(p)).count())
        .max()
        .unwrap_or(0);
    eq(&mut push, "alpha_max_prime_class", json!(largest_class), json!(r.alpha));

    let verdict = match r.planarity.verify(g) {
        Ok(()) => json!("verified"),
        Err(e) => json!(e),
    };
    eq(&mut push, "planarity_certificate", json!("verified"), verdict);

    let k33 = r.contains("K3,3").unwrap_or(false);
    eq(&mut push, "k33_implies_nonplanar", json!(true), json!(!k33 || !r.is_planar()));

    eq(&mut push, "sylow_counts", json!(true), json!(sylow_counts_ok(c)));

    if let Some(expected) = prime_power_square_planarity(c) {
        eq(&mut push, "prime_power_square_planarity", json!(expected), json!(r.is_planar()));
    }
    rows
}

fn subgroups_of_order(c: &Computed, order: u64) -> usize {
    if order == c.graph.group_order() {
        1
    } else {
        c.graph.vertices_of_order(order).len()
    }
}

/// `n_p ≡ 1 (mod p)` and `n_p` divides the index of a Sylow `p`-subgroup.
fn sylow_counts_ok(c: &Computed) -> bool {
    let n = c.graph.group_order();
    factorize(n).into_iter().all(|(p, a)| {
        let sylow = p.pow(a);
        let count = subgroups_of_order(c, sylow) as u64;
        count % p == 1 && (n / sylow).is_multiple_of(count)
    })
}

/// For `|G| = p^a q^2` with `a >= 3`: planar exactly when the Sylow
/// `q`-subgroup is unique and cyclic. `None` when the order has another shape.
fn prime_power_square_planarity(c: &Computed) -> Option<bool> {
    let f = factorize(c.graph.group_order());
    let [(p, a), (q, b)] = f.as_slice() else { return None };
    let q = match (*a, *b) {
        (a, 2) if a >= 3 => *q,
        (2, b) if b >= 3 => *p,
        _ => return None,
    };
    let unique = subgroups_of_order(c, q * q) == 1;
    let cyclic = c.group.elements().any(|x| c.group.element_order(x) as u64 == q * q);
    Some(unique && cyclic)
}
