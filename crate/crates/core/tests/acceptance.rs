//! The twelve acceptance criteria. Runs without the libtest harness so that
//! every criterion prints exactly one PASS or FAIL line, even when an earlier
//! one fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::str::FromStr;
use std::time::{Duration, Instant};

use coprime_core::analysis::{
    analyze, chromatic_number, clique_number, contains_complete_bipartite, diameter, girth, independence_number,
    is_bipartite, planarity, small_graph_isomorphic, AnalysisOptions, AnalysisReport, CoreShape, Extended,
    PlanarityCertificate,
};
use coprime_core::embed::{embed, verify_embedding};
use coprime_core::group::GroupSpec;
use coprime_core::lattice::all_subgroups;
use coprime_core::numtheory::pi;
use coprime_core::suite::{check_connectivity_criterion, check_degree_theorem, default_catalog, SUITE_EXACT_CAP};
use coprime_core::{CoprimeGraph, FiniteGroup, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn group(spec: &str) -> FiniteGroup {
    GroupSpec::from_str(spec).unwrap().build(1000).unwrap()
}

fn coprime_graph(spec: &str) -> CoprimeGraph {
    match spec.strip_prefix("Z:") {
        Some(n) => CoprimeGraph::build_cyclic(n.parse().unwrap()).unwrap(),
        None => CoprimeGraph::build(&group(spec)).unwrap(),
    }
}

/// Catalog groups of order at most 200, with their coprime graphs and analyses.
fn catalog() -> Vec<(String, FiniteGroup, CoprimeGraph, AnalysisReport)> {
    default_catalog()
        .unwrap()
        .into_iter()
        .filter(|e| e.spec.nominal_order().unwrap().is_some_and(|n| n <= 200))
        .map(|e| {
            let g = e.spec.build(200).unwrap();
            let p = CoprimeGraph::build(&g).unwrap();
            let r = analyze(p.graph(), AnalysisOptions { exact_cap: SUITE_EXACT_CAP }).unwrap();
            (e.spec.to_string(), g, p, r)
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let p = coprime_graph("A4");
    ensure(small_graph_isomorphic(p.graph(), &Graph::complete_bipartite(4, 4)).unwrap(), "P(A4) is not K4,4")?;
    Ok("P(A4) is isomorphic to K4,4".into())
}

fn criterion_2() -> Outcome {
    let p = coprime_graph("D12");
    let expected = Graph::complete_bipartite(1, 10).disjoint_union(&Graph::empty(3));
    ensure(small_graph_isomorphic(p.graph(), &expected).unwrap(), "P(D12) is not K1,10 + 3K1")?;
    Ok("P(D12) is K1,10 plus 3 isolated vertices".into())
}

fn criterion_3() -> Outcome {
    let p = coprime_graph("Z:36");
    let expected = Graph::complete_bipartite(2, 2).disjoint_union(&Graph::empty(3));
    ensure(small_graph_isomorphic(p.graph(), &expected).unwrap(), "P(Z36) is not K2,2 + 3K1")?;
    let r = analyze(p.graph(), AnalysisOptions::default()).unwrap();
    ensure(r.is_unicyclic, "P(Z36) is not unicyclic")?;
    Ok("P(Z36) is K2,2 plus 3 isolated vertices and unicyclic".into())
}

fn criterion_4() -> Outcome {
    let report = check_degree_theorem(1000);
    let mismatches: Vec<&str> = report.failures().map(|r| r.group.as_str()).collect();
    ensure(mismatches.is_empty(), format!("degree mismatches at {mismatches:?}"))?;
    let vertices: usize = report.rows.iter().map(|r| r.expected.as_object().unwrap().len()).sum();
    Ok(format!("{} composite n <= 1000, {vertices} vertices, 0 mismatches", report.rows.len()))
}

fn criterion_5() -> Outcome {
    let entries = catalog();
    ensure(entries.len() >= 30, format!("only {} catalog groups", entries.len()))?;
    for (name, _, p, r) in &entries {
        ensure(
            matches!(r.girth, Extended::Finite(3) | Extended::Finite(4) | Extended::Infinite),
            format!("{name}: girth {:?}", r.girth),
        )?;
        let whole_cycle = r.shape.isolated_count == 0 && matches!(r.shape.core, CoreShape::Cycle { .. });
        ensure(!whole_cycle && !r.predicates.cycle, format!("{name}: P(G) is a cycle"))?;
        ensure(girth(p.graph()) == r.girth, format!("{name}: girth recomputation differs"))?;
    }
    Ok(format!("{} catalog groups, girth in {{3,4,inf}}, none a cycle", entries.len()))
}

fn criterion_6() -> Outcome {
    let entries = catalog();
    for (name, g, p, r) in &entries {
        ensure(check_connectivity_criterion(g).unwrap(), format!("{name}: connectivity criterion fails"))?;
        if r.is_connected {
            ensure(matches!(r.diameter, Extended::Finite(1..=3)), format!("{name}: diameter {:?}", r.diameter))?;
        }
        ensure(diameter(p.graph()) == r.diameter, format!("{name}: diameter recomputation differs"))?;
    }
    for (spec, d) in [("Z:6", 1), ("A4", 2), ("Z:30", 3)] {
        let got = diameter(coprime_graph(spec).graph());
        ensure(got == Extended::Finite(d), format!("diam P({spec}) = {got:?}, expected {d}"))?;
    }
    Ok(format!("{} catalog groups; witnesses diam 1, 2, 3 for Z6, A4, Z30", entries.len()))
}

fn criterion_7() -> Outcome {
    let entries = catalog();
    for (name, g, p, r) in &entries {
        let k = pi(g.order() as u64).len();
        ensure(r.omega == k && r.chi == k, format!("{name}: omega {} chi {} but |pi| = {k}", r.omega, r.chi))?;
        ensure(is_bipartite(p.graph()) == (k <= 2), format!("{name}: bipartite differs from |pi| <= 2"))?;
    }
    Ok(format!("{} catalog groups, omega = chi = |pi(G)|, bipartite iff |pi(G)| <= 2", entries.len()))
}

fn describe(cert: &PlanarityCertificate) -> String {
    match cert {
        PlanarityCertificate::Planar { .. } => "planar".into(),
        PlanarityCertificate::NonPlanar { subdivision_of, .. } => format!("nonplanar ({subdivision_of:?} subdivision)"),
    }
}

fn criterion_8() -> Outcome {
    let mut problems = Vec::new();
    let cases = [
        ("Z:210", true),
        ("Z:60", true),
        ("Z:420", false),
        ("S3xS3", false),
        ("Z3xA4", false),
        ("Z3Z3sZ4", false),
    ];
    for (spec, want_planar) in cases {
        let p = coprime_graph(spec);
        let cert = planarity(p.graph());
        if let Err(e) = cert.verify(p.graph()) {
            problems.push(format!("{spec}: certificate does not verify: {e}"));
        }
        if cert.is_planar() != want_planar {
            let want = if want_planar { "planar" } else { "nonplanar" };
            problems.push(format!("{spec}: expected {want}, found verified {}", describe(&cert)));
        }
    }
    ensure(problems.is_empty(), problems.join("; "))?;
    Ok("2 planar with verified rotation systems, 4 nonplanar with verified Kuratowski subdivisions".into())
}

fn criterion_9() -> Outcome {
    let mut problems = Vec::new();
    let cases = [
        ("D12", 2, 2, false),
        ("D12", 1, 4, true),
        ("S3", 1, 4, false),
        ("Z:6", 1, 2, false),
        ("Z:30", 2, 2, false),
        ("Z:30", 1, 3, false),
    ];
    for (spec, a, b, want) in cases {
        let p = coprime_graph(spec);
        let found = contains_complete_bipartite(p.graph(), a, b).unwrap();
        if found != want {
            let verb = if found { "contains" } else { "is free of" };
            problems.push(format!("P({spec}) {verb} K{a},{b}"));
        }
    }
    ensure(problems.is_empty(), problems.join("; "))?;
    Ok("all six containment clauses hold".into())
}

fn criterion_10() -> Outcome {
    let mut small = 0;
    for n in 1..=5usize {
        for mask in 0u64..1 << (n * (n - 1) / 2) {
            let g = common::graph_from_mask(n, mask);
            ensure(verify_embedding(&g, &embed(&g).unwrap()), format!("n {n} mask {mask}"))?;
            small += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x00ac_ce97);
    for trial in 0..200 {
        let n = rng.gen_range(7..=12);
        let density: f64 = rng.gen();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        ensure(verify_embedding(&g, &embed(&g).unwrap()), format!("random graph {trial}"))?;
    }
    Ok(format!("{small} labeled graphs on 1 to 5 vertices and 200 random graphs on 7 to 12 vertices"))
}

fn criterion_11() -> Outcome {
    let z32 = coprime_graph("Z:32");
    let q8 = coprime_graph("Q8");
    let null4 = Graph::empty(4);
    ensure(small_graph_isomorphic(z32.graph(), &null4).unwrap(), "P(Z32) is not 4K1")?;
    ensure(small_graph_isomorphic(q8.graph(), &null4).unwrap(), "P(Q8) is not 4K1")?;
    let (g1, g2) = (group("Z:32"), group("Q8"));
    ensure(g1.order() != g2.order() && g1.is_abelian() && !g2.is_abelian(), "groups coincide")?;
    Ok("P(Z32) = P(Q8) = 4K1 for non-isomorphic groups".into())
}

fn criterion_12() -> Outcome {
    let mut groups = 0;
    for entry in default_catalog().unwrap() {
        if entry.spec.nominal_order().unwrap().is_some_and(|n| n > 24) {
            continue;
        }
        let g = entry.spec.build(24).unwrap();
        let ours: BTreeSet<Vec<usize>> = all_subgroups(&g).unwrap().all().iter().map(|h| h.elements().to_vec()).collect();
        let oracle = if g.order() <= 16 {
            common::subgroups_by_subsets(&g)
        } else {
            common::subgroups_by_generator_subsets(&g)
        };
        ensure(ours == oracle, format!("{}: subgroup lattice differs from brute force", entry.spec))?;
        groups += 1;
    }

    let mut graphs: Vec<(String, Graph)> = catalog()
        .into_iter()
        .filter(|(_, _, p, _)| p.graph().n() <= 12)
        .map(|(name, _, p, _)| (name, p.graph().clone()))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..150 {
        let n = rng.gen_range(1..=12);
        let density: f64 = rng.gen();
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(density)).collect();
        graphs.push((format!("random {i}"), Graph::from_edges(n, &edges).unwrap()));
    }
    for (name, g) in &graphs {
        ensure(independence_number(g, 64).unwrap() == common::independence_number(g), format!("{name}: alpha"))?;
        ensure(clique_number(g, 64).unwrap() == common::clique_number(g), format!("{name}: omega"))?;
        ensure(chromatic_number(g, 64).unwrap() == common::chromatic_number(g), format!("{name}: chi"))?;
    }
    Ok(format!("{groups} groups of order <= 24; alpha, omega, chi on {} graphs", graphs.len()))
}

fn main() -> ExitCode {
    let criteria: [(fn() -> Outcome, u64); 12] = [
        (criterion_1, 1),
        (criterion_2, 1),
        (criterion_3, 1),
        (criterion_4, 30),
        (criterion_5, 30),
        (criterion_6, 10),
        (criterion_7, 10),
        (criterion_8, 10),
        (criterion_9, 5),
        (criterion_10, 30),
        (criterion_11, 1),
        (criterion_12, 30),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(*limit) => Err(format!("took {elapsed:.2?}, limit {limit} s")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {detail} ({elapsed:.2?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {detail} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
