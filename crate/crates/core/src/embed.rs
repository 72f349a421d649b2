//! Realizing a simple graph as an induced subgraph of `P(Z_m)`.
//!
//! Each maximal independent set gets its own prime. A vertex is labelled by a
//! product of powers of the primes of the sets containing it, so two labels
//! are coprime exactly when no independent set holds both vertices, which is
//! exactly when they are adjacent. Vertices with the same set membership get
//! increasing exponents to keep labels distinct.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use serde_json::{json, Map, Number, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numtheory::primes;

/// Default vertex cap for maximal independent set enumeration.
pub const DEFAULT_MIS_CAP: usize = 20;

/// Parses an edge list: one `u v` pair per line, 0-indexed, with an optional
/// `n <count>` header. Blank lines and `#` comments are ignored. Without a
/// header the vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::Parse(format!("line {}: expected \"u v\" or \"n <count>\", got {raw:?}", lineno + 1));
        let num = |s: &str| usize::from_str(s).map_err(|_| bad());
        match fields.as_slice() {
            ["n", count] if declared.is_none() && edges.is_empty() => declared = Some(num(count)?),
            [u, v] => {
                let (u, v) = (num(u)?, num(v)?);
                if u == v {
                    return Err(Error::Parse(format!("line {}: self-loop at {u}", lineno + 1)));
                }
                edges.push((u, v));
            }
            _ => return Err(bad()),
        }
    }
    let inferred = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < inferred => {
            return Err(Error::Parse(format!("vertex id {} out of range for n {n}", inferred - 1)));
        }
        Some(n) => n,
        None => inferred,
    };
    Graph::from_edges(n, &edges)
}

/// All maximal independent sets, each sorted, in lexicographic order.
pub fn maximal_independent_sets(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.n() > cap {
        return Err(Error::CapExceeded { what: "independent set enumeration vertices", size: g.n(), cap });
    }
    let comp = g.complement();
    let mut out = Vec::new();
    bron_kerbosch(&comp, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut out);
    for set in &mut out {
        set.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() && x.is_empty() {
        if !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = *p
        .iter()
        .chain(&x)
        .max_by_key(|&&u| p.iter().filter(|&&v| g.has_edge(u, v)).count())
        .expect("p or x is nonempty");
    let branch: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
    for v in branch {
        r.push(v);
        let np = p.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| g.has_edge(v, w)).collect();
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingCertificate {
    /// `primes[i]` is assigned to `mis[i]`.
    pub primes: Vec<u64>,
    pub mis: Vec<Vec<usize>>,
    pub labels: Vec<BigUint>,
    pub modulus: BigUint,
}

fn big_number(x: &BigUint) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integer"))
}

impl EmbeddingCertificate {
    /// `{labels: {"v": int}, modulus: int, mis: [[v, ..], ..], primes: [p, ..]}`.
    pub fn to_json(&self) -> Value {
        let labels: Map<String, Value> =
            self.labels.iter().enumerate().map(|(v, l)| (v.to_string(), big_number(l))).collect();
        json!({
            "labels": labels,
            "modulus": big_number(&self.modulus),
            "mis": self.mis,
            "primes": self.primes,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("certificate: {what}"));
        let big = |v: &Value| -> Result<BigUint> {
            let text = match v {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                _ => return Err(bad("expected an integer")),
            };
            BigUint::from_str(&text).map_err(|_| bad("expected a nonnegative integer"))
        };
        let label_map = value.get("labels").and_then(Value::as_object).ok_or_else(|| bad("missing labels"))?;
        let mut indexed = BTreeMap::new();
        for (k, v) in label_map {
            indexed.insert(usize::from_str(k).map_err(|_| bad("label key is not a vertex id"))?, big(v)?);
        }
        if indexed.keys().copied().ne(0..indexed.len()) {
            return Err(bad("labels must cover vertices 0..n"));
        }
        let modulus = big(value.get("modulus").ok_or_else(|| bad("missing modulus"))?)?;
        let mis = match value.get("mis") {
            Some(v) => serde_json::from_value(v.clone()).map_err(|e| bad(&e.to_string()))?,
            None => Vec::new(),
        };
        let primes = match value.get("primes") {
            Some(v) => serde_json::from_value(v.clone()).map_err(|e| bad(&e.to_string()))?,
            None => Vec::new(),
        };
        Ok(EmbeddingCertificate { primes, mis, labels: indexed.into_values().collect(), modulus })
    }
}

pub fn embed(g: &Graph) -> Result<EmbeddingCertificate> {
    embed_with_cap(g, DEFAULT_MIS_CAP)
}

pub fn embed_with_cap(g: &Graph, cap: usize) -> Result<EmbeddingCertificate> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("cannot embed a graph with no vertices".into()));
    }
    let mis = maximal_independent_sets(g, cap)?;
    let assigned: Vec<u64> = primes().take(mis.len()).collect();

    let mut by_support: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut labels = Vec::with_capacity(g.n());
    for v in 0..g.n() {
        let support: Vec<usize> = (0..mis.len()).filter(|&i| mis[i].binary_search(&v).is_ok()).collect();
        let rank = by_support.entry(support.clone()).or_insert(0);
        *rank += 1;
        let exponent = *rank as u32;
        labels.push(support.iter().map(|&i| BigUint::from(assigned[i]).pow(exponent)).product::<BigUint>());
    }

    let mut modulus = labels.iter().fold(BigUint::from(1u32), |acc, l| acc.lcm(l));
    if labels.contains(&modulus) {
        modulus *= assigned[0];
    }
    let cert = EmbeddingCertificate { primes: assigned, mis, labels, modulus };
    assert!(verify_embedding(g, &cert), "embedding failed its own verification");
    Ok(cert)
}

/// Adjacency matches coprimality of labels, and every label is a distinct
/// proper nontrivial divisor of the modulus.
pub fn verify_embedding(g: &Graph, cert: &EmbeddingCertificate) -> bool {
    let one = BigUint::from(1u32);
    if cert.labels.len() != g.n() {
        return false;
    }
    for l in &cert.labels {
        if *l <= one || *l >= cert.modulus || !(&cert.modulus % l).eq(&BigUint::default()) {
            return false;
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if cert.labels[u] == cert.labels[v] {
                return false;
            }
            if g.has_edge(u, v) != (cert.labels[u].gcd(&cert.labels[v]) == one) {
                return false;
            }
        }
    }
    true
}
