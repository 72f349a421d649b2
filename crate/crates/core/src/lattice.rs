//! Subgroup enumeration.
//!
//! All cyclic subgroups are generated first; the lattice is then saturated
//! by joining every discovered subgroup with every cyclic subgroup until no
//! new subgroup appears. Every subgroup is a join of cyclic subgroups, so
//! this fixed point is the full lattice.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

pub use crate::numtheory::pi;

/// Default bound on the order of groups whose lattice is enumerated.
pub const DEFAULT_LATTICE_BOUND: usize = 2048;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
    parent_order: usize,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Sorted element ids.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupList {
    all: Vec<Subgroup>,
    counts_by_order: BTreeMap<usize, usize>,
}

impl SubgroupList {
    /// Subgroups sorted by `(order, elements)`.
    pub fn all(&self) -> &[Subgroup] {
        &self.all
    }

    pub fn counts_by_order(&self) -> &BTreeMap<usize, usize> {
        &self.counts_by_order
    }

    pub fn len(&self) -> usize {
        self.all.len()
    }

    pub fn is_empty(&self) -> bool {
        self.all.is_empty()
    }

    pub fn group_order(&self) -> usize {
        self.all.last().map_or(0, Subgroup::order)
    }

    pub fn count_of_order(&self, order: usize) -> usize {
        self.counts_by_order.get(&order).copied().unwrap_or(0)
    }

    /// `{group_order, total, counts_by_order: {"d": count}}`, for snapshots.
    pub fn counts_json(&self) -> serde_json::Value {
        let counts: serde_json::Map<String, serde_json::Value> =
            self.counts_by_order.iter().map(|(k, v)| (k.to_string(), (*v).into())).collect();
        serde_json::json!({
            "group_order": self.group_order(),
            "total": self.len(),
            "counts_by_order": counts,
        })
    }
}

/// Subgroups `H` with `1 < |H| < |G|`, in lattice order.
pub fn proper_nontrivial(sl: &SubgroupList) -> Vec<Subgroup> {
    sl.all.iter().filter(|h| !h.is_trivial() && !h.is_whole()).cloned().collect()
}

/// Whether `elements` is a subgroup: nonempty, contains the identity and is
/// closed under products and inverses.
pub fn is_subgroup(g: &FiniteGroup, elements: &[usize]) -> bool {
    if elements.is_empty() {
        return false;
    }
    let mut member = vec![false; g.order()];
    for &x in elements {
        if x >= g.order() {
            return false;
        }
        member[x] = true;
    }
    member[g.identity()]
        && elements.iter().all(|&a| member[g.inverse(a)])
        && elements.iter().all(|&a| elements.iter().all(|&b| member[g.mul(a, b)]))
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn to_vec(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut word = word;
            while word != 0 {
                out.push(w * 64 + word.trailing_zeros() as usize);
                word &= word - 1;
            }
        }
        out
    }
}

/// Subgroup generated by `gens`, by breadth-first right multiplication.
fn generate(g: &FiniteGroup, gens: &[usize]) -> Bits {
    let mut set = Bits::new(g.order());
    let e = g.identity();
    set.set(e);
    let mut queue = vec![e];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !set.get(y) {
                set.set(y);
                queue.push(y);
            }
        }
    }
    set
}

pub fn all_subgroups(g: &FiniteGroup) -> Result<SubgroupList> {
    all_subgroups_bounded(g, DEFAULT_LATTICE_BOUND)
}

pub fn all_subgroups_bounded(g: &FiniteGroup, bound: usize) -> Result<SubgroupList> {
    if g.order() > bound {
        return Err(Error::CapExceeded { what: "lattice group order", size: g.order(), cap: bound });
    }

    let mut found: Vec<(Bits, Vec<usize>)> = Vec::new();
    let mut index: HashMap<Bits, usize> = HashMap::new();
    let mut cyclic_gens: Vec<usize> = Vec::new();

    let mut insert = |bits: Bits, gens: Vec<usize>, found: &mut Vec<(Bits, Vec<usize>)>| -> Option<usize> {
        if index.contains_key(&bits) {
            return None;
        }
        index.insert(bits.clone(), found.len());
        found.push((bits, gens));
        Some(found.len() - 1)
    };

    for a in g.elements() {
        let bits = generate(g, &[a]);
        if insert(bits, vec![a], &mut found).is_some() {
            cyclic_gens.push(a);
        }
    }

    let mut worklist: VecDeque<usize> = (0..found.len()).collect();
    while let Some(h) = worklist.pop_front() {
        for &c in &cyclic_gens {
            if found[h].0.get(c) {
                continue;
            }
            let mut gens = found[h].1.clone();
            gens.push(c);
            let bits = generate(g, &gens);
            if let Some(idx) = insert(bits, gens, &mut found) {
                worklist.push_back(idx);
            }
        }
    }

    let mut all: Vec<Subgroup> = found
        .into_iter()
        .map(|(bits, _)| Subgroup { elements: bits.to_vec(), parent_order: g.order() })
        .collect();
    all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));

    let mut counts_by_order = BTreeMap::new();
    for h in &all {
        debug_assert!(g.order().is_multiple_of(h.order()), "Lagrange violated");
        *counts_by_order.entry(h.order()).or_insert(0) += 1;
    }
    Ok(SubgroupList { all, counts_by_order })
}
