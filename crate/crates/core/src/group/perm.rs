use std::collections::HashMap;
use std::fmt;

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Closure bound used when no explicit bound is configured.
pub const DEFAULT_CLOSURE_BOUND: usize = 2048;

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation of 0..{n}")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1], [2, 3]]` for `(0 1)(2 3)`.
    ///
    /// Cycles are applied right to left, so overlapping cycles compose like
    /// ordinary cycle products.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut perm = Permutation::identity(degree);
        for cycle in cycles.iter().rev() {
            let mut seen = std::collections::HashSet::new();
            for &x in cycle {
                if x as usize >= degree {
                    return Err(Error::InvalidArgument(format!("cycle entry {x} out of range for degree {degree}")));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidArgument(format!("cycle {cycle:?} repeats {x}")));
                }
            }
            let mut c = Permutation::identity(degree);
            for (idx, &x) in cycle.iter().enumerate() {
                c.0[x as usize] = cycle[(idx + 1) % cycle.len()];
            }
            perm = c.compose(&perm);
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x] as usize;
            }
            let body: Vec<String> = cycle.iter().map(|c| c.to_string()).collect();
            write!(f, "({})", body.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Closure of `gens` under composition, as a multiplication table.
///
/// Elements are discovered breadth-first from the identity (which gets id 0)
/// by right-multiplying with each generator in order, so the numbering is
/// deterministic.
pub fn permutation_group(degree: usize, gens: &[Permutation], bound: usize) -> Result<FiniteGroup> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidArgument(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
    }
    let mut elements = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, u32> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in gens {
            let y = x.compose(g);
            if !index.contains_key(&y) {
                if elements.len() == bound {
                    return Err(Error::CapExceeded { what: "permutation closure", size: bound + 1, cap: bound });
                }
                index.insert(y.clone(), elements.len() as u32);
                elements.push(y);
            }
        }
    }
    let order = elements.len();
    let mut table = Vec::with_capacity(order * order);
    for a in &elements {
        for b in &elements {
            table.push(index[&a.compose(b)]);
        }
    }
    let names: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
    FiniteGroup::from_table(format!("PERM:{degree}:{}", names.join(",")), order, table)
}
