//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense ids `0..order`. Every constructor in this module returns
//! a validated [`FiniteGroup`]: the table is a Latin square, the identity row
//! and column are the identity permutation and every element has an inverse.
//! Associativity is checked exhaustively for orders up to 256 in debug builds.

mod named;
mod perm;
mod spec;

pub use named::{named, NAMED_TAGS};
pub use perm::{permutation_group, Permutation, DEFAULT_CLOSURE_BOUND};
pub use spec::GroupSpec;

use crate::error::{Error, Result};
use crate::numtheory::{gcd, pow_mod};

/// Orders up to this bound get an exhaustive associativity check in debug builds.
pub const ASSOCIATIVITY_CHECK_BOUND: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    identity: usize,
    name: String,
}

impl FiniteGroup {
    /// Builds a group from a row-major multiplication table, `table[a * order + b] = a·b`.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidArgument("a group needs at least one element".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidArgument(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        let name = name.into();
        check_latin_square(order, &table).map_err(|e| Error::InvalidArgument(format!("{name}: {e}")))?;

        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| Error::InvalidArgument(format!("{name}: no two-sided identity")))?;

        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            // Latin rows guarantee a unique right inverse.
            let b = row.iter().position(|&x| x as usize == identity).unwrap();
            if table[b * order + a] as usize != identity {
                return Err(Error::InvalidArgument(format!("{name}: element {a} has no two-sided inverse")));
            }
            inverses[a] = b as u32;
        }

        let group = FiniteGroup { order, table, inverses, identity, name };
        if cfg!(debug_assertions) && order <= ASSOCIATIVITY_CHECK_BOUND && !group.is_associative() {
            return Err(Error::InvalidArgument(format!("{}: table is not associative", group.name)));
        }
        Ok(group)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Row `a` of the table: `row(a)[b] = a·b`.
    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element orders, sorted ascending.
    pub fn order_census(&self) -> Vec<usize> {
        let mut orders: Vec<usize> = self.elements().map(|a| self.element_order(a)).collect();
        orders.sort_unstable();
        orders
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        self.elements()
            .filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z)))
            .collect()
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for (c, &abc) in self.row(ab).iter().enumerate() {
                    if abc as usize != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn check_latin_square(order: usize, table: &[u32]) -> std::result::Result<(), String> {
    let mut seen = vec![0usize; order];
    for a in 0..order {
        let stamp = a + 1;
        for b in 0..order {
            let x = table[a * order + b] as usize;
            if x >= order {
                return Err(format!("entry ({a},{b}) = {x} out of range"));
            }
            if seen[x] == stamp {
                return Err(format!("row {a} repeats element {x}"));
            }
            seen[x] = stamp;
        }
    }
    seen.iter_mut().for_each(|s| *s = 0);
    for b in 0..order {
        let stamp = b + 1;
        for a in 0..order {
            let x = table[a * order + b] as usize;
            if seen[x] == stamp {
                return Err(format!("column {b} repeats element {x}"));
            }
            seen[x] = stamp;
        }
    }
    Ok(())
}

/// The cyclic group `Z_n` with `a·b = (a + b) mod n`.
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("Z_n needs n >= 1".into()));
    }
    let table = (0..n * n).map(|idx| ((idx / n + idx % n) % n) as u32).collect();
    FiniteGroup::from_table(format!("Z:{n}"), n, table)
}

/// The dihedral group of order `2n`, `<r, s | r^n = s^2 = 1, srs = r^-1>`.
///
/// Element `r^a s^b` has id `a + n*b`, so rotations come first.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("D:n needs n >= 2, got {n}")));
    }
    let order = 2 * n;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b) = (x % n, x / n);
        for y in 0..order {
            let (c, d) = (y % n, y / n);
            // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            table.push((rot + n * ((b + d) % 2)) as u32);
        }
    }
    FiniteGroup::from_table(format!("D:{n}"), order, table)
}

/// `Z_m ⋊ Z_k` where the generator of `Z_k` acts by `a -> a^i`.
///
/// Pairs `(a, b)` have id `a*k + b`, the same ordering as
/// `direct_product(Z_m, Z_k)`; with `i = 1` the two tables coincide.
pub fn semidirect_cyclic(m: usize, k: usize, i: usize) -> Result<FiniteGroup> {
    let (mm, kk, ii) = (m as u64, k as u64, i as u64);
    if m < 2 || k < 2 {
        return Err(Error::InvalidAction { m: mm, k: kk, i: ii, reason: "need m, k >= 2".into() });
    }
    if gcd(ii % mm, mm) != 1 {
        return Err(Error::InvalidAction { m: mm, k: kk, i: ii, reason: format!("gcd({i}, {m}) != 1") });
    }
    if pow_mod(ii, kk, mm) != 1 {
        return Err(Error::InvalidAction { m: mm, k: kk, i: ii, reason: format!("{i}^{k} is not 1 mod {m}") });
    }
    let powers: Vec<usize> = (0..k).map(|e| pow_mod(ii, e as u64, mm) as usize).collect();
    let order = m * k;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a1, b1) = (x / k, x % k);
        for y in 0..order {
            let (a2, b2) = (y / k, y % k);
            let a = (a1 + a2 * powers[b1]) % m;
            let b = (b1 + b2) % k;
            table.push((a * k + b) as u32);
        }
    }
    FiniteGroup::from_table(format!("SD:{m},{k},{i}"), order, table)
}

/// Componentwise product; pair `(x, y)` has id `x*|h| + y`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let order = ng * nh;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (x1, x2) = (x / nh, x % nh);
        for y in 0..order {
            let (y1, y2) = (y / nh, y % nh);
            table.push((g.mul(x1, y1) * nh + h.mul(x2, y2)) as u32);
        }
    }
    FiniteGroup::from_table(format!("X({},{})", g.name(), h.name()), order, table)
}

/// A 2×2 matrix over `Z_p`, row-major.
pub type Matrix2 = [[u64; 2]; 2];

fn mat_mul(a: &Matrix2, b: &Matrix2, p: u64) -> Matrix2 {
    let mut out = [[0; 2]; 2];
    for (r, row) in out.iter_mut().enumerate() {
        for (c, cell) in row.iter_mut().enumerate() {
            *cell = (a[r][0] * b[0][c] + a[r][1] * b[1][c]) % p;
        }
    }
    out
}

const IDENTITY2: Matrix2 = [[1, 0], [0, 1]];

/// Multiplicative order of `m` in `GL_2(p)`, or `None` if `m` is singular.
pub fn matrix_order(m: &Matrix2, p: u64) -> Option<u64> {
    let det = (m[0][0] * m[1][1] % p + p * p - m[0][1] * m[1][0] % p) % p;
    if det == 0 {
        return None;
    }
    let mut x = *m;
    let mut k = 1;
    while x != IDENTITY2 {
        x = mat_mul(&x, m, p);
        k += 1;
    }
    Some(k)
}

/// `(Z_p × Z_p) ⋊ Z_k` where the generator of `Z_k` acts by the matrix `action`.
///
/// Element `((x, y), c)` has id `(x*p + y)*k + c`.
pub fn semidirect_matrix(p: usize, action: Matrix2, k: usize) -> Result<FiniteGroup> {
    let pp = p as u64;
    if p < 2 || k < 1 {
        return Err(Error::InvalidArgument(format!("matrix semidirect needs p >= 2, k >= 1 (p={p}, k={k})")));
    }
    let action = action.map(|row| row.map(|v| v % pp));
    let ord = matrix_order(&action, pp)
        .ok_or_else(|| Error::InvalidArgument(format!("action matrix {action:?} is singular mod {p}")))?;
    if !(k as u64).is_multiple_of(ord) {
        return Err(Error::InvalidArgument(format!(
            "action matrix {action:?} has order {ord} mod {p}, which does not divide {k}"
        )));
    }
    let mut powers = Vec::with_capacity(k);
    let mut cur = IDENTITY2;
    for _ in 0..k {
        powers.push(cur);
        cur = mat_mul(&cur, &action, pp);
    }
    let order = p * p * k;
    let decode = |id: usize| ((id / k) / p, (id / k) % p, id % k);
    let mut table = Vec::with_capacity(order * order);
    for u in 0..order {
        let (x1, y1, c1) = decode(u);
        let m = &powers[c1];
        for v in 0..order {
            let (x2, y2, c2) = decode(v);
            let x = (x1 as u64 + m[0][0] * x2 as u64 + m[0][1] * y2 as u64) % pp;
            let y = (y1 as u64 + m[1][0] * x2 as u64 + m[1][1] * y2 as u64) % pp;
            let c = (c1 + c2) % k;
            table.push(((x as usize * p + y as usize) * k + c) as u32);
        }
    }
    FiniteGroup::from_table(
        format!("MSD:{p},[{} {};{} {}],{k}", action[0][0], action[0][1], action[1][0], action[1][1]),
        order,
        table,
    )
}
