//! Named groups and parametrized families, each expanded through the generic
//! constructors.
//!
//! The order-`p²q` families follow the usual presentations:
//!
//! | tag          | group                                                        |
//! |--------------|--------------------------------------------------------------|
//! | `PQ:p,q`     | `Z_q ⋊ Z_p`, `p \| q-1`                                      |
//! | `G1:p,q`     | `Z_q ⋊ Z_{p²}`, generator acting with order `p`              |
//! | `G2:p,q`     | `(Z_q ⋊ Z_p) × Z_p`                                          |
//! | `G3:p,q`     | `Z_q ⋊ Z_{p²}`, generator acting with order `p²`             |
//! | `G4:p,q`     | `Z_{p²} ⋊ Z_q`, `q \| p-1`                                   |
//! | `G5:p,q,t`   | `(Z_p × Z_p) ⋊ Z_q` acting by `diag(i, i^t)`, `ord_p(i) = q` |
//! | `G6:p,q`     | `(Z_p × Z_p) ⋊ Z_q` acting irreducibly, `q \| p+1`           |
//!
//! `G5` is only instantiated for the representatives `t = 0` and `t = 1` in
//! the shipped catalog; other `t` values are accepted.

use super::{cyclic, dihedral, direct_product, matrix_order, permutation_group, semidirect_cyclic, semidirect_matrix};
use super::{FiniteGroup, Matrix2, Permutation};
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, pow_mod, unit_of_order};

/// Every accepted tag with its argument names and a short description.
pub const NAMED_TAGS: &[(&str, &str, &str)] = &[
    ("S3", "", "symmetric group S_3 = D:3"),
    ("A4", "", "alternating group A_4"),
    ("S4", "", "symmetric group S_4"),
    ("Q8", "", "quaternion group of order 8"),
    ("D12", "", "dihedral group of order 12 = D:6"),
    ("D18", "", "dihedral group of order 36 = D:18"),
    ("S3xS3", "", "S_3 × S_3"),
    ("Z3xA4", "", "Z_3 × A_4"),
    ("Z6xS3", "", "Z_6 × S_3"),
    ("Z3xDic3", "", "Z_3 × (Z_3 ⋊ Z_4)"),
    ("Z9sZ4", "", "Z_9 ⋊ Z_4, action a -> a^8"),
    ("Z3Z3sZ4", "", "(Z_3 × Z_3) ⋊ Z_4, faithful action of order 4"),
    ("Z2Z2sZ9", "", "(Z_2 × Z_2) ⋊ Z_9"),
    ("Z2Z3Z3sZ2", "", "(Z_2 × (Z_3 × Z_3)) ⋊ Z_2, inversion on the Z_3 × Z_3 part"),
    ("PQ", "p,q", "Z_q ⋊ Z_p, nonabelian of order pq"),
    ("G1", "p,q", "Z_q ⋊ Z_{p^2} with ord_q(i) = p"),
    ("G2", "p,q", "(Z_q ⋊ Z_p) × Z_p"),
    ("G3", "p,q", "Z_q ⋊ Z_{p^2} with ord_q(i) = p^2"),
    ("G4", "p,q", "Z_{p^2} ⋊ Z_q"),
    ("G5", "p,q,t", "(Z_p × Z_p) ⋊ Z_q acting by diag(i, i^t)"),
    ("G6", "p,q", "(Z_p × Z_p) ⋊ Z_q acting irreducibly"),
];

pub(crate) fn is_known_tag(tag: &str) -> bool {
    NAMED_TAGS.iter().any(|(t, _, _)| *t == tag)
}

fn arity(tag: &str) -> usize {
    NAMED_TAGS
        .iter()
        .find(|(t, _, _)| *t == tag)
        .map(|(_, args, _)| if args.is_empty() { 0 } else { args.split(',').count() })
        .unwrap_or(0)
}

fn check_args(tag: &str, args: &[u64]) -> Result<()> {
    if !is_known_tag(tag) {
        return Err(Error::Parse(format!("unknown group name {tag:?}")));
    }
    let want = arity(tag);
    if args.len() != want {
        return Err(Error::InvalidArgument(format!("{tag} takes {want} arguments, got {}", args.len())));
    }
    if want >= 2 {
        let (p, q) = (args[0], args[1]);
        if !is_prime(p) || !is_prime(q) || p == q {
            return Err(Error::InvalidArgument(format!("{tag}: p={p} and q={q} must be distinct primes")));
        }
        let ok = match tag {
            "PQ" | "G1" | "G2" => (q - 1) % p == 0,
            "G3" => (q - 1) % (p * p) == 0,
            "G4" | "G5" => (p - 1) % q == 0,
            "G6" => (p + 1) % q == 0,
            _ => true,
        };
        if !ok {
            return Err(Error::InvalidArgument(format!("{tag}:{p},{q}: no such group for these primes")));
        }
    }
    Ok(())
}

/// Order of a named group, validating its arguments.
pub(crate) fn nominal_order(tag: &str, args: &[u64]) -> Result<u64> {
    check_args(tag, args)?;
    Ok(match tag {
        "S3" => 6,
        "Q8" => 8,
        "A4" | "D12" => 12,
        "S4" => 24,
        "D18" | "S3xS3" | "Z3xA4" | "Z6xS3" | "Z3xDic3" | "Z9sZ4" | "Z3Z3sZ4" | "Z2Z2sZ9" | "Z2Z3Z3sZ2" => 36,
        "PQ" => args[0] * args[1],
        "G1" | "G2" | "G3" => args[0] * args[0] * args[1],
        "G4" | "G5" | "G6" => args[0] * args[0] * args[1],
        _ => unreachable!("checked by check_args"),
    })
}

fn perm(degree: usize, gens: &[&[&[u32]]]) -> Result<FiniteGroup> {
    let gens = gens
        .iter()
        .map(|cycles| {
            let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
            Permutation::from_cycles(degree, &cycles)
        })
        .collect::<Result<Vec<_>>>()?;
    permutation_group(degree, &gens, usize::MAX)
}

fn a4() -> Result<FiniteGroup> {
    perm(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
}

fn unit(modulus: u64, order: u64) -> Result<usize> {
    unit_of_order(modulus, order)
        .map(|u| u as usize)
        .ok_or_else(|| Error::InvalidArgument(format!("no unit of order {order} modulo {modulus}")))
}

/// First matrix in `GL_2(p)` (entries scanned lexicographically) of order `q`
/// that has no eigenvector over `Z_p`.
fn irreducible_matrix_of_order(p: u64, q: u64) -> Option<Matrix2> {
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [[a, b], [c, d]];
                    if matrix_order(&m, p) != Some(q) {
                        continue;
                    }
                    let fixes_a_line = (0..p).flat_map(|x| (0..p).map(move |y| (x, y))).any(|(x, y)| {
                        (x, y) != (0, 0) && {
                            let (u, v) = ((a * x + b * y) % p, (c * x + d * y) % p);
                            // (u, v) is a multiple of (x, y)
                            (x * v + p * p - y * u).is_multiple_of(p)
                        }
                    });
                    if !fixes_a_line {
                        return Some(m);
                    }
                }
            }
        }
    }
    None
}

/// Builds a named group. `tag` and `args` follow [`NAMED_TAGS`].
pub fn named(tag: &str, args: &[u64]) -> Result<FiniteGroup> {
    check_args(tag, args)?;
    let (p, q) = (args.first().copied().unwrap_or(0), args.get(1).copied().unwrap_or(0));
    let (pu, qu) = (p as usize, q as usize);
    let group = match tag {
        "S3" => dihedral(3)?,
        "A4" => a4()?,
        "S4" => perm(4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])?,
        // regular representation: 0=1, 1=i, 2=j, 3=k, 4=-1, 5=-i, 6=-j, 7=-k
        "Q8" => perm(8, &[&[&[0, 1, 4, 5], &[2, 3, 6, 7]], &[&[0, 2, 4, 6], &[1, 7, 5, 3]]])?,
        "D12" => dihedral(6)?,
        "D18" => dihedral(18)?,
        "S3xS3" => direct_product(&dihedral(3)?, &dihedral(3)?)?,
        "Z3xA4" => direct_product(&cyclic(3)?, &a4()?)?,
        "Z6xS3" => direct_product(&cyclic(6)?, &dihedral(3)?)?,
        "Z3xDic3" => direct_product(&cyclic(3)?, &semidirect_cyclic(3, 4, 2)?)?,
        "Z9sZ4" => semidirect_cyclic(9, 4, 8)?,
        "Z3Z3sZ4" => semidirect_matrix(3, [[0, 2], [1, 0]], 4)?,
        "Z2Z2sZ9" => semidirect_matrix(2, [[0, 1], [1, 1]], 9)?,
        "Z2Z3Z3sZ2" => direct_product(&cyclic(2)?, &semidirect_matrix(3, [[2, 0], [0, 2]], 2)?)?,
        "PQ" => semidirect_cyclic(qu, pu, unit(q, p)?)?,
        "G1" => semidirect_cyclic(qu, pu * pu, unit(q, p)?)?,
        "G2" => direct_product(&semidirect_cyclic(qu, pu, unit(q, p)?)?, &cyclic(pu)?)?,
        "G3" => semidirect_cyclic(qu, pu * pu, unit(q, p * p)?)?,
        "G4" => semidirect_cyclic(pu * pu, qu, unit(p * p, q)?)?,
        "G5" => {
            let i = unit(p, q)? as u64;
            let t = args[2];
            semidirect_matrix(pu, [[i, 0], [0, pow_mod(i, t, p)]], qu)?
        }
        "G6" => {
            let m = irreducible_matrix_of_order(p, q).ok_or_else(|| {
                Error::InvalidArgument(format!("G6:{p},{q}: no irreducible element of order {q} in GL_2({p})"))
            })?;
            semidirect_matrix(pu, m, qu)?
        }
        _ => unreachable!("checked by check_args"),
    };
    let name = if args.is_empty() {
        tag.to_string()
    } else {
        let body: Vec<String> = args.iter().map(|a| a.to_string()).collect();
        format!("{tag}:{}", body.join(","))
    };
    Ok(group.with_name(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &FiniteGroup, order: usize) -> usize {
        g.order_census().iter().filter(|&&o| o == order).count()
    }

    #[test]
    fn every_fixed_tag_builds_with_its_nominal_order() {
        for (tag, args, _) in NAMED_TAGS {
            if args.is_empty() {
                let g = named(tag, &[]).unwrap();
                assert_eq!(g.order() as u64, nominal_order(tag, &[]).unwrap(), "{tag}");
            }
        }
    }

    #[test]
    fn quaternion_census() {
        let q8 = named("Q8", &[]).unwrap();
        assert_eq!(q8.order_census(), vec![1, 2, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn families_have_expected_censuses() {
        // Z_7 ⋊ Z_3: 14 elements of order 3, 6 of order 7
        let pq = named("PQ", &[3, 7]).unwrap();
        assert_eq!((count(&pq, 3), count(&pq, 7)), (14, 6));

        let g6 = named("G6", &[2, 3]).unwrap();
        assert_eq!(g6.order_census(), named("A4", &[]).unwrap().order_census());

        // G5 with t = 0 is Z_p × (Z_p ⋊ Z_q): it has elements of order pq
        let g5_0 = named("G5", &[7, 3, 0]).unwrap();
        assert!(count(&g5_0, 21) > 0);
        let g5_1 = named("G5", &[7, 3, 1]).unwrap();
        assert_eq!(count(&g5_1, 21), 0);

        // G3: the Z_{p^2} acts faithfully, so no element of order pq
        let g3 = named("G3", &[2, 5]).unwrap();
        assert_eq!(g3.order(), 20);
        assert_eq!(count(&g3, 10), 0);
        let g1 = named("G1", &[2, 3]).unwrap();
        assert_eq!(count(&g1, 6), 2);
    }

    #[test]
    fn invalid_family_parameters() {
        assert!(named("PQ", &[3, 5]).is_err());
        assert!(named("G3", &[2, 7]).is_err());
        assert!(named("G4", &[4, 3]).is_err());
        assert!(named("G5", &[7, 3]).is_err());
        assert!(named("A4", &[1]).is_err());
        assert!(named("G6", &[5, 3]).is_ok());
    }
}
