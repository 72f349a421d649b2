//! Small integer helpers: gcd, prime factorizations, divisors and unit orders.

use std::collections::BTreeSet;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as ascending `(prime, exponent)` pairs, by trial division.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The set of distinct prime divisors of `n`; empty for `n = 1`.
pub fn pi(n: u64) -> BTreeSet<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut result = 1u64;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

/// Multiplicative order of `a` modulo `m`, or `None` when `a` is not a unit.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(1);
    }
    if gcd(a % m, m) != 1 {
        return None;
    }
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
    }
    Some(k)
}

/// Smallest unit modulo `m` of multiplicative order exactly `k`.
pub fn unit_of_order(m: u64, k: u64) -> Option<u64> {
    (1..m.max(2)).find(|&a| multiplicative_order(a, m) == Some(k))
}

/// Ascending primes starting from 2.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_examples() {
        assert!(pi(1).is_empty());
        assert_eq!(pi(12).into_iter().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(pi(210).into_iter().collect::<Vec<_>>(), vec![2, 3, 5, 7]);
    }

    #[test]
    fn divisors_and_factorization() {
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert!(factorize(1).is_empty());
    }

    #[test]
    fn unit_orders() {
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(3, 6), None);
        assert_eq!(unit_of_order(9, 4), None);
        assert_eq!(unit_of_order(25, 4), Some(7));
        assert_eq!(pow_mod(2, 10, 1000), 24);
    }

    #[test]
    fn first_primes() {
        assert_eq!(primes().take(6).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11, 13]);
    }
}
