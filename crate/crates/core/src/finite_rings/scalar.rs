use serde::{Deserialize, Serialize};

use super::RingError;

/// Largest supported prime. Keeps `p^2 < 2^30`, so products of two reduced
/// residues fit comfortably in a `u64`.
pub const MAX_PRIME: u32 = 1 << 15;

/// A prime `p` together with the modulus `p^2` of the lifted ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeCtx {
    p: u32,
    p2: u32,
}

impl PrimeCtx {
    pub fn new(p: u32) -> Result<Self, RingError> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p as u64) {
            return Err(RingError::NotPrime(p));
        }
        Ok(Self { p, p2: p * p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn p2(&self) -> u32 {
        self.p2
    }

    /// `a^{-1} mod p`; `a` must be nonzero mod `p`.
    pub fn inv_fp(&self, a: u32) -> Option<u32> {
        inv_mod(a, self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of `p` in `n` (`n > 0`).
pub fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

#[inline]
pub(crate) fn mul_mod(a: u32, b: u32, m: u32) -> u32 {
    ((a as u64 * b as u64) % m as u64) as u32
}

#[inline]
pub(crate) fn add_mod(a: u32, b: u32, m: u32) -> u32 {
    let s = a as u64 + b as u64;
    (s % m as u64) as u32
}

#[inline]
pub(crate) fn sub_mod(a: u32, b: u32, m: u32) -> u32 {
    add_mod(a, m - b % m, m)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: u32, m: u32) -> Option<u32> {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i64) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_primes() {
        assert!(PrimeCtx::new(1).is_err());
        assert!(PrimeCtx::new(9).is_err());
        assert!(PrimeCtx::new(MAX_PRIME + 1).is_err());
        let ctx = PrimeCtx::new(32749).unwrap();
        assert_eq!(ctx.p2() as u64, 32749u64 * 32749);
    }

    #[test]
    fn modular_inverse() {
        for m in [2u32, 4, 9, 25, 49, 121] {
            for a in 1..m {
                match inv_mod(a, m) {
                    Some(b) => assert_eq!(mul_mod(a, b, m), 1),
                    None => assert!(num_integer::gcd(a, m) > 1),
                }
            }
        }
    }

    #[test]
    fn factor_helpers() {
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
        assert_eq!(valuation(96, 2), 5);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
    }
}
