//! Univariate polynomials over the integers (exact, arbitrary precision) and
//! over `F_p`. Coefficients are stored lowest degree first and kept trimmed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::{Mat, MatZp2};
use super::scalar::{add_mod, mul_mod, sub_mod, PrimeCtx};
use super::RingError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyInt {
    coeffs: Vec<BigInt>,
}

impl PolyInt {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `c·t^k`.
    pub fn monomial(c: i64, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        Self::new(v)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a PolyInt>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    /// Division with remainder by a monic divisor; exact over the integers.
    pub fn divmod_exact(&self, divisor: &Self) -> Result<(Self, Self), RingError> {
        if !divisor.is_monic() {
            return Err(RingError::NonMonicDivisor);
        }
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let lead = std::mem::take(&mut rem[k]);
            if lead.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs[..d].iter().enumerate() {
                rem[k - d + j] -= &lead * c;
            }
            quot[k - d] = lead;
        }
        rem.truncate(d);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, dividend: &Self) -> Result<bool, RingError> {
        Ok(dividend.divmod_exact(self)?.1.is_zero())
    }

    pub fn mod_p_reduce(&self, ctx: PrimeCtx) -> PolyFp {
        let p = BigInt::from(ctx.p());
        PolyFp::new(
            ctx,
            self.coeffs
                .iter()
                .map(|c| c.mod_floor(&p).to_u32().unwrap())
                .collect(),
        )
    }

    /// Horner evaluation at a matrix over `Z/p^2`.
    pub fn eval_at_matrix(&self, m: &MatZp2) -> MatZp2 {
        let ctx = m.ctx();
        let p2 = BigInt::from(ctx.p2());
        let n = m.n();
        let mut acc = MatZp2::zero(ctx, n);
        for c in self.coeffs.iter().rev() {
            let c = c.mod_floor(&p2).to_u32().unwrap();
            acc = &acc * m;
            acc = &acc + &MatZp2::identity(ctx, n).scale(c);
        }
        acc
    }

    /// Companion matrix of a monic polynomial of degree `d`: ones on the
    /// subdiagonal and `-c_0, …, -c_{d-1}` in the last column. Its minimal
    /// polynomial is `self`.
    pub fn companion<L: super::matrix::Level>(&self, ctx: PrimeCtx) -> Result<Mat<L>, RingError> {
        if !self.is_monic() {
            return Err(RingError::NonMonicDivisor);
        }
        let d = self.degree().unwrap();
        let modulus = BigInt::from(L::modulus(&ctx));
        let neg: Vec<i64> = self.coeffs[..d]
            .iter()
            .map(|c| (-c).mod_floor(&modulus).to_i64().unwrap())
            .collect();
        Ok(Mat::from_fn(ctx, d, |r, c| {
            if c == d - 1 {
                neg[r]
            } else {
                i64::from(r == c + 1)
            }
        }))
    }
}

impl fmt::Debug for PolyInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyInt({self})")
    }
}

impl fmt::Display for PolyInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.coeffs
                .iter()
                .map(|c| (c.is_negative(), c.abs().to_string(), c.is_zero())),
            "t",
        )
    }
}

fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (bool, String, bool)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (k, (neg, mag, zero)) in terms.enumerate().collect::<Vec<_>>().into_iter().rev() {
        if zero {
            continue;
        }
        let sign = match (first, neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        let body = match (k, mag.as_str()) {
            (0, m) => m.to_string(),
            (1, "1") => var.to_string(),
            (1, m) => format!("{m}{var}"),
            (_, "1") => format!("{var}^{k}"),
            (_, m) => format!("{m}{var}^{k}"),
        };
        write!(f, "{sign}{body}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyFp {
    ctx: PrimeCtx,
    coeffs: Vec<u32>,
}

impl PolyFp {
    pub fn new(ctx: PrimeCtx, coeffs: Vec<u32>) -> Self {
        let p = ctx.p();
        let mut poly = Self {
            ctx,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        while poly.coeffs.last() == Some(&0) {
            poly.coeffs.pop();
        }
        poly
    }

    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.ctx, vec![]);
        }
        let p = self.ctx.p();
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        Self::new(self.ctx, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::new(self.ctx, vec![1]), |acc, _| acc.mul(self))
    }

    /// Renders with `var` as the indeterminate.
    pub fn render(&self, var: &str) -> String {
        struct Named<'a>(&'a PolyFp, &'a str);
        impl fmt::Display for Named<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt_terms(
                    f,
                    self.0
                        .coeffs
                        .iter()
                        .map(|c| (false, c.to_string(), *c == 0)),
                    self.1,
                )
            }
        }
        Named(self, var).to_string()
    }

    /// `(t - 1)^i` over `F_p`.
    pub fn unipotent(ctx: PrimeCtx, i: u32) -> Self {
        Self::new(ctx, vec![ctx.p() - 1, 1]).pow(i)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.ctx.p();
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.ctx,
            (0..len)
                .map(|k| sub_mod(self.coeff(k), other.coeff(k), p))
                .collect(),
        )
    }
}

impl fmt::Debug for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyFp(p={}, {self})", self.ctx.p())
    }
}

impl fmt::Display for PolyFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.coeffs.iter().map(|c| (false, c.to_string(), *c == 0)),
            "t",
        )
    }
}

/// `binom(n, k)` exactly.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(binom(n, k) / p) mod p`, requiring `p | binom(n, k)`.
pub fn binom_div_p(n: u64, k: u64, ctx: PrimeCtx) -> Result<u32, RingError> {
    let b = binomial(n, k);
    let p = BigUint::from(ctx.p());
    let (q, r) = b.div_rem(&p);
    if !r.is_zero() {
        return Err(RingError::NotDivisible { n, k, p: ctx.p() });
    }
    Ok((q % &p).to_u32().unwrap())
}
