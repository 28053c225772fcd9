//! The class `θ(f, h)` for `f·h = 0` in `F_p[G]`: lift both to `Z/p^2[G]`,
//! write `f̂ĥ = p·u`, and take `u` modulo `f·F_p[G] + F_p[G]·h`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::finite_rings::{PolyFp, PolyInt, PrimeCtx, RowSpace};
use crate::groups::{make_family, Family, FiniteGroup, MAX_ORDER};

use super::algebra::{AlgFp, AlgZp2};
use super::ObstructionError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaClass {
    /// `u` reduced against `quotient`; zero in every pivot column.
    pub representative: AlgFp,
    /// Reduced row echelon basis of `f·F_p[G] + F_p[G]·h`.
    pub quotient: RowSpace,
    pub is_zero: bool,
}

/// `θ(f, h)` with canonical lifts.
pub fn theta(g: &FiniteGroup, f: &AlgFp, h: &AlgFp) -> Result<ThetaClass, ObstructionError> {
    theta_with_lifts(g, f, h, &f.lift_canonical(), &h.lift_canonical())
}

/// `θ(f, h)` computed from given lifts `f̂`, `ĥ`.
pub fn theta_with_lifts(
    g: &FiniteGroup,
    f: &AlgFp,
    h: &AlgFp,
    f_hat: &AlgZp2,
    h_hat: &AlgZp2,
) -> Result<ThetaClass, ObstructionError> {
    if f_hat.reduce() != *f || h_hat.reduce() != *h {
        return Err(ObstructionError::Mismatch(
            "lifts do not reduce to f and h".into(),
        ));
    }
    if !f.mul(g, h)?.is_zero() {
        return Err(ObstructionError::ProductNotZero);
    }
    let u = f_hat.mul(g, h_hat)?.divide_by_p().expect("f·h = 0 mod p");
    let n = g.order();
    let ctx = f.ctx();
    let mut span = Vec::with_capacity(2 * n);
    for x in 0..n {
        let ex = AlgFp::basis(ctx, n, x);
        span.push(f.mul(g, &ex)?.coeffs().to_vec());
        span.push(ex.mul(g, h)?.coeffs().to_vec());
    }
    let quotient = RowSpace::new(ctx, n, &span)?;
    let representative = AlgFp::new(ctx, quotient.reduce(u.coeffs()))?;
    let is_zero = representative.is_zero();
    Ok(ThetaClass {
        representative,
        quotient,
        is_zero,
    })
}

/// The pair `f = (1-σ)^m`, `h = (1-σ)^{p^n - m}` with `m = p^{n-1} + 1` in
/// `F_p[C_{p^n}]`.
#[derive(Clone, Debug)]
pub struct CyclicWitness {
    pub group: FiniteGroup,
    pub f: AlgFp,
    pub h: AlgFp,
    pub m: u32,
}

pub fn cyclic_witness(ctx: PrimeCtx, n: u32) -> Result<CyclicWitness, ObstructionError> {
    let p = ctx.p();
    let out_of_range = || ObstructionError::OutOfRange { p, n };
    if n == 0 {
        return Err(out_of_range());
    }
    let order = (p as u64)
        .checked_pow(n)
        .filter(|&q| q <= MAX_ORDER as u64)
        .ok_or_else(out_of_range)? as u32;
    let m = order / p + 1;
    if m > order - m {
        return Err(out_of_range());
    }
    let group = make_family(&Family::Cyclic(order as usize))?;
    let sigma = group.generators()[0];
    let f = AlgFp::one_minus_pow(&group, ctx, sigma, m);
    let h = AlgFp::one_minus_pow(&group, ctx, sigma, order - m);
    Ok(CyclicWitness { group, f, h, m })
}

/// `Q = [(1-t)^{p^n} - (1 - t^{p^n})]/p` reduced mod `p`, written in
/// `s = 1 - t`: `Q(s) = [s^{p^n} - 1 + (1-s)^{p^n}]/p`.
pub fn q_polynomial(ctx: PrimeCtx, n: u32) -> PolyFp {
    let big_n = (ctx.p() as usize).pow(n);
    // (1-s)^N term by term: binom(N, k+1) = binom(N, k)·(N-k)/(k+1).
    let mut binom = BigInt::from(1);
    let mut expansion = Vec::with_capacity(big_n + 1);
    for k in 0..=big_n {
        expansion.push(if k % 2 == 0 {
            binom.clone()
        } else {
            -binom.clone()
        });
        binom = binom * BigInt::from(big_n - k) / BigInt::from(k + 1);
    }
    let numer = PolyInt::monomial(1, big_n)
        .sub(&PolyInt::one())
        .add(&PolyInt::new(expansion));
    let p = BigInt::from(ctx.p());
    let coeffs = numer
        .coeffs()
        .iter()
        .map(|c| {
            let (q, r) = c.div_rem(&p);
            assert!(r == BigInt::from(0), "numerator of Q is divisible by p");
            q.mod_floor(&p).to_u32().unwrap()
        })
        .collect();
    PolyFp::new(ctx, coeffs)
}
