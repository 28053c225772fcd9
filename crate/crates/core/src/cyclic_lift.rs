//! Constructive lifts for cyclic `p`-groups.
//!
//! The integer divisors of `t^{p^n} - 1` are the products of subsets of the
//! cyclotomic factors `Φ_{p^j}`, `0 <= j <= n`, and each factor reduces to a
//! power of `t - 1` mod `p`. A divisor `P ≡ (t-1)^i` therefore exists exactly
//! when some subset of the degrees `1, p-1, p(p-1), …` sums to `i`; its
//! companion matrix over `Z/p^2` lifts the Jordan module of size `i`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::finite_rings::{Fp, MatFp, MatZp2, PolyFp, PolyInt, PrimeCtx, RingError, Zp2};
use crate::groups::{make_family, Family, Presentation, MAX_ORDER};
use crate::replift::{verify_certificate, LiftCertificate, RepError, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicLiftError {
    #[error("exponent n = {0} is out of range")]
    BadExponent(u32),
    #[error("target size {i} is outside [1, {max}]")]
    TargetOutOfRange { i: u32, max: u32 },
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// `[Φ_1, Φ_p, Φ_{p^2}, …, Φ_{p^n}]` with `Φ_1 = t - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicFactorization {
    pub p: u32,
    pub n: u32,
    pub factors: Vec<PolyInt>,
}

impl CyclotomicFactorization {
    pub fn degrees(&self) -> Vec<u32> {
        self.factors
            .iter()
            .map(|f| f.degree().unwrap() as u32)
            .collect()
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.n)
    }
}

fn group_order(ctx: PrimeCtx, n: u32) -> Result<u32, CyclicLiftError> {
    if n == 0 {
        return Err(CyclicLiftError::BadExponent(n));
    }
    (ctx.p() as u64)
        .checked_pow(n)
        .filter(|&q| q <= MAX_ORDER as u64)
        .map(|q| q as u32)
        .ok_or(CyclicLiftError::BadExponent(n))
}

/// `t^{p^n} - 1`.
fn top(order: u32) -> PolyInt {
    PolyInt::monomial(1, order as usize).sub(&PolyInt::one())
}

/// Builds the factor list and checks that it multiplies to `t^{p^n} - 1`
/// and that `Φ_{p^j} ≡ (t-1)^{deg}` mod `p`.
pub fn cyclotomic_factors(
    ctx: PrimeCtx,
    n: u32,
) -> Result<CyclotomicFactorization, CyclicLiftError> {
    let order = group_order(ctx, n)?;
    let p = ctx.p() as usize;
    let mut factors = vec![PolyInt::from_i64(&[-1, 1])];
    for j in 1..=n {
        let step = p.pow(j - 1);
        let mut coeffs = vec![0i64; (p - 1) * step + 1];
        for i in 0..p {
            coeffs[i * step] = 1;
        }
        factors.push(PolyInt::from_i64(&coeffs));
    }
    assert_eq!(PolyInt::product(&factors), top(order), "cyclotomic product");
    for f in &factors {
        let d = f.degree().unwrap() as u32;
        assert_eq!(
            f.mod_p_reduce(ctx),
            PolyFp::unipotent(ctx, d),
            "reduction of {f}"
        );
    }
    Ok(CyclotomicFactorization {
        p: ctx.p(),
        n,
        factors,
    })
}

fn check_target(order: u32, i: u32) -> Result<(), CyclicLiftError> {
    if i == 0 || i > order {
        return Err(CyclicLiftError::TargetOutOfRange { i, max: order });
    }
    Ok(())
}

/// A monic divisor `P_i` of `t^{p^n} - 1` with `P_i ≡ (t-1)^i` mod `p`.
///
/// Subsets are scanned in lexicographic order of their indicator vectors
/// `(b_0, b_1, …, b_n)` with `0 < 1`, and the first whose degrees sum to `i`
/// is returned. For `p = 2` this picks `(t+1)(t^4+1)` for `i = 5`.
pub fn find_divisor_lift(
    ctx: PrimeCtx,
    n: u32,
    i: u32,
) -> Result<Option<PolyInt>, CyclicLiftError> {
    let fac = cyclotomic_factors(ctx, n)?;
    check_target(fac.order(), i)?;
    let degs = fac.degrees();
    let k = degs.len();
    for code in 0u32..(1 << k) {
        // Factor 0 is the most significant indicator bit.
        let chosen: Vec<usize> = (0..k).filter(|&j| code >> (k - 1 - j) & 1 == 1).collect();
        if chosen.iter().map(|&j| degs[j]).sum::<u32>() != i {
            continue;
        }
        let divisor = PolyInt::product(chosen.iter().map(|&j| &fac.factors[j]));
        debug_assert!(divisor.divides(&top(fac.order()))?);
        debug_assert_eq!(divisor.mod_p_reduce(ctx), PolyFp::unipotent(ctx, i));
        return Ok(Some(divisor));
    }
    Ok(None)
}

/// Every `i` in `[1, p^n]` reached by a subset sum of the factor degrees.
pub fn liftable_jordan_sizes(ctx: PrimeCtx, n: u32) -> Result<BTreeSet<u32>, CyclicLiftError> {
    let degs = cyclotomic_factors(ctx, n)?.degrees();
    let mut sums = BTreeSet::from([0u32]);
    for d in degs {
        let shifted: Vec<u32> = sums.iter().map(|s| s + d).collect();
        sums.extend(shifted);
    }
    sums.remove(&0);
    Ok(sums)
}

/// `⟨s | s^{p^n}⟩`.
pub fn cyclic_presentation(ctx: PrimeCtx, n: u32) -> Result<Presentation, CyclicLiftError> {
    let order = group_order(ctx, n)?;
    let g = make_family(&Family::Cyclic(order as usize)).map_err(RepError::from)?;
    Ok(g.presentation().clone())
}

/// `σ ↦` companion matrix of `(t-1)^i` over `F_p`: the Jordan module `M_i`.
pub fn jordan_companion_rep(
    ctx: PrimeCtx,
    n: u32,
    i: u32,
) -> Result<Representation, CyclicLiftError> {
    let pres = cyclic_presentation(ctx, n)?;
    check_target(ctx.p().pow(n), i)?;
    let coeffs: Vec<i64> = PolyFp::unipotent(ctx, i)
        .coeffs()
        .iter()
        .map(|&c| c as i64)
        .collect();
    let m: MatFp = PolyInt::from_i64(&coeffs).companion::<Fp>(ctx)?;
    Ok(Representation::checked(ctx, i as usize, pres, vec![m])?)
}

/// The Jordan representation of size `i` and the lift `σ ↦ C(P)` over
/// `Z/p^2`, after checking that `P` is a valid divisor lift.
pub fn companion_lift(
    ctx: PrimeCtx,
    n: u32,
    i: u32,
    divisor: &PolyInt,
) -> Result<(Representation, LiftCertificate), CyclicLiftError> {
    let order = group_order(ctx, n)?;
    check_target(order, i)?;
    let invalid = |msg: String| CyclicLiftError::InvalidDivisor(msg);
    if !divisor.is_monic() || divisor.degree() != Some(i as usize) {
        return Err(invalid(format!("{divisor} is not monic of degree {i}")));
    }
    if !divisor.divides(&top(order))? {
        return Err(invalid(format!("{divisor} does not divide t^{order} - 1")));
    }
    if divisor.mod_p_reduce(ctx) != PolyFp::unipotent(ctx, i) {
        return Err(invalid(format!(
            "{divisor} is not (t-1)^{i} mod {}",
            ctx.p()
        )));
    }
    let rep = jordan_companion_rep(ctx, n, i)?;
    let lifted: MatZp2 = divisor.companion::<Zp2>(ctx)?;
    let cert = LiftCertificate { mats: vec![lifted] };
    if !verify_certificate(&rep, &cert) {
        return Err(invalid(format!(
            "companion matrix of {divisor} does not verify"
        )));
    }
    Ok((rep, cert))
}
