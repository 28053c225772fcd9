//! Hard-coded representations of the five obstruction subgroups.

use crate::finite_rings::{MatFp, PrimeCtx};
use crate::groups::{make_family, BadKind, Family, Presentation};
use crate::obstruction::{module_of_quotient, AlgFp};
use crate::replift::{check_lift, LiftVerdict, Refutation, Representation};

use super::ClassifyError;

/// An element of `S = M_2(F_2)`, row-major.
type S = [[u32; 2]; 2];

const ZERO: S = [[0, 0], [0, 0]];
const ONE: S = [[1, 0], [0, 1]];
/// Satisfies `x^2 = x + 1`.
const X: S = [[0, 1], [1, 1]];
const X2: S = [[1, 1], [1, 0]];

/// Expands a matrix over `S` to one over `F_2` of twice the size.
fn expand(blocks: &[&[S]]) -> MatFp {
    let ctx = PrimeCtx::new(2).unwrap();
    let k = blocks.len();
    MatFp::from_fn(ctx, 2 * k, |r, c| blocks[r / 2][c / 2][r % 2][c % 2] as i64)
}

fn presentation(names: &[&str], relators: &[&str]) -> Presentation {
    Presentation::from_strs(names, relators).expect("static presentation")
}

/// The presentation whose generators a [`BadSubgroup`](crate::groups::BadSubgroup)
/// realizes, in order.
pub fn kind_presentation(kind: BadKind) -> Presentation {
    match kind {
        BadKind::Cp(p) => presentation(&["s"], &[&format!("s^{p}")]),
        BadKind::C9 => presentation(&["s"], &["s^9"]),
        BadKind::C3xC3 => presentation(&["s", "t"], &["s^3", "t^3", "s t s^-1 t^-1"]),
        BadKind::C2xC2 => presentation(&["s", "t"], &["s^2", "t^2", "s t s^-1 t^-1"]),
        BadKind::Q8 => presentation(&["s", "t"], &["s^2 t^-2", "s^4", "t s t^-1 s"]),
    }
}

/// Builds the witness without running the checker.
pub fn witness_representation(kind: BadKind) -> Result<Representation, ClassifyError> {
    let pres = kind_presentation(kind);
    let rep = match kind {
        BadKind::C2xC2 => {
            let sigma = expand(&[&[ONE, ONE], &[ZERO, ONE]]);
            let tau = expand(&[&[ONE, X], &[ZERO, ONE]]);
            Representation::new(sigma.ctx(), 4, pres, vec![sigma, tau])?
        }
        BadKind::Q8 => {
            let j = expand(&[&[ZERO, ZERO, ONE], &[ONE, ZERO, ONE], &[ZERO, ONE, ONE]]);
            let k = expand(&[&[ZERO, X, ONE], &[X, X2, X], &[X2, ZERO, X]]);
            Representation::new(j.ctx(), 6, pres, vec![j, k])?
        }
        BadKind::C3xC3 => {
            let ctx = PrimeCtx::new(3)?;
            let e = |i: usize, j: usize| {
                MatFp::from_fn(ctx, 3, |r, c| i64::from(r == c || (r, c) == (i, j)))
            };
            Representation::new(ctx, 3, pres, vec![e(0, 1), e(0, 2)])?
        }
        BadKind::Cp(p) => jordan_quotient(p, 1)?,
        BadKind::C9 => jordan_quotient(3, 2)?,
    };
    Ok(rep)
}

/// `F_p[C_{p^n}] / (1-σ)^{p^n - m}` with `m = p^{n-1} + 1`.
fn jordan_quotient(p: u32, n: u32) -> Result<Representation, ClassifyError> {
    let ctx = PrimeCtx::new(p)?;
    let order = p.pow(n);
    let g = make_family(&Family::Cyclic(order as usize))?;
    let m = order / p + 1;
    let h = AlgFp::one_minus_pow(&g, ctx, g.generators()[0], order - m);
    Ok(module_of_quotient(&g, &h)?)
}

/// The witness for `kind` and the checker's verdict on it.
pub fn witness_verdict(kind: BadKind) -> Result<(Representation, LiftVerdict), ClassifyError> {
    let rep = witness_representation(kind)?;
    let verdict = check_lift(&rep)?;
    Ok((rep, verdict))
}

/// The witness for `kind` together with the checker's refutation. Fails
/// when the checker finds a lift.
pub fn canonical_witness(kind: BadKind) -> Result<(Representation, Refutation), ClassifyError> {
    match witness_verdict(kind)? {
        (rep, LiftVerdict::NotLiftable(r)) => Ok((rep, *r)),
        (_, LiftVerdict::Liftable(_)) => Err(ClassifyError::CertificationFailed(format!(
            "the {kind} witness lifts"
        ))),
    }
}
