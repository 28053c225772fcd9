use crate::finite_rings::{MatFp, MatZp2, SolveResult};

use super::linearize::{canonical_lifts, linearize_with_lifts, LinearizedSystem};
use super::rep::{eval_word, Representation};
use super::RepError;

/// Generator images in `GL_n(Z/p^2)` reducing to the representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftCertificate {
    pub mats: Vec<MatZp2>,
}

/// A functional `c` over the equations of `system` with `c·A = 0` and
/// `c·b != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub system: LinearizedSystem,
    pub functional: Vec<u32>,
}

impl Refutation {
    pub fn is_valid(&self) -> bool {
        self.system.system.is_refutation(&self.functional)
    }

    /// `(equation index, coefficient)` for the nonzero entries of `c`.
    pub fn support(&self) -> Vec<(usize, u32)> {
        self.functional
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftVerdict {
    Liftable(LiftCertificate),
    NotLiftable(Box<Refutation>),
}

impl LiftVerdict {
    pub fn is_liftable(&self) -> bool {
        matches!(self, LiftVerdict::Liftable(_))
    }
}

/// Decides whether `rep` lifts to `GL_n(Z/p^2)`.
pub fn check_lift(rep: &Representation) -> Result<LiftVerdict, RepError> {
    check_lift_with_lifts(rep, &canonical_lifts(rep))
}

/// As [`check_lift`], linearizing around caller-chosen naive lifts.
pub fn check_lift_with_lifts(
    rep: &Representation,
    naive_lifts: &[MatZp2],
) -> Result<LiftVerdict, RepError> {
    rep.validate()?;
    let lin = linearize_with_lifts(rep, naive_lifts)?;
    match lin.system.solve() {
        SolveResult::Consistent { particular, .. } => {
            let n = rep.dim();
            let nn = n * n;
            let mats = naive_lifts
                .iter()
                .enumerate()
                .map(|(i, lift)| {
                    let block = &particular[i * nn..(i + 1) * nn];
                    let a = MatFp::from_fn(rep.ctx(), n, |r, c| block[r * n + c] as i64);
                    &a.merge_kernel() * lift
                })
                .collect();
            let cert = LiftCertificate { mats };
            if !verify_certificate(rep, &cert) {
                return Err(RepError::CertificationFailed(
                    "solver solution does not lift every relator".into(),
                ));
            }
            Ok(LiftVerdict::Liftable(cert))
        }
        SolveResult::Inconsistent { functional } => {
            let refutation = Refutation {
                system: lin,
                functional,
            };
            if !refutation.is_valid() {
                return Err(RepError::CertificationFailed(
                    "refuting functional does not check".into(),
                ));
            }
            Ok(LiftVerdict::NotLiftable(Box::new(refutation)))
        }
    }
}

/// Exact check over `Z/p^2`, independent of the solver: reductions match the
/// generator matrices and every relator evaluates to the identity.
pub fn verify_certificate(rep: &Representation, cert: &LiftCertificate) -> bool {
    if cert.mats.len() != rep.gen_mats().len() {
        return false;
    }
    for (m, g) in cert.mats.iter().zip(rep.gen_mats()) {
        if m.n() != rep.dim() || m.ctx() != rep.ctx() || &m.reduce() != g {
            return false;
        }
    }
    let Ok(inverses) = cert
        .mats
        .iter()
        .map(MatZp2::inverse)
        .collect::<Result<Vec<_>, _>>()
    else {
        return false;
    };
    rep.presentation()
        .relators()
        .iter()
        .all(|w| eval_word(w, &cert.mats, &inverses, rep.ctx(), rep.dim()).is_identity())
}

pub const DEFAULT_BRUTE_BUDGET: u64 = 1 << 20;

/// Exhaustive search over all kernel corrections `(1 + pA_i)·ĝ_i`, checking
/// relators by direct evaluation over `Z/p^2`. Returns the first lift found
/// in odometer order, or `None` when there is none.
pub fn brute_force_lift(
    rep: &Representation,
    budget: u64,
) -> Result<Option<LiftCertificate>, RepError> {
    rep.validate()?;
    let ctx = rep.ctx();
    let p = ctx.p();
    let n = rep.dim();
    let nn = n * n;
    let k = rep.gen_mats().len();
    let digits = k * nn;
    let total = (p as u64)
        .checked_pow(digits as u32)
        .filter(|&t| t <= budget);
    let Some(total) = total else {
        return Err(RepError::BudgetExceeded { digits, p, budget });
    };
    let base = canonical_lifts(rep);
    let relators = rep.presentation().relators();
    let mut assignment = vec![0u32; digits];
    let build = |gen: usize, assignment: &[u32]| -> Result<(MatZp2, MatZp2), RepError> {
        let block = &assignment[gen * nn..(gen + 1) * nn];
        let a = MatFp::from_fn(ctx, n, |r, c| block[r * n + c] as i64);
        let m = &a.merge_kernel() * &base[gen];
        let inv = m.inverse()?;
        Ok((m, inv))
    };
    let mut lifts = Vec::with_capacity(k);
    let mut inverses = Vec::with_capacity(k);
    for gen in 0..k {
        let (m, inv) = build(gen, &assignment)?;
        lifts.push(m);
        inverses.push(inv);
    }
    for step in 0..total {
        if relators
            .iter()
            .all(|w| eval_word(w, &lifts, &inverses, ctx, n).is_identity())
        {
            return Ok(Some(LiftCertificate { mats: lifts }));
        }
        if step + 1 == total {
            break;
        }
        // Odometer increment; rebuild only generators whose digits moved.
        let mut pos = 0;
        loop {
            assignment[pos] += 1;
            if assignment[pos] < p {
                break;
            }
            assignment[pos] = 0;
            pos += 1;
        }
        for gen in 0..=pos / nn.max(1) {
            if gen < k {
                let (m, inv) = build(gen, &assignment)?;
                lifts[gen] = m;
                inverses[gen] = inv;
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_rings::PrimeCtx;
    use crate::groups::Presentation;

    fn c2_jordan() -> Representation {
        let ctx = PrimeCtx::new(2).unwrap();
        let pres = Presentation::from_strs(&["s"], &["s s"]).unwrap();
        let m = MatFp::from_rows(ctx, &[vec![1, 1], vec![0, 1]]).unwrap();
        Representation::checked(ctx, 2, pres, vec![m]).unwrap()
    }

    #[test]
    fn c2_jordan_block_lifts_and_matches_oracle() {
        let rep = c2_jordan();
        let verdict = check_lift(&rep).unwrap();
        let LiftVerdict::Liftable(cert) = &verdict else {
            panic!("expected a lift")
        };
        assert!(verify_certificate(&rep, cert));
        let oracle = brute_force_lift(&rep, DEFAULT_BRUTE_BUDGET).unwrap();
        assert!(oracle.is_some_and(|c| verify_certificate(&rep, &c)));
    }

    #[test]
    fn permutation_matrices_lift_verbatim() {
        let ctx = PrimeCtx::new(2).unwrap();
        let pres = Presentation::from_strs(&["s"], &["s^4"]).unwrap();
        let perm = MatFp::from_fn(ctx, 4, |r, c| i64::from(r == (c + 1) % 4));
        let rep = Representation::checked(ctx, 4, pres, vec![perm.clone()]).unwrap();
        let LiftVerdict::Liftable(cert) = check_lift(&rep).unwrap() else {
            panic!()
        };
        assert_eq!(cert.mats[0], perm.lift_canonical());
    }

    #[test]
    fn perturbed_certificate_fails() {
        let rep = c2_jordan();
        let LiftVerdict::Liftable(mut cert) = check_lift(&rep).unwrap() else {
            panic!()
        };
        // The (1,0) entry is pinned: every lift has it equal to 0 mod 4.
        let v = cert.mats[0].get(1, 0);
        cert.mats[0].set(1, 0, (v + 2) % 4);
        assert!(!verify_certificate(&rep, &cert));
        let trivial = Representation::trivial(rep.ctx(), 2, rep.presentation().clone());
        let id = LiftCertificate {
            mats: vec![MatZp2::identity(rep.ctx(), 2)],
        };
        assert!(verify_certificate(&trivial, &id));
    }

    #[test]
    fn budget_guard() {
        let ctx = PrimeCtx::new(3).unwrap();
        let pres = Presentation::from_strs(&["s", "t"], &["s^3", "t^3"]).unwrap();
        let rep = Representation::trivial(ctx, 3, pres);
        assert!(matches!(
            brute_force_lift(&rep, DEFAULT_BRUTE_BUDGET),
            Err(RepError::BudgetExceeded {
                digits: 18,
                p: 3,
                ..
            })
        ));
    }

    #[test]
    fn trivial_rep_oracle() {
        let ctx = PrimeCtx::new(3).unwrap();
        let pres = Presentation::from_strs(&["s"], &["s^3"]).unwrap();
        let rep = Representation::trivial(ctx, 1, pres);
        assert!(brute_force_lift(&rep, 100).unwrap().is_some());
        assert!(check_lift(&rep).unwrap().is_liftable());
    }
}
