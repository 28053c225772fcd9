use crate::finite_rings::{Level, Mat, MatFp, PrimeCtx};
use crate::groups::{Presentation, Word};

use super::RepError;

/// A homomorphism `G -> GL_n(F_p)` given by one matrix per presentation
/// generator. Construction only checks shapes; [`validate`](Self::validate)
/// checks invertibility and relators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    ctx: PrimeCtx,
    n: usize,
    presentation: Presentation,
    gens: Vec<MatFp>,
}

impl Representation {
    pub fn new(
        ctx: PrimeCtx,
        n: usize,
        presentation: Presentation,
        gens: Vec<MatFp>,
    ) -> Result<Self, RepError> {
        if gens.len() != presentation.num_generators() {
            return Err(RepError::Mismatch(format!(
                "{} matrices for {} generators",
                gens.len(),
                presentation.num_generators()
            )));
        }
        for (i, m) in gens.iter().enumerate() {
            if m.n() != n || m.ctx() != ctx {
                return Err(RepError::Mismatch(format!(
                    "matrix for generator {} is {}x{} over p={}, expected {n}x{n} over p={}",
                    presentation.names()[i],
                    m.n(),
                    m.n(),
                    m.ctx().p(),
                    ctx.p()
                )));
            }
        }
        Ok(Self {
            ctx,
            n,
            presentation,
            gens,
        })
    }

    /// Shape checks plus [`validate`](Self::validate).
    pub fn checked(
        ctx: PrimeCtx,
        n: usize,
        presentation: Presentation,
        gens: Vec<MatFp>,
    ) -> Result<Self, RepError> {
        let rep = Self::new(ctx, n, presentation, gens)?;
        rep.validate()?;
        Ok(rep)
    }

    /// The representation sending every generator to the identity.
    pub fn trivial(ctx: PrimeCtx, n: usize, presentation: Presentation) -> Self {
        let gens = vec![MatFp::identity(ctx, n); presentation.num_generators()];
        Self {
            ctx,
            n,
            presentation,
            gens,
        }
    }

    pub fn ctx(&self) -> PrimeCtx {
        self.ctx
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn gen_mats(&self) -> &[MatFp] {
        &self.gens
    }

    /// Every generator matrix is invertible and every relator evaluates to
    /// the identity; reports the first failure.
    pub fn validate(&self) -> Result<(), RepError> {
        let names = self.presentation.names();
        let mut inverses = Vec::with_capacity(self.gens.len());
        for (i, m) in self.gens.iter().enumerate() {
            let inv = m.inverse().map_err(|_| {
                RepError::InvalidRepresentation(format!("generator {} is not invertible", names[i]))
            })?;
            inverses.push(inv);
        }
        for (k, w) in self.presentation.relators().iter().enumerate() {
            if !eval_word(w, &self.gens, &inverses, self.ctx, self.n).is_identity() {
                return Err(RepError::InvalidRepresentation(format!(
                    "relator {} (`{}`) does not evaluate to the identity",
                    k + 1,
                    w.render(names)
                )));
            }
        }
        Ok(())
    }

    pub fn gen_inverses(&self) -> Result<Vec<MatFp>, RepError> {
        self.gens
            .iter()
            .map(|m| m.inverse().map_err(RepError::from))
            .collect()
    }

    /// Evaluates a word over `F_p`.
    pub fn eval(&self, w: &Word) -> Result<MatFp, RepError> {
        Ok(eval_word(
            w,
            &self.gens,
            &self.gen_inverses()?,
            self.ctx,
            self.n,
        ))
    }

    /// `C ρ C^{-1}`.
    pub fn conjugate(&self, c: &MatFp) -> Result<Self, RepError> {
        let gens = self
            .gens
            .iter()
            .map(|m| m.conjugate_by(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(self.ctx, self.n, self.presentation.clone(), gens)
    }

    /// Replaces every generator by the identity (keeps shape and presentation).
    pub fn trivialized(&self) -> Self {
        Self::trivial(self.ctx, self.n, self.presentation.clone())
    }
}

/// Product of generator matrices (or their inverses) along a word.
pub(crate) fn eval_word<L: Level>(
    w: &Word,
    gens: &[Mat<L>],
    inverses: &[Mat<L>],
    ctx: PrimeCtx,
    n: usize,
) -> Mat<L> {
    w.fold(Mat::identity(ctx, n), |acc, l| {
        let m = if l.inverse {
            &inverses[l.gen]
        } else {
            &gens[l.gen]
        };
        &acc * m
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_rep_is_valid() {
        let ctx = PrimeCtx::new(3).unwrap();
        let pres = Presentation::from_strs(&["s", "t"], &["s^3", "t^2", "s t s^-1 t^-1"]).unwrap();
        assert!(Representation::trivial(ctx, 4, pres).validate().is_ok());
    }

    #[test]
    fn relator_violation_is_reported() {
        let ctx = PrimeCtx::new(2).unwrap();
        let pres = Presentation::from_strs(&["s"], &["s^3"]).unwrap();
        let m = MatFp::from_rows(ctx, &[vec![1, 1], vec![0, 1]]).unwrap();
        let rep = Representation::new(ctx, 2, pres, vec![m]).unwrap();
        match rep.validate() {
            Err(RepError::InvalidRepresentation(msg)) => assert!(msg.contains("relator 1")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn singular_generator_rejected() {
        let ctx = PrimeCtx::new(2).unwrap();
        let pres = Presentation::from_strs(&["s"], &[]).unwrap();
        let rep = Representation::new(ctx, 1, pres, vec![MatFp::zero(ctx, 1)]).unwrap();
        assert!(matches!(
            rep.validate(),
            Err(RepError::InvalidRepresentation(_))
        ));
    }

    #[test]
    fn shape_mismatch() {
        let ctx = PrimeCtx::new(2).unwrap();
        let pres = Presentation::from_strs(&["s", "t"], &[]).unwrap();
        assert!(Representation::new(ctx, 1, pres.clone(), vec![MatFp::identity(ctx, 1)]).is_err());
        assert!(Representation::new(
            ctx,
            1,
            pres,
            vec![MatFp::identity(ctx, 1), MatFp::identity(ctx, 2)]
        )
        .is_err());
    }
}
