//! Deciding whether every mod-`p` representation of a finite group lifts,
//! for every prime `p`.
//!
//! A group is liftable exactly when it is `C_{2^a}`, `C_3 × C_{2^a}` or
//! `C_3 ⋊ C_{2^a}`. Otherwise it contains one of five obstruction subgroups,
//! and a non-liftable representation of that subgroup, induced up, is a
//! non-liftable representation of the group. Negative answers are checked
//! by the lift checker; the verdict records whether the check succeeded.

mod catalog;
mod witness;

pub use catalog::{catalog, CatalogEntry, Expected};
pub use witness::{canonical_witness, kind_presentation, witness_representation, witness_verdict};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::finite_rings::{prime_factors, valuation, PrimeCtx, RingError};
use crate::groups::{
    find_subgroup_witness, is_listed_family, sylow, BadSubgroup, FamilyTag, FiniteGroup, GroupError,
};
use crate::obstruction::ObstructionError;
use crate::replift::{
    check_lift, induce, regular_representation, LiftCertificate, LiftVerdict, Refutation, RepError,
    Representation, MAX_DIM, MAX_ROWS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LiftableTag {
    Trivial,
    Family(FamilyTag),
}

impl fmt::Display for LiftableTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftableTag::Trivial => write!(f, "Trivial"),
            LiftableTag::Family(t) => write!(f, "{t}"),
        }
    }
}

/// Where the witness was certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertifiedAt {
    /// The induced representation of the whole group.
    Group,
    /// Induction would exceed the checker's size limits; the witness of the
    /// bad subgroup itself was certified instead.
    Subgroup,
}

/// What the lift checker said about the witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Refuted(Refutation),
    /// The checker found a lift, so the witness does not certify the
    /// verdict. Only the quaternion witness ends up here.
    Lifts(LiftCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub bad: BadSubgroup,
    pub rep: Representation,
    pub certification: Certification,
    pub level: CertifiedAt,
}

impl Witness {
    pub fn is_certified(&self) -> bool {
        self.refutation().is_some_and(Refutation::is_valid)
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match &self.certification {
            Certification::Refuted(r) => Some(r),
            Certification::Lifts(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassificationVerdict {
    Liftable(LiftableTag),
    NotLiftable(Box<Witness>),
}

impl ClassificationVerdict {
    pub fn is_liftable(&self) -> bool {
        matches!(self, ClassificationVerdict::Liftable(_))
    }
}

/// Induces the canonical witness of `bad` to `g` and runs the checker on it.
///
/// A witness that already lifts on the subgroup is reported at subgroup
/// level with its lift; induction would only produce another liftable
/// module.
pub fn witness_for_group(g: &FiniteGroup, bad: &BadSubgroup) -> Result<Witness, ClassifyError> {
    let (rep_h, verdict) = witness_verdict(bad.kind)?;
    let sub_level = |rep, certification| Witness {
        bad: bad.clone(),
        rep,
        certification,
        level: CertifiedAt::Subgroup,
    };
    let sub_refutation = match verdict {
        LiftVerdict::Liftable(cert) => return Ok(sub_level(rep_h, Certification::Lifts(cert))),
        LiftVerdict::NotLiftable(r) => *r,
    };
    let index = g.order() / bad.subgroup.order();
    let dim = index * rep_h.dim();
    let rows = g.presentation().relators().len() * dim * dim;
    if dim > MAX_DIM || rows > MAX_ROWS {
        return Ok(sub_level(rep_h, Certification::Refuted(sub_refutation)));
    }
    let rep = induce(&rep_h, g, &bad.subgroup, &bad.generators)?;
    match check_lift(&rep)? {
        LiftVerdict::NotLiftable(r) => Ok(Witness {
            bad: bad.clone(),
            rep,
            certification: Certification::Refuted(*r),
            level: CertifiedAt::Group,
        }),
        LiftVerdict::Liftable(_) => Err(ClassifyError::CertificationFailed(format!(
            "induced {} witness lifts on a group of order {}",
            bad.kind,
            g.order()
        ))),
    }
}

/// `|G| = 2^a·3^b` with `b <= 1`.
fn order_supported(g: &FiniteGroup) -> bool {
    let n = g.order() as u64;
    prime_factors(n).iter().all(|&q| q == 2 || q == 3) && valuation(n, 3) <= 1
}

pub fn classify(g: &FiniteGroup) -> Result<ClassificationVerdict, ClassifyError> {
    if let Some(bad) = find_subgroup_witness(g) {
        return Ok(ClassificationVerdict::NotLiftable(Box::new(
            witness_for_group(g, &bad)?,
        )));
    }
    if !order_supported(g) {
        return Err(ClassifyError::CertificationFailed(format!(
            "order {} has no obstruction subgroup but is not of the form 2^a or 3·2^a",
            g.order()
        )));
    }
    if g.order() == 1 {
        return Ok(ClassificationVerdict::Liftable(LiftableTag::Trivial));
    }
    match is_listed_family(g) {
        Some(tag) => Ok(ClassificationVerdict::Liftable(LiftableTag::Family(tag))),
        None => Err(ClassifyError::CertificationFailed(
            "no obstruction subgroup found but the group is not in a liftable family".into(),
        )),
    }
}

/// For `p` in `{2, 3}`, the regular representation of a Sylow `p`-subgroup
/// over `F_p` lifts. A sanity check on liftable groups, not a proof.
pub fn spot_certify(g: &FiniteGroup) -> Result<bool, ClassifyError> {
    for p in [2u32, 3] {
        let s = sylow(g, p as u64);
        let (sg, _) = s.as_group(g)?;
        let rep = regular_representation(&sg, PrimeCtx::new(p)?);
        if !check_lift(&rep)?.is_liftable() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{make_family, BadKind, Family};

    fn verdict(f: Family) -> ClassificationVerdict {
        classify(&make_family(&f).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            verdict(Family::Cyclic(12)),
            ClassificationVerdict::Liftable(LiftableTag::Family(FamilyTag::C3xC2n { a: 2 }))
        );
        assert_eq!(
            verdict(Family::SemidirectC3C2n(1)),
            ClassificationVerdict::Liftable(LiftableTag::Family(FamilyTag::C3semiC2n { a: 1 }))
        );
        let ClassificationVerdict::NotLiftable(w) = verdict(Family::GeneralizedQuaternion(8))
        else {
            panic!()
        };
        assert_eq!((w.bad.kind, w.rep.dim()), (BadKind::Q8, 6));
        assert!(!w.is_certified());
        let ClassificationVerdict::NotLiftable(w) = verdict(Family::Cyclic(5)) else {
            panic!()
        };
        assert_eq!((w.bad.kind, w.rep.dim()), (BadKind::Cp(5), 3));
        assert_eq!(
            verdict(Family::Cyclic(1)),
            ClassificationVerdict::Liftable(LiftableTag::Trivial)
        );
    }

    #[test]
    fn induced_witnesses() {
        let ClassificationVerdict::NotLiftable(w) = verdict(Family::ElementaryAbelian(2, 3)) else {
            panic!()
        };
        assert_eq!((w.rep.dim(), w.level), (8, CertifiedAt::Group));
        assert!(w.is_certified());
        let ClassificationVerdict::NotLiftable(w) = verdict(Family::Cyclic(10)) else {
            panic!()
        };
        assert_eq!((w.rep.dim(), w.rep.ctx().p()), (6, 5));
    }

    #[test]
    fn oversized_induction_falls_back() {
        // C_{11·8}: index 8 times dimension 9 exceeds 64.
        let ClassificationVerdict::NotLiftable(w) = verdict(Family::Cyclic(88)) else {
            panic!()
        };
        assert_eq!(w.level, CertifiedAt::Subgroup);
        assert_eq!(w.rep.dim(), 9);
    }

    #[test]
    fn liftable_groups_spot_certify() {
        for f in [
            Family::Cyclic(6),
            Family::SemidirectC3C2n(2),
            Family::Cyclic(8),
        ] {
            assert!(spot_certify(&make_family(&f).unwrap()).unwrap());
        }
    }
}
