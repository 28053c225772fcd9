//! Deciding whether a representation `G -> GL_n(F_p)` lifts to
//! `GL_n(Z/p^2)`, with certificates either way, plus the functors used to
//! move representations between groups.

mod check;
mod format;
mod linearize;
mod ops;
mod rep;

pub use check::{
    brute_force_lift, check_lift, check_lift_with_lifts, verify_certificate, LiftCertificate,
    LiftVerdict, Refutation, DEFAULT_BRUTE_BUDGET,
};
pub use format::{parse_rep, write_rep};
pub use linearize::{
    canonical_lifts, linearize, linearize_with_lifts, relator_defect, LinearizedSystem, MAX_DIM,
    MAX_ROWS,
};
pub use ops::{direct_sum, element_matrices, induce, regular_representation, restrict};
pub use rep::Representation;

use thiserror::Error;

use crate::finite_rings::RingError;
use crate::groups::GroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("subgroup does not belong to the group")]
    NotASubgroup,
    #[error("generator matrices do not define a representation of the subgroup: {0}")]
    UnrealizedPresentation(String),
    #[error("brute force needs p^{digits} assignments (p={p}), over the budget of {budget}")]
    BudgetExceeded { digits: usize, p: u32, budget: u64 },
    #[error("problem too large: {0}")]
    TooLarge(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("certification failed: {0}")]
    CertificationFailed(String),
}
