//! Group algebras over `F_p` and `Z/p^2`, the obstruction class `θ(f, h)`,
//! and the modules `F_p[G]/F_p[G]·h` it obstructs.

mod algebra;
mod quotient;
mod theta;

pub use algebra::{
    algebra_mul, parse_elt, right_annihilator, write_elt, AlgFp, AlgZp2, GroupAlgebraElement,
};
pub use quotient::module_of_quotient;
pub use theta::{cyclic_witness, q_polynomial, theta, theta_with_lifts, CyclicWitness, ThetaClass};

use thiserror::Error;

use crate::finite_rings::RingError;
use crate::groups::GroupError;
use crate::replift::RepError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("f·h is not zero in F_p[G]")]
    ProductNotZero,
    #[error("(p, n) = ({p}, {n}) is outside the range m <= p^n - m with m = p^(n-1) + 1")]
    OutOfRange { p: u32, n: u32 },
    #[error("the generating element is zero")]
    ZeroElement,
    #[error("mismatch: {0}")]
    Mismatch(String),
    #[error("malformed element: {0}")]
    Malformed(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
}
