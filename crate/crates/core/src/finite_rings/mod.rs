//! Exact arithmetic over `F_p` and `Z/p^2`: scalars, dense square matrices,
//! affine solving over `F_p`, and integer / mod-`p` polynomials.

mod affine;
mod matrix;
mod poly;
mod scalar;

pub use affine::{AffineSystem, RowSpace, SolveResult, UnknownLayout};
pub use matrix::{Fp, Level, Mat, MatFp, MatZp2, Zp2};
pub use poly::{binom_div_p, binomial, PolyFp, PolyInt};
pub use scalar::{inv_mod, is_prime, prime_factors, valuation, PrimeCtx, MAX_PRIME};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("{0} is not a supported prime (need 2 <= p <= 32768)")]
    NotPrime(u32),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: p={left} vs p={right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry {value} is not reduced modulo {modulus}")]
    EntryOutOfRange { value: u64, modulus: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not congruent to the identity mod p (entry {row},{col})")]
    NotInKernel { row: usize, col: usize },
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("{p} does not divide binom({n}, {k})")]
    NotDivisible { n: u64, k: u64, p: u32 },
    #[error("malformed affine system: {0}")]
    Malformed(String),
}
