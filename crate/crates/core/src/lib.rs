//! Lifting mod-`p` representations of finite groups to `Z/p^2`.
//!
//! The crate decides, with certificates in both directions, whether a
//! homomorphism `G -> GL_n(F_p)` given by generator matrices extends to
//! `GL_n(Z/p^2)`, and classifies finite groups all of whose mod-`p`
//! representations lift for every prime.

pub mod classify;
pub mod cli;
pub mod cyclic_lift;
pub mod finite_rings;
pub mod groups;
pub mod obstruction;
pub mod replift;
