//! Exact linear algebra over complete idempotent semirings.
//!
//! The crate provides, over the extended integers with the max-plus and
//! max-min semirings:
//!
//! - scalar and matrix ⊕/⊗/∧ together with residuation (greatest
//!   subsolutions of A ⊗ x ⪯ B and x ⊗ A ⪯ B),
//! - the interval semiring with its projector and residuated product,
//! - a fixed-point solver for two-sided systems A ⊗ x = B ⊗ y in point and
//!   interval form,
//! - brute-force grid oracles that certify the greatest-solution and
//!   greatest-fixed-point claims in tests.
//!
//! All arithmetic is exact; finite overflow is reported, never wrapped.

pub mod error;
pub mod interval;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalMatrix, ScalarPair};
pub use matrix::Matrix;
pub use scalar::{Scalar, SemiringTag};
pub use solver::{
    pi_step, solve_two_sided, verify_two_sided, ResiduatedMatrix, SolveOptions, SolveOutcome,
    SolveStatus,
};

// Compile-check the README examples.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
