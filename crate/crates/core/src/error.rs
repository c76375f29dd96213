//! Error type shared by all modules.

use crate::scalar::{Scalar, SemiringTag};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A finite-scalar operation left the representable integer range.
    #[error("integer overflow evaluating {op}({lhs}, {rhs})")]
    Overflow {
        op: &'static str,
        lhs: Scalar,
        rhs: Scalar,
    },

    #[error("dimension mismatch in {context}: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        context: &'static str,
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("semiring mismatch: {left} vs {right}")]
    TagMismatch { left: SemiringTag, right: SemiringTag },

    #[error("matrix dimensions must be positive, got {rows}x{cols}")]
    ZeroDimension { rows: usize, cols: usize },

    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {got}")]
    EntryCount {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    #[error("row {row} has {got} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },

    /// Raw interval bounds violate lower ⪯ upper; callers must project
    /// explicitly if that is what they mean.
    #[error("invalid interval: lower bound {lower} exceeds upper bound {upper}")]
    InvalidInterval { lower: Scalar, upper: Scalar },

    #[error("iteration limit must be at least 1")]
    InvalidIterationLimit,

    #[error("grid must contain -inf and +inf")]
    InvalidGrid,

    #[error("enumeration budget exceeded: {candidates} candidates (limit {limit})")]
    EnumerationBudget { candidates: u128, limit: u128 },

    #[error("invalid scalar literal {0:?}: expected \"-inf\", \"+inf\", or a base-10 integer")]
    ParseScalar(String),

    #[error("unknown semiring {0:?}: expected \"maxplus\" or \"maxmin\"")]
    ParseTag(String),
}
