//! The interval semiring I(S) and its matrix lifting.
//!
//! Intervals [lower, upper] with lower ⪯ upper form a semiring under
//! boundwise ⊕ and ⊗. It is isomorphic to the subsemiring of ordered pairs
//! inside the coordinatewise pair semiring, and residuation in it is the
//! pair residual followed by the projector onto ordered pairs:
//!
//! ```text
//! a ∖̄ b = [ (a̲∖b̲) ∧ (ā∖b̄), ā∖b̄ ]
//! ```
//!
//! The meet in the lower bound is what makes interval residuation genuinely
//! two-bound: residuating the bounds independently can produce a pair that
//! is not an interval at all.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, SemiringTag};

/// A closed interval [lower, upper] with lower ⪯ upper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    lower: Scalar,
    upper: Scalar,
    tag: SemiringTag,
}

/// A possibly unordered pair, the transient input of [`ScalarPair::project`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScalarPair {
    pub first: Scalar,
    pub second: Scalar,
    pub tag: SemiringTag,
}

impl ScalarPair {
    pub fn new(tag: SemiringTag, first: Scalar, second: Scalar) -> Self {
        ScalarPair { first, second, tag }
    }

    /// Projects onto ordered pairs: (x′, x″) ↦ [x′ ∧ x″, x″], the greatest
    /// interval below the pair. Identity on pairs that are already ordered.
    pub fn project(self) -> Interval {
        Interval {
            lower: self.tag.meet(self.first, self.second),
            upper: self.second,
            tag: self.tag,
        }
    }
}

impl Interval {
    /// Builds an interval from raw bounds. Bounds with lower ⋠ upper are an
    /// error, not silently projected.
    pub fn new(tag: SemiringTag, lower: Scalar, upper: Scalar) -> Result<Self> {
        if !tag.leq(lower, upper) {
            return Err(Error::InvalidInterval { lower, upper });
        }
        Ok(Interval { lower, upper, tag })
    }

    /// The degenerate interval [s, s].
    pub fn degenerate(tag: SemiringTag, s: Scalar) -> Self {
        Interval { lower: s, upper: s, tag }
    }

    /// The zero interval [ε, ε].
    pub fn bottom(tag: SemiringTag) -> Self {
        Interval::degenerate(tag, tag.zero())
    }

    /// The unit interval [e, e].
    pub fn unit(tag: SemiringTag) -> Self {
        Interval::degenerate(tag, tag.one())
    }

    /// The top interval [⊤, ⊤].
    pub fn top(tag: SemiringTag) -> Self {
        Interval::degenerate(tag, tag.top())
    }

    pub fn lower(&self) -> Scalar {
        self.lower
    }

    pub fn upper(&self) -> Scalar {
        self.upper
    }

    pub fn tag(&self) -> SemiringTag {
        self.tag
    }

    pub fn is_degenerate(&self) -> bool {
        self.lower == self.upper
    }

    fn check_tag(&self, other: &Interval) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch { left: self.tag, right: other.tag });
        }
        Ok(())
    }

    /// Boundwise ⊕.
    pub fn add(&self, other: &Interval) -> Result<Interval> {
        self.check_tag(other)?;
        Ok(Interval {
            lower: self.tag.add(self.lower, other.lower),
            upper: self.tag.add(self.upper, other.upper),
            tag: self.tag,
        })
    }

    /// Boundwise ⊗: the tightest interval containing all products of
    /// members, since ⊗ is order-preserving in each argument.
    pub fn mul(&self, other: &Interval) -> Result<Interval> {
        self.check_tag(other)?;
        Ok(Interval {
            lower: self.tag.mul(self.lower, other.lower)?,
            upper: self.tag.mul(self.upper, other.upper)?,
            tag: self.tag,
        })
    }

    /// Interval residual a ∖̄ b: the greatest interval x with a ⊗ x ⪯ b in
    /// the canonical (boundwise) order.
    pub fn left_residual(&self, b: &Interval) -> Result<Interval> {
        self.check_tag(b)?;
        let pair = ScalarPair::new(
            self.tag,
            self.tag.left_residual(self.lower, b.lower)?,
            self.tag.left_residual(self.upper, b.upper)?,
        );
        Ok(pair.project())
    }

    /// Canonical order on intervals: boundwise ⪯.
    pub fn leq(&self, other: &Interval) -> Result<bool> {
        self.check_tag(other)?;
        Ok(self.tag.leq(self.lower, other.lower) && self.tag.leq(self.upper, other.upper))
    }

    /// Set membership: lower ⪯ t ⪯ upper.
    pub fn contains(&self, t: Scalar) -> bool {
        self.tag.leq(self.lower, t) && self.tag.leq(t, self.upper)
    }

    /// Set inclusion: x ⊂ y iff y̲ ⪯ x̲ ⪯ x̄ ⪯ ȳ.
    pub fn subset(&self, other: &Interval) -> Result<bool> {
        self.check_tag(other)?;
        Ok(self.tag.leq(other.lower, self.lower) && self.tag.leq(self.upper, other.upper))
    }
}

/// A dense matrix of [`Interval`]s. Operations are computed on the bound
/// matrices, which is equivalent to entrywise interval arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalMatrix {
    rows: usize,
    cols: usize,
    tag: SemiringTag,
    entries: Vec<Interval>,
}

impl IntervalMatrix {
    pub fn new(tag: SemiringTag, rows: usize, cols: usize, entries: Vec<Interval>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        let expected = rows
            .checked_mul(cols)
            .ok_or(Error::ZeroDimension { rows, cols })?;
        if entries.len() != expected {
            return Err(Error::EntryCount { rows, cols, expected, got: entries.len() });
        }
        for e in &entries {
            if e.tag != tag {
                return Err(Error::TagMismatch { left: tag, right: e.tag });
            }
        }
        Ok(IntervalMatrix { rows, cols, tag, entries })
    }

    pub fn from_rows(tag: SemiringTag, rows: &[Vec<Interval>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::ZeroDimension { rows: 0, cols: 0 });
        }
        let cols = rows[0].len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedRows { row: i, expected: cols, got: row.len() });
            }
        }
        let entries = rows.iter().flatten().copied().collect();
        IntervalMatrix::new(tag, rows.len(), cols, entries)
    }

    /// Pairs a lower-bound matrix with an upper-bound matrix; every entry
    /// must satisfy lower ⪯ upper.
    pub fn from_bounds(lower: &Matrix, upper: &Matrix) -> Result<Self> {
        if lower.tag() != upper.tag() {
            return Err(Error::TagMismatch { left: lower.tag(), right: upper.tag() });
        }
        if lower.rows() != upper.rows() || lower.cols() != upper.cols() {
            return Err(Error::DimensionMismatch {
                context: "from_bounds",
                left_rows: lower.rows(),
                left_cols: lower.cols(),
                right_rows: upper.rows(),
                right_cols: upper.cols(),
            });
        }
        let tag = lower.tag();
        let entries = lower
            .entries()
            .iter()
            .zip(upper.entries())
            .map(|(&lo, &hi)| Interval::new(tag, lo, hi))
            .collect::<Result<Vec<_>>>()?;
        IntervalMatrix::new(tag, lower.rows(), lower.cols(), entries)
    }

    /// Embeds a point matrix as degenerate intervals.
    pub fn degenerate(m: &Matrix) -> Self {
        let entries = m
            .entries()
            .iter()
            .map(|&s| Interval::degenerate(m.tag(), s))
            .collect();
        IntervalMatrix { rows: m.rows(), cols: m.cols(), tag: m.tag(), entries }
    }

    /// A column vector (n×1).
    pub fn column(tag: SemiringTag, entries: &[Interval]) -> Result<Self> {
        IntervalMatrix::new(tag, entries.len(), 1, entries.to_vec())
    }

    /// The identity: [e, e] on the diagonal, [ε, ε] elsewhere.
    pub fn identity(tag: SemiringTag, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension { rows: 0, cols: 0 });
        }
        let len = n.checked_mul(n).ok_or(Error::ZeroDimension { rows: n, cols: n })?;
        let mut entries = vec![Interval::bottom(tag); len];
        for i in 0..n {
            entries[i * n + i] = Interval::unit(tag);
        }
        IntervalMatrix::new(tag, n, n, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tag(&self) -> SemiringTag {
        self.tag
    }

    pub fn entries(&self) -> &[Interval] {
        &self.entries
    }

    /// Entry at (`row`, `col`), zero-indexed. Panics out of range.
    pub fn get(&self, row: usize, col: usize) -> Interval {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        self.entries[row * self.cols + col]
    }

    /// The matrix of lower bounds.
    pub fn lower_matrix(&self) -> Matrix {
        let entries = self.entries.iter().map(|iv| iv.lower).collect();
        Matrix::new(self.tag, self.rows, self.cols, entries).expect("bounds of a valid interval matrix")
    }

    /// The matrix of upper bounds.
    pub fn upper_matrix(&self) -> Matrix {
        let entries = self.entries.iter().map(|iv| iv.upper).collect();
        Matrix::new(self.tag, self.rows, self.cols, entries).expect("bounds of a valid interval matrix")
    }

    /// True when every entry is [ε, ε].
    pub fn is_bottom(&self) -> bool {
        self.entries.iter().all(|iv| *iv == Interval::bottom(self.tag))
    }

    pub fn is_degenerate(&self) -> bool {
        self.entries.iter().all(Interval::is_degenerate)
    }

    /// Entrywise ⊕, equivalently boundwise matrix ⊕.
    pub fn add(&self, other: &IntervalMatrix) -> Result<IntervalMatrix> {
        let lower = self.lower_matrix().add(&other.lower_matrix())?;
        let upper = self.upper_matrix().add(&other.upper_matrix())?;
        IntervalMatrix::from_bounds(&lower, &upper)
    }

    /// Interval matrix product: C_ij = ⊕̄_k A_ik ⊗̄ B_kj, equivalently the
    /// point product applied to the bound matrices.
    pub fn mul(&self, other: &IntervalMatrix) -> Result<IntervalMatrix> {
        let lower = self.lower_matrix().mul(&other.lower_matrix())?;
        let upper = self.upper_matrix().mul(&other.upper_matrix())?;
        IntervalMatrix::from_bounds(&lower, &upper)
    }

    /// Interval matrix residual: the greatest interval matrix X with
    /// A ⊗̄ X ⪯ B. Residuates the bound matrices, then projects entrywise.
    pub fn left_residual(&self, b: &IntervalMatrix) -> Result<IntervalMatrix> {
        let lower = self.lower_matrix().left_residual(&b.lower_matrix())?;
        let upper = self.upper_matrix().left_residual(&b.upper_matrix())?;
        let entries = lower
            .entries()
            .iter()
            .zip(upper.entries())
            .map(|(&lo, &hi)| ScalarPair::new(self.tag, lo, hi).project())
            .collect();
        IntervalMatrix::new(self.tag, lower.rows(), lower.cols(), entries)
    }

    /// Canonical order: boundwise ⪯ on every entry.
    pub fn leq(&self, other: &IntervalMatrix) -> Result<bool> {
        Ok(self.lower_matrix().leq(&other.lower_matrix())?
            && self.upper_matrix().leq(&other.upper_matrix())?)
    }
}
