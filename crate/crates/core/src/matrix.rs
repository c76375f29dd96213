//! Dense matrices over a semiring: sum, product, order, and residuation.
//!
//! Vectors are n×1 matrices; there is no separate vector type. All binary
//! operations require operands built over the same [`SemiringTag`].

use crate::error::{Error, Result};
use crate::scalar::{Scalar, SemiringTag};

/// A dense row-major matrix of [`Scalar`]s with positive dimensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    tag: SemiringTag,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Builds a matrix from row-major entries. Zero dimensions and entry
    /// counts that do not match `rows * cols` are rejected.
    pub fn new(tag: SemiringTag, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        let expected = rows
            .checked_mul(cols)
            .ok_or(Error::ZeroDimension { rows, cols })?;
        if entries.len() != expected {
            return Err(Error::EntryCount { rows, cols, expected, got: entries.len() });
        }
        Ok(Matrix { rows, cols, tag, entries })
    }

    /// Builds a matrix from a list of equal-length rows.
    pub fn from_rows(tag: SemiringTag, rows: &[Vec<Scalar>]) -> Result<Self> {
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
        Matrix::new(tag, rows.len(), cols, entries)
    }

    /// A column vector (n×1).
    pub fn column(tag: SemiringTag, entries: &[Scalar]) -> Result<Self> {
        Matrix::new(tag, entries.len(), 1, entries.to_vec())
    }

    /// Every entry set to `value`.
    pub fn filled(tag: SemiringTag, rows: usize, cols: usize, value: Scalar) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ZeroDimension { rows, cols });
        }
        let len = rows
            .checked_mul(cols)
            .ok_or(Error::ZeroDimension { rows, cols })?;
        Matrix::new(tag, rows, cols, vec![value; len])
    }

    /// The zero matrix E_ε (all entries ε).
    pub fn bottom(tag: SemiringTag, rows: usize, cols: usize) -> Result<Self> {
        Matrix::filled(tag, rows, cols, tag.zero())
    }

    /// The identity: e on the diagonal, ε elsewhere.
    pub fn identity(tag: SemiringTag, n: usize) -> Result<Self> {
        let mut m = Matrix::bottom(tag, n, n)?;
        for i in 0..n {
            m.entries[i * n + i] = tag.one();
        }
        Ok(m)
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

    /// Row-major entry slice.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    /// Entry at (`row`, `col`), zero-indexed. Panics out of range.
    pub fn get(&self, row: usize, col: usize) -> Scalar {
        assert!(row < self.rows && col < self.cols, "index ({row},{col}) out of range");
        self.entries[row * self.cols + col]
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j));
            }
        }
        Matrix { rows: self.cols, cols: self.rows, tag: self.tag, entries }
    }

    /// True when every entry is ε.
    pub fn is_bottom(&self) -> bool {
        self.entries.iter().all(|&s| s == self.tag.zero())
    }

    fn check_tag(&self, other: &Matrix) -> Result<()> {
        if self.tag != other.tag {
            return Err(Error::TagMismatch { left: self.tag, right: other.tag });
        }
        Ok(())
    }

    fn check_same_shape(&self, other: &Matrix, context: &'static str) -> Result<()> {
        self.check_tag(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                context,
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        Ok(())
    }

    /// Entrywise ⊕.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.tag.add(a, b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, tag: self.tag, entries })
    }

    /// Entrywise ∧.
    pub fn meet(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "meet")?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| self.tag.meet(a, b))
            .collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, tag: self.tag, entries })
    }

    /// Semiring product: C_ij = ⊕_k A_ik ⊗ B_kj.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_tag(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "mul",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: other.rows,
                right_cols: other.cols,
            });
        }
        let tag = self.tag;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = tag.zero();
                for k in 0..self.cols {
                    let term = tag.mul(self.get(i, k), other.get(k, j))?;
                    acc = tag.add(acc, term);
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, tag, entries })
    }

    /// Left residual A∖B: the greatest X with A ⊗ X ⪯ B, computed entrywise
    /// as (A∖B)_ij = ∧_k (A_ki ∖ B_kj). A is n×p, B is n×m, X is p×m.
    pub fn left_residual(&self, b: &Matrix) -> Result<Matrix> {
        self.check_tag(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch {
                context: "left_residual",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: b.rows,
                right_cols: b.cols,
            });
        }
        let tag = self.tag;
        let mut entries = Vec::with_capacity(self.cols * b.cols);
        for i in 0..self.cols {
            for j in 0..b.cols {
                let mut acc = tag.top();
                for k in 0..self.rows {
                    let term = tag.left_residual(self.get(k, i), b.get(k, j))?;
                    acc = tag.meet(acc, term);
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.cols, cols: b.cols, tag, entries })
    }

    /// Right residual B⌿C: the greatest X with X ⊗ C ⪯ B, computed entrywise
    /// as (B⌿C)_ij = ∧_k (B_ik ⌿ C_jk). B is n×m, C is p×m, X is n×p.
    pub fn right_residual(&self, c: &Matrix) -> Result<Matrix> {
        self.check_tag(c)?;
        if self.cols != c.cols {
            return Err(Error::DimensionMismatch {
                context: "right_residual",
                left_rows: self.rows,
                left_cols: self.cols,
                right_rows: c.rows,
                right_cols: c.cols,
            });
        }
        let tag = self.tag;
        let mut entries = Vec::with_capacity(self.rows * c.rows);
        for i in 0..self.rows {
            for j in 0..c.rows {
                let mut acc = tag.top();
                for k in 0..self.cols {
                    let term = tag.right_residual(self.get(i, k), c.get(j, k))?;
                    acc = tag.meet(acc, term);
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: c.rows, tag, entries })
    }

    /// Entrywise canonical order.
    pub fn leq(&self, other: &Matrix) -> Result<bool> {
        self.check_same_shape(other, "leq")?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(&a, &b)| self.tag.leq(a, b)))
    }

    /// True iff A ⊗ (A∖b) = b, i.e. b lies in the image of x ↦ A⊗x and the
    /// residual is the greatest solution of the equality A⊗x = b.
    pub fn is_equality_solvable(&self, b: &Matrix) -> Result<bool> {
        let greatest = self.left_residual(b)?;
        Ok(self.mul(&greatest)? == *b)
    }
}
