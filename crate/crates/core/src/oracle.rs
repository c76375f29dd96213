//! Brute-force reference implementations over small finite grids.
//!
//! These certify the "greatest solution" and "greatest fixed point" claims
//! independently of the analytic formulas: feasibility of a candidate is
//! decided by re-expanding products in 128-bit arithmetic, never by calling
//! the matrix kernels under test. They exist for the test suites; the point
//! is dumb trustworthiness, not speed.

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalMatrix};
use crate::matrix::Matrix;
use crate::scalar::{Scalar, SemiringTag};
use crate::solver::pi_step;

/// Hard cap on candidate vectors per enumeration.
pub const ENUMERATION_BUDGET: u128 = 1_000_000;

/// A finite ascending sample of scalars, always containing ε (-∞) and ⊤ (+∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    values: Vec<Scalar>,
}

impl Grid {
    /// Sorts, deduplicates, and validates that both infinities are present.
    pub fn new(values: impl IntoIterator<Item = Scalar>) -> Result<Self> {
        let mut values: Vec<Scalar> = values.into_iter().collect();
        values.sort();
        values.dedup();
        if values.first() != Some(&Scalar::NegInf) || values.last() != Some(&Scalar::PosInf) {
            return Err(Error::InvalidGrid);
        }
        Ok(Grid { values })
    }

    /// {-∞} ∪ {lo..=hi} ∪ {+∞}.
    pub fn from_range(lo: i64, hi: i64) -> Self {
        let mut values = vec![Scalar::NegInf];
        values.extend((lo..=hi).map(Scalar::Finite));
        values.push(Scalar::PosInf);
        Grid { values }
    }

    /// The default grid {-∞} ∪ {-10..=10} ∪ {+∞}.
    pub fn default_grid() -> Self {
        Grid::from_range(-10, 10)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a valid grid always holds ε and ⊤
    }
}

/// Decides a ⊗ x ⪯ bound without the checked scalar kernel: MaxPlus sums are
/// evaluated in i128, so no representable input can overflow.
fn mul_leq(tag: SemiringTag, a: Scalar, x: Scalar, bound: Scalar) -> bool {
    match tag {
        SemiringTag::MaxPlus => {
            let product = match (a, x) {
                (Scalar::NegInf, _) | (_, Scalar::NegInf) => return true,
                (Scalar::PosInf, _) | (_, Scalar::PosInf) => return bound == Scalar::PosInf,
                (Scalar::Finite(a), Scalar::Finite(x)) => a as i128 + x as i128,
            };
            match bound {
                Scalar::PosInf => true,
                Scalar::NegInf => false,
                Scalar::Finite(b) => product <= b as i128,
            }
        }
        SemiringTag::MaxMin => a.min(x) <= bound,
    }
}

/// The greatest x in the grid with a ⊗ x ⪯ b. ε is always feasible, so a
/// maximum exists.
pub fn brute_greatest_scalar(tag: SemiringTag, a: Scalar, b: Scalar, grid: &Grid) -> Scalar {
    grid.values
        .iter()
        .copied()
        .filter(|&x| mul_leq(tag, a, x, b))
        .fold(Scalar::NegInf, Scalar::max)
}

/// A ⊗ x ⪯ column, decided term by term (a max is below the bound iff every
/// term is).
fn column_feasible(a: &Matrix, x: &[Scalar], bound_col: &[Scalar]) -> bool {
    (0..a.rows()).all(|i| {
        (0..a.cols()).all(|k| mul_leq(a.tag(), a.get(i, k), x[k], bound_col[i]))
    })
}

fn check_budget(choices: usize, len: usize) -> Result<()> {
    let candidates = (choices as u128)
        .checked_pow(len as u32)
        .unwrap_or(u128::MAX);
    if candidates > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget { candidates, limit: ENUMERATION_BUDGET });
    }
    Ok(())
}

/// Odometer over `len` positions, each ranging over `choices` indices.
/// Calls `visit` with every index assignment.
fn for_each_assignment(choices: usize, len: usize, mut visit: impl FnMut(&[usize])) {
    let mut idx = vec![0usize; len];
    loop {
        visit(&idx);
        let mut pos = 0;
        loop {
            if pos == len {
                return;
            }
            idx[pos] += 1;
            if idx[pos] < choices {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn check_pair(a_tag: SemiringTag, b_tag: SemiringTag, a_rows: usize, b_rows: usize) -> Result<()> {
    if a_tag != b_tag {
        return Err(Error::TagMismatch { left: a_tag, right: b_tag });
    }
    if a_rows != b_rows {
        return Err(Error::DimensionMismatch {
            context: "oracle rows",
            left_rows: a_rows,
            left_cols: 0,
            right_rows: b_rows,
            right_cols: 0,
        });
    }
    Ok(())
}

/// The entrywise-greatest x over grid^p with A ⊗ x ⪯ B, one column of x per
/// column of B. Feasible vectors form a lower set closed under ⊕, so their
/// ⊕-fold is both feasible and greatest.
pub fn brute_greatest_vector(a: &Matrix, b: &Matrix, grid: &Grid) -> Result<Matrix> {
    check_pair(a.tag(), b.tag(), a.rows(), b.rows())?;
    let p = a.cols();
    check_budget(grid.len(), p)?;

    let mut columns: Vec<Vec<Scalar>> = Vec::with_capacity(b.cols());
    let mut x = vec![Scalar::NegInf; p];
    for j in 0..b.cols() {
        let bound_col: Vec<Scalar> = (0..b.rows()).map(|i| b.get(i, j)).collect();
        let mut best = vec![Scalar::NegInf; p];
        for_each_assignment(grid.len(), p, |idx| {
            for (slot, &i) in x.iter_mut().zip(idx) {
                *slot = grid.values[i];
            }
            if column_feasible(a, &x, &bound_col) {
                for (acc, &v) in best.iter_mut().zip(&x) {
                    *acc = (*acc).max(v);
                }
            }
        });
        columns.push(best);
    }

    let mut entries = Vec::with_capacity(p * b.cols());
    for i in 0..p {
        for col in &columns {
            entries.push(col[i]);
        }
    }
    Matrix::new(a.tag(), p, b.cols(), entries)
}

/// All ordered pairs over the grid, as intervals.
fn interval_choices(tag: SemiringTag, grid: &Grid) -> Vec<Interval> {
    let mut out = Vec::new();
    for (i, &lo) in grid.values.iter().enumerate() {
        for &hi in &grid.values[i..] {
            out.push(Interval::new(tag, lo, hi).expect("grid is sorted"));
        }
    }
    out
}

/// Interval counterpart of [`brute_greatest_vector`]: the boundwise-greatest
/// interval vector x (bounds drawn from the grid) with A ⊗̄ x ⪯ B.
pub fn brute_greatest_interval_vector(
    a: &IntervalMatrix,
    b: &IntervalMatrix,
    grid: &Grid,
) -> Result<IntervalMatrix> {
    check_pair(a.tag(), b.tag(), a.rows(), b.rows())?;
    let tag = a.tag();
    let p = a.cols();
    let choices = interval_choices(tag, grid);
    check_budget(choices.len(), p)?;

    let a_lo = a.lower_matrix();
    let a_hi = a.upper_matrix();
    let mut columns: Vec<Vec<Interval>> = Vec::with_capacity(b.cols());
    for j in 0..b.cols() {
        let lo_col: Vec<Scalar> = (0..b.rows()).map(|i| b.get(i, j).lower()).collect();
        let hi_col: Vec<Scalar> = (0..b.rows()).map(|i| b.get(i, j).upper()).collect();
        let mut best = vec![Interval::bottom(tag); p];
        let mut lo = vec![Scalar::NegInf; p];
        let mut hi = vec![Scalar::NegInf; p];
        for_each_assignment(choices.len(), p, |idx| {
            for k in 0..p {
                lo[k] = choices[idx[k]].lower();
                hi[k] = choices[idx[k]].upper();
            }
            if column_feasible(&a_lo, &lo, &lo_col) && column_feasible(&a_hi, &hi, &hi_col) {
                for k in 0..p {
                    best[k] = Interval::new(
                        tag,
                        best[k].lower().max(lo[k]),
                        best[k].upper().max(hi[k]),
                    )
                    .expect("boundwise max of intervals is an interval");
                }
            }
        });
        columns.push(best);
    }

    let mut entries = Vec::with_capacity(p * b.cols());
    for i in 0..p {
        for col in &columns {
            entries.push(col[i]);
        }
    }
    IntervalMatrix::new(tag, p, b.cols(), entries)
}

/// All non-bottom grid vectors x ⪯ x_cap with Π(x) = x, sorted ascending by
/// entries. The all-ε vector is excluded: it sits outside the scope of the
/// fixed-point theorem, and listing it would mask genuinely empty results.
pub fn brute_fixed_points(
    a: &Matrix,
    b: &Matrix,
    grid: &Grid,
    x_cap: &Matrix,
) -> Result<Vec<Matrix>> {
    check_pair(a.tag(), b.tag(), a.rows(), b.rows())?;
    let p = a.cols();
    check_budget(grid.len(), p)?;

    let mut found = Vec::new();
    let mut error = None;
    let mut x = vec![Scalar::NegInf; p];
    for_each_assignment(grid.len(), p, |idx| {
        if error.is_some() {
            return;
        }
        for (slot, &i) in x.iter_mut().zip(idx) {
            *slot = grid.values[i];
        }
        if x.iter().all(|&v| v == Scalar::NegInf) {
            return;
        }
        if !x.iter().enumerate().all(|(k, &v)| v <= x_cap.get(k, 0)) {
            return;
        }
        let candidate = Matrix::new(a.tag(), p, 1, x.clone()).expect("column vector");
        match pi_step(a, b, &candidate) {
            Ok(next) => {
                if next == candidate {
                    found.push(candidate);
                }
            }
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    found.sort_by(|m1, m2| m1.entries().cmp(m2.entries()));
    Ok(found)
}

/// Interval counterpart of [`brute_fixed_points`]: non-bottom interval
/// vectors with bounds on the grid, ⪯ x_cap boundwise, fixed under Π.
pub fn brute_fixed_points_interval(
    a: &IntervalMatrix,
    b: &IntervalMatrix,
    grid: &Grid,
    x_cap: &IntervalMatrix,
) -> Result<Vec<IntervalMatrix>> {
    check_pair(a.tag(), b.tag(), a.rows(), b.rows())?;
    let tag = a.tag();
    let p = a.cols();
    let choices = interval_choices(tag, grid);
    check_budget(choices.len(), p)?;

    let mut found = Vec::new();
    let mut error = None;
    for_each_assignment(choices.len(), p, |idx| {
        if error.is_some() {
            return;
        }
        let entries: Vec<Interval> = idx.iter().map(|&i| choices[i]).collect();
        if entries.iter().all(|iv| *iv == Interval::bottom(tag)) {
            return;
        }
        let in_cap = entries.iter().enumerate().all(|(k, iv)| {
            let cap = x_cap.get(k, 0);
            iv.lower() <= cap.lower() && iv.upper() <= cap.upper()
        });
        if !in_cap {
            return;
        }
        let candidate = IntervalMatrix::new(tag, p, 1, entries).expect("column vector");
        match pi_step(a, b, &candidate) {
            Ok(next) => {
                if next == candidate {
                    found.push(candidate);
                }
            }
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    found.sort_by(|m1, m2| {
        let key = |m: &IntervalMatrix| -> Vec<Scalar> {
            m.entries().iter().flat_map(|iv| [iv.lower(), iv.upper()]).collect()
        };
        key(m1).cmp(&key(m2))
    });
    Ok(found)
}
