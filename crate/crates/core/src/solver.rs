//! Fixed-point solver for two-sided systems A ⊗ x = B ⊗ y.
//!
//! The iteration applies
//!
//! ```text
//! Π : x ↦ A ∖ (B ⊗ (B ∖ (A ⊗ x)))
//! ```
//!
//! until two successive iterates coincide. After the first step the sequence
//! is non-increasing, so over integer-valued carriers it either reaches a
//! fixed point, collapses to the all-ε vector, or keeps descending until the
//! iteration cap. A non-bottom fixed point x together with y = B ∖ (A ⊗ x)
//! solves the system exactly. The same iteration runs over point matrices
//! and interval matrices, which share the product/residual kernels through
//! [`ResiduatedMatrix`].

use crate::error::{Error, Result};
use crate::interval::IntervalMatrix;
use crate::matrix::Matrix;
use crate::scalar::SemiringTag;

/// The kernels Π is built from. Implemented by [`Matrix`] and
/// [`IntervalMatrix`]; `mul` and `left_residual` must form a Galois
/// connection for the order decided by `leq`.
pub trait ResiduatedMatrix: Sized + Clone + PartialEq {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn tag(&self) -> SemiringTag;
    /// self ⊗ rhs.
    fn mul(&self, rhs: &Self) -> Result<Self>;
    /// self ∖ b: the greatest x with self ⊗ x ⪯ b.
    fn left_residual(&self, b: &Self) -> Result<Self>;
    fn leq(&self, rhs: &Self) -> Result<bool>;
    /// True when every entry is ε (or [ε, ε]).
    fn is_bottom(&self) -> bool;
    /// The all-e column vector, the default starting point.
    fn unit_column(tag: SemiringTag, len: usize) -> Self;
}

impl ResiduatedMatrix for Matrix {
    fn rows(&self) -> usize {
        Matrix::rows(self)
    }

    fn cols(&self) -> usize {
        Matrix::cols(self)
    }

    fn tag(&self) -> SemiringTag {
        Matrix::tag(self)
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        Matrix::mul(self, rhs)
    }

    fn left_residual(&self, b: &Self) -> Result<Self> {
        Matrix::left_residual(self, b)
    }

    fn leq(&self, rhs: &Self) -> Result<bool> {
        Matrix::leq(self, rhs)
    }

    fn is_bottom(&self) -> bool {
        Matrix::is_bottom(self)
    }

    fn unit_column(tag: SemiringTag, len: usize) -> Self {
        Matrix::filled(tag, len, 1, tag.one()).expect("positive length")
    }
}

impl ResiduatedMatrix for IntervalMatrix {
    fn rows(&self) -> usize {
        IntervalMatrix::rows(self)
    }

    fn cols(&self) -> usize {
        IntervalMatrix::cols(self)
    }

    fn tag(&self) -> SemiringTag {
        IntervalMatrix::tag(self)
    }

    fn mul(&self, rhs: &Self) -> Result<Self> {
        IntervalMatrix::mul(self, rhs)
    }

    fn left_residual(&self, b: &Self) -> Result<Self> {
        IntervalMatrix::left_residual(self, b)
    }

    fn leq(&self, rhs: &Self) -> Result<bool> {
        IntervalMatrix::leq(self, rhs)
    }

    fn is_bottom(&self) -> bool {
        IntervalMatrix::is_bottom(self)
    }

    fn unit_column(tag: SemiringTag, len: usize) -> Self {
        IntervalMatrix::degenerate(&Matrix::unit_column(tag, len))
    }
}

/// Why the iteration stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Two successive iterates coincided; `x` is a fixed point of Π and the
    /// returned pair satisfies A ⊗ x = B ⊗ y exactly.
    Converged,
    /// The iteration cap was reached before a fixed point.
    HitIterationLimit,
    /// An iterate collapsed to the all-ε vector, outside the scope of the
    /// fixed-point theorem (which requires x ≠ ε).
    DegenerateBottom,
}

/// Iteration controls for [`solve_two_sided`].
#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Maximum number of Π applications. Integer-valued non-increasing
    /// sequences converge finitely when a fixed point exists below the first
    /// iterate, but unbounded carriers can descend forever; the cap makes
    /// that observable.
    pub max_iter: usize,
    /// Record every iterate (x0 first) in [`SolveOutcome::trace`].
    pub keep_trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { max_iter: 10_000, keep_trace: false }
    }
}

/// The result of a two-sided solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome<M> {
    pub status: SolveStatus,
    /// The last iterate; on [`SolveStatus::Converged`] a fixed point of Π.
    pub x: M,
    /// B ∖ (A ⊗ x), present only on convergence.
    pub y: Option<M>,
    /// Number of Π applications performed.
    pub iterations: usize,
    /// Successive iterates starting with x0, when requested.
    pub trace: Option<Vec<M>>,
}

fn check_system<M: ResiduatedMatrix>(a: &M, b: &M, x: &M) -> Result<()> {
    if a.tag() != b.tag() {
        return Err(Error::TagMismatch { left: a.tag(), right: b.tag() });
    }
    if x.tag() != a.tag() {
        return Err(Error::TagMismatch { left: a.tag(), right: x.tag() });
    }
    if a.rows() != b.rows() {
        return Err(Error::DimensionMismatch {
            context: "two_sided rows",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: b.rows(),
            right_cols: b.cols(),
        });
    }
    if x.rows() != a.cols() || x.cols() != 1 {
        return Err(Error::DimensionMismatch {
            context: "two_sided x",
            left_rows: a.rows(),
            left_cols: a.cols(),
            right_rows: x.rows(),
            right_cols: x.cols(),
        });
    }
    Ok(())
}

/// One application of Π: A ∖ (B ⊗ (B ∖ (A ⊗ x))).
pub fn pi_step<M: ResiduatedMatrix>(a: &M, b: &M, x: &M) -> Result<M> {
    check_system(a, b, x)?;
    let ax = a.mul(x)?;
    let y = b.left_residual(&ax)?;
    let by = b.mul(&y)?;
    a.left_residual(&by)
}

/// True iff A ⊗ x equals B ⊗ y exactly (boundwise for intervals).
pub fn verify_two_sided<M: ResiduatedMatrix>(a: &M, b: &M, x: &M, y: &M) -> Result<bool> {
    check_system(a, b, x)?;
    if y.rows() != b.cols() || y.cols() != 1 {
        return Err(Error::DimensionMismatch {
            context: "two_sided y",
            left_rows: b.rows(),
            left_cols: b.cols(),
            right_rows: y.rows(),
            right_cols: y.cols(),
        });
    }
    Ok(a.mul(x)? == b.mul(y)?)
}

/// Iterates Π from `x0` (default: the all-e vector) until a fixed point,
/// the all-ε vector, or the iteration cap.
pub fn solve_two_sided<M: ResiduatedMatrix>(
    a: &M,
    b: &M,
    x0: Option<&M>,
    options: &SolveOptions,
) -> Result<SolveOutcome<M>> {
    if options.max_iter == 0 {
        return Err(Error::InvalidIterationLimit);
    }
    let start = match x0 {
        Some(x) => x.clone(),
        None => M::unit_column(a.tag(), a.cols()),
    };
    check_system(a, b, &start)?;

    let mut trace = options.keep_trace.then(|| vec![start.clone()]);
    let mut current = start;
    let mut iterations = 0;

    loop {
        let next = pi_step(a, b, &current)?;
        iterations += 1;
        if let Some(t) = trace.as_mut() {
            t.push(next.clone());
        }
        if next.is_bottom() {
            return Ok(SolveOutcome {
                status: SolveStatus::DegenerateBottom,
                x: next,
                y: None,
                iterations,
                trace,
            });
        }
        if next == current {
            let y = b.left_residual(&a.mul(&next)?)?;
            debug_assert!(verify_two_sided(a, b, &next, &y)?);
            return Ok(SolveOutcome {
                status: SolveStatus::Converged,
                x: next,
                y: Some(y),
                iterations,
                trace,
            });
        }
        if iterations == options.max_iter {
            return Ok(SolveOutcome {
                status: SolveStatus::HitIterationLimit,
                x: next,
                y: None,
                iterations,
                trace,
            });
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::Interval;
    use crate::scalar::Scalar;

    const MP: SemiringTag = SemiringTag::MaxPlus;

    fn fin(k: i64) -> Scalar {
        Scalar::Finite(k)
    }

    fn mp(rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&k| fin(k)).collect()).collect();
        Matrix::from_rows(MP, &rows).unwrap()
    }

    fn ivm(tag: SemiringTag, rows: &[&[(i64, i64)]]) -> IntervalMatrix {
        let rows: Vec<Vec<Interval>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(lo, hi)| Interval::new(tag, fin(lo), fin(hi)).unwrap())
                    .collect()
            })
            .collect();
        IntervalMatrix::from_rows(tag, &rows).unwrap()
    }

    /// The two-sided example matrices: A 2x2, B 2x3 over intervals.
    fn interval_system(tag: SemiringTag) -> (IntervalMatrix, IntervalMatrix) {
        (
            ivm(tag, &[&[(2, 3), (5, 9)], &[(7, 8), (3, 6)]]),
            ivm(tag, &[&[(1, 9), (2, 5), (3, 4)], &[(1, 13), (3, 10), (9, 10)]]),
        )
    }

    #[test]
    fn pi_step_point_expansion() {
        // A⊗x = (2,4,6)^T; B∖(A⊗x) = min(2-8, 4-9, 6-10) = -6;
        // B⊗(-6) = (2,3,4)^T; A∖(2,3,4)^T = (-1,-2)^T.
        let a = mp(&[&[1, 2], &[3, 4], &[5, 6]]);
        let b = mp(&[&[8], &[9], &[10]]);
        let x = mp(&[&[0], &[0]]);
        assert_eq!(pi_step(&a, &b, &x).unwrap(), mp(&[&[-1], &[-2]]));
    }

    #[test]
    fn pi_step_is_deterministic_on_fixed_points() {
        let a = mp(&[&[0, -1], &[2, 1]]);
        let b = a.clone();
        let x = pi_step(&a, &b, &mp(&[&[0], &[0]])).unwrap();
        let again = pi_step(&a, &b, &x).unwrap();
        assert_eq!(again, x);
        assert_eq!(pi_step(&a, &b, &again).unwrap(), x);
    }

    #[test]
    fn pi_step_interval_moves_toward_known_fixed_point() {
        let (a, b) = interval_system(MP);
        let x0 = ivm(MP, &[&[(4, 7)], &[(3, 5)]]);
        let x1 = pi_step(&a, &b, &x0).unwrap();
        assert_eq!(x1, ivm(MP, &[&[(4, 7)], &[(2, 2)]]));
    }

    #[test]
    fn solve_reproduces_interval_example() {
        let (a, b) = interval_system(MP);
        let x0 = ivm(MP, &[&[(4, 7)], &[(3, 5)]]);
        let out = solve_two_sided(&a, &b, Some(&x0), &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Converged);
        assert_eq!(out.x, ivm(MP, &[&[(4, 7)], &[(2, 2)]]));
        assert_eq!(
            out.y.as_ref().unwrap(),
            &ivm(MP, &[&[(2, 2)], &[(5, 5)], &[(2, 5)]])
        );
        assert!(verify_two_sided(&a, &b, &out.x, out.y.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn symmetric_system_converges_to_closure() {
        // With B = A, Π reduces to the closure x ↦ A∖(A⊗x): converged within
        // two iterations with y = x.
        let a = mp(&[&[0, 2], &[-1, 4], &[3, 3]]);
        let x0 = mp(&[&[5], &[-7]]);
        let out = solve_two_sided(&a, &a, Some(&x0), &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Converged);
        assert!(out.iterations <= 2);
        assert_eq!(out.y.as_ref().unwrap(), &out.x);
        assert_eq!(
            a.mul(&out.x).unwrap(),
            a.mul(out.y.as_ref().unwrap()).unwrap()
        );
    }

    #[test]
    fn iteration_limit_is_reported() {
        // This system has no finite solution: the iterates descend forever.
        let a = mp(&[&[1, 2], &[3, 4], &[5, 6]]);
        let b = mp(&[&[8], &[9], &[10]]);
        let out = solve_two_sided(
            &a,
            &b,
            None,
            &SolveOptions { max_iter: 25, keep_trace: true },
        )
        .unwrap();
        assert_eq!(out.status, SolveStatus::HitIterationLimit);
        assert_eq!(out.iterations, 25);
        let trace = out.trace.unwrap();
        assert_eq!(trace.len(), 26);
        for pair in trace[1..].windows(2) {
            assert!(pair[1].leq(&pair[0]).unwrap());
        }
    }

    #[test]
    fn degenerate_bottom_is_reported() {
        // The ⊤ entry in A forces Π(x) = ε for every finite x.
        let a = Matrix::from_rows(MP, &[vec![Scalar::PosInf], vec![fin(0)]]).unwrap();
        let b = mp(&[&[0], &[0]]);
        let out = solve_two_sided(&a, &b, None, &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::DegenerateBottom);
        assert_eq!(out.iterations, 1);
        assert!(out.x.is_bottom());
        assert!(out.y.is_none());
    }

    #[test]
    fn partially_bottom_iterates_keep_going() {
        // Π first produces (0, ε), which is not the bottom vector and must
        // keep iterating; only the later all-ε iterate stops the run.
        let a = Matrix::from_rows(
            MP,
            &[vec![fin(0), Scalar::NegInf], vec![Scalar::NegInf, Scalar::PosInf]],
        )
        .unwrap();
        let b = mp(&[&[0], &[0]]);
        let x0 = mp(&[&[0], &[0]]);
        let first = pi_step(&a, &b, &x0).unwrap();
        assert_eq!(first, Matrix::from_rows(MP, &[vec![fin(0)], vec![Scalar::NegInf]]).unwrap());
        assert!(!first.is_bottom());
        let out = solve_two_sided(&a, &b, Some(&x0), &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::DegenerateBottom);
        assert_eq!(out.iterations, 2);
    }

    #[test]
    fn verify_two_sided_examples() {
        let (a, b) = interval_system(MP);
        let x = ivm(MP, &[&[(4, 7)], &[(2, 2)]]);
        let y = ivm(MP, &[&[(2, 2)], &[(5, 5)], &[(2, 5)]]);
        assert!(verify_two_sided(&a, &b, &x, &y).unwrap());

        // Perturb one bound of x by +1 and the equality breaks.
        let x_pert = ivm(MP, &[&[(4, 8)], &[(2, 2)]]);
        assert!(!verify_two_sided(&a, &b, &x_pert, &y).unwrap());

        // All-ε on both sides is trivially equal.
        let x_eps = IntervalMatrix::from_bounds(
            &Matrix::bottom(MP, 2, 1).unwrap(),
            &Matrix::bottom(MP, 2, 1).unwrap(),
        )
        .unwrap();
        let y_eps = IntervalMatrix::from_bounds(
            &Matrix::bottom(MP, 3, 1).unwrap(),
            &Matrix::bottom(MP, 3, 1).unwrap(),
        )
        .unwrap();
        assert!(verify_two_sided(&a, &b, &x_eps, &y_eps).unwrap());
    }

    #[test]
    fn maxmin_interval_system_solves_and_verifies() {
        let (a, b) = interval_system(SemiringTag::MaxMin);
        let x0 = ivm(SemiringTag::MaxMin, &[&[(4, 7)], &[(3, 5)]]);
        let out = solve_two_sided(&a, &b, Some(&x0), &SolveOptions::default()).unwrap();
        assert_eq!(out.status, SolveStatus::Converged);
        assert!(verify_two_sided(&a, &b, &out.x, out.y.as_ref().unwrap()).unwrap());
        assert_eq!(pi_step(&a, &b, &out.x).unwrap(), out.x);
    }

    #[test]
    fn degenerate_interval_solve_matches_point_solve() {
        let a = mp(&[&[0, 2], &[-1, 4], &[3, 3]]);
        let b = mp(&[&[1, 0], &[2, 2], &[4, -1]]);
        let point = solve_two_sided(&a, &b, None, &SolveOptions::default()).unwrap();
        let lifted = solve_two_sided(
            &IntervalMatrix::degenerate(&a),
            &IntervalMatrix::degenerate(&b),
            None,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(point.status, lifted.status);
        assert_eq!(point.iterations, lifted.iterations);
        assert_eq!(IntervalMatrix::degenerate(&point.x), lifted.x);
        match (point.y, lifted.y) {
            (Some(py), Some(ly)) => assert_eq!(IntervalMatrix::degenerate(&py), ly),
            (None, None) => {}
            other => panic!("outcome mismatch: {other:?}"),
        }
    }

    #[test]
    fn solve_rejects_bad_inputs() {
        let a = mp(&[&[0, 1]]);
        let b = mp(&[&[0], &[1]]);
        assert!(matches!(
            solve_two_sided(&a, &b, None, &SolveOptions::default()),
            Err(Error::DimensionMismatch { .. })
        ));
        let b = mp(&[&[0]]);
        let x0 = mp(&[&[0], &[0], &[0]]);
        assert!(matches!(
            solve_two_sided(&a, &b, Some(&x0), &SolveOptions::default()),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            solve_two_sided(&a, &b, None, &SolveOptions { max_iter: 0, keep_trace: false }),
            Err(Error::InvalidIterationLimit)
        ));
    }
}
