//! Command implementations. Each returns the result document as a JSON
//! value; key order is sorted by construction, so output is byte-stable.

use serde_json::{Map, Value};

use residua::{solve_two_sided, verify_two_sided, SolveOptions, SolveStatus};

use crate::error::CliError;
use crate::problem::{
    interval_matrix_to_value, interval_vector_to_value, matrix_to_value, vector_to_value, Problem,
    ProblemData,
};

fn base_result(p: &Problem) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("kind".into(), Value::from(p.data.kind_name()));
    map.insert("semiring".into(), Value::from(p.semiring.to_string()));
    map
}

/// X = A∖B plus the Property-1 check `equality` (does A ⊗ X reach B?).
pub fn run_residuate(p: &Problem) -> Result<Value, CliError> {
    let mut map = base_result(p);
    match &p.data {
        ProblemData::Point { a, b, .. } => {
            let x = a.left_residual(b)?;
            map.insert("equality".into(), Value::from(a.mul(&x)? == *b));
            map.insert("x".into(), matrix_to_value(&x));
        }
        ProblemData::Interval { a, b, .. } => {
            let x = a.left_residual(b)?;
            map.insert("equality".into(), Value::from(a.mul(&x)? == *b));
            map.insert("x".into(), interval_matrix_to_value(&x));
        }
    }
    Ok(Value::Object(map))
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Converged => "converged",
        SolveStatus::HitIterationLimit => "hit_iteration_limit",
        SolveStatus::DegenerateBottom => "degenerate_bottom",
    }
}

/// Runs the Π iteration and reports the outcome.
pub fn run_solve_eq(p: &Problem) -> Result<Value, CliError> {
    let options = SolveOptions {
        max_iter: p.max_iter.unwrap_or_else(|| SolveOptions::default().max_iter),
        keep_trace: p.trace,
    };
    let mut map = base_result(p);
    match &p.data {
        ProblemData::Point { a, b, x0, .. } => {
            let out = solve_two_sided(a, b, x0.as_ref(), &options)?;
            map.insert("iterations".into(), Value::from(out.iterations as u64));
            map.insert("status".into(), Value::from(status_name(out.status)));
            map.insert("x".into(), vector_to_value(&out.x));
            if let Some(y) = &out.y {
                map.insert("y".into(), vector_to_value(y));
            }
            if let Some(trace) = &out.trace {
                map.insert(
                    "trace".into(),
                    Value::Array(trace.iter().map(vector_to_value).collect()),
                );
            }
        }
        ProblemData::Interval { a, b, x0, .. } => {
            let out = solve_two_sided(a, b, x0.as_ref(), &options)?;
            map.insert("iterations".into(), Value::from(out.iterations as u64));
            map.insert("status".into(), Value::from(status_name(out.status)));
            map.insert("x".into(), interval_vector_to_value(&out.x));
            if let Some(y) = &out.y {
                map.insert("y".into(), interval_vector_to_value(y));
            }
            if let Some(trace) = &out.trace {
                map.insert(
                    "trace".into(),
                    Value::Array(trace.iter().map(interval_vector_to_value).collect()),
                );
            }
        }
    }
    Ok(Value::Object(map))
}

/// Evaluates both sides of A ⊗ x = B ⊗ y for a supplied pair.
pub fn run_check(p: &Problem) -> Result<Value, CliError> {
    let mut map = base_result(p);
    match &p.data {
        ProblemData::Point { a, b, x, y, .. } => {
            let x = x.as_ref().ok_or_else(|| CliError::Parse("check requires \"x\"".into()))?;
            let y = y.as_ref().ok_or_else(|| CliError::Parse("check requires \"y\"".into()))?;
            map.insert("equal".into(), Value::from(verify_two_sided(a, b, x, y)?));
            map.insert("left".into(), vector_to_value(&a.mul(x)?));
            map.insert("right".into(), vector_to_value(&b.mul(y)?));
        }
        ProblemData::Interval { a, b, x, y, .. } => {
            let x = x.as_ref().ok_or_else(|| CliError::Parse("check requires \"x\"".into()))?;
            let y = y.as_ref().ok_or_else(|| CliError::Parse("check requires \"y\"".into()))?;
            map.insert("equal".into(), Value::from(verify_two_sided(a, b, x, y)?));
            map.insert("left".into(), interval_vector_to_value(&a.mul(x)?));
            map.insert("right".into(), interval_vector_to_value(&b.mul(y)?));
        }
    }
    Ok(Value::Object(map))
}
