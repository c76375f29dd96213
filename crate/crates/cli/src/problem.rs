//! Problem file parsing and serialization.
//!
//! A problem is a single JSON object. Scalars are written as integers or the
//! strings `"-inf"` / `"+inf"`; interval entries are two-element arrays
//! `[lower, upper]`, with a bare scalar accepted as a degenerate interval on
//! input. Matrices are arrays of row arrays; vectors (`x0`, `x`, `y`) are
//! flat arrays of entries. Output is normalized: finite scalars as JSON
//! numbers, infinities as strings, intervals always as pairs, keys sorted.

use serde::Deserialize;
use serde_json::{Map, Value};

use residua::{Interval, IntervalMatrix, Matrix, Scalar, SemiringTag};

use crate::error::CliError;

/// Matrices of a solve request, point or interval per the file's `kind`.
#[derive(Debug, Clone, PartialEq)]
pub enum ProblemData {
    Point {
        a: Matrix,
        b: Matrix,
        x0: Option<Matrix>,
        x: Option<Matrix>,
        y: Option<Matrix>,
    },
    Interval {
        a: IntervalMatrix,
        b: IntervalMatrix,
        x0: Option<IntervalMatrix>,
        x: Option<IntervalMatrix>,
        y: Option<IntervalMatrix>,
    },
}

impl ProblemData {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ProblemData::Point { .. } => "point",
            ProblemData::Interval { .. } => "interval",
        }
    }
}

/// A parsed solve request.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub semiring: SemiringTag,
    pub data: ProblemData,
    pub max_iter: Option<usize>,
    pub trace: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    #[serde(default)]
    semiring: Option<String>,
    kind: String,
    a: Vec<Vec<Value>>,
    b: Vec<Vec<Value>>,
    #[serde(default)]
    x0: Option<Vec<Value>>,
    #[serde(default)]
    x: Option<Vec<Value>>,
    #[serde(default)]
    y: Option<Vec<Value>>,
    #[serde(default)]
    max_iter: Option<u64>,
    #[serde(default)]
    trace: Option<bool>,
}

pub fn scalar_from_value(v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::Finite)
            .ok_or_else(|| CliError::Parse(format!("scalar {n} is not a representable integer"))),
        Value::String(s) => Ok(s.parse::<Scalar>()?),
        other => Err(CliError::Parse(format!(
            "expected a scalar (integer, \"-inf\", or \"+inf\"), got {other}"
        ))),
    }
}

fn interval_from_value(tag: SemiringTag, v: &Value) -> Result<Interval, CliError> {
    match v {
        Value::Array(pair) => {
            if pair.len() != 2 {
                return Err(CliError::Parse(format!(
                    "interval entries are [lower, upper] pairs, got {} elements",
                    pair.len()
                )));
            }
            let lower = scalar_from_value(&pair[0])?;
            let upper = scalar_from_value(&pair[1])?;
            Ok(Interval::new(tag, lower, upper)?)
        }
        other => Ok(Interval::degenerate(tag, scalar_from_value(other)?)),
    }
}

fn point_matrix(tag: SemiringTag, rows: &[Vec<Value>]) -> Result<Matrix, CliError> {
    let rows: Vec<Vec<Scalar>> = rows
        .iter()
        .map(|row| row.iter().map(scalar_from_value).collect())
        .collect::<Result<_, _>>()?;
    Ok(Matrix::from_rows(tag, &rows)?)
}

fn interval_matrix(tag: SemiringTag, rows: &[Vec<Value>]) -> Result<IntervalMatrix, CliError> {
    let rows: Vec<Vec<Interval>> = rows
        .iter()
        .map(|row| row.iter().map(|v| interval_from_value(tag, v)).collect())
        .collect::<Result<_, _>>()?;
    Ok(IntervalMatrix::from_rows(tag, &rows)?)
}

pub fn point_vector(tag: SemiringTag, entries: &[Value]) -> Result<Matrix, CliError> {
    let entries: Vec<Scalar> = entries.iter().map(scalar_from_value).collect::<Result<_, _>>()?;
    Ok(Matrix::column(tag, &entries)?)
}

pub fn interval_vector(tag: SemiringTag, entries: &[Value]) -> Result<IntervalMatrix, CliError> {
    let entries: Vec<Interval> = entries
        .iter()
        .map(|v| interval_from_value(tag, v))
        .collect::<Result<_, _>>()?;
    Ok(IntervalMatrix::column(tag, &entries)?)
}

/// Parses a problem document. `semiring_override` takes precedence over the
/// file's `semiring` field; one of the two must be present.
pub fn parse_problem(text: &str, semiring_override: Option<SemiringTag>) -> Result<Problem, CliError> {
    let raw: RawProblem = serde_json::from_str(text)?;
    let semiring = match semiring_override {
        Some(tag) => tag,
        None => raw
            .semiring
            .as_deref()
            .ok_or_else(|| CliError::Parse("missing \"semiring\" (and no --semiring given)".into()))?
            .parse::<SemiringTag>()
            .map_err(CliError::from)?,
    };
    let max_iter = match raw.max_iter {
        Some(0) => return Err(CliError::Parse("max_iter must be a positive integer".into())),
        Some(n) => Some(usize::try_from(n).map_err(|_| CliError::Parse("max_iter out of range".into()))?),
        None => None,
    };

    let data = match raw.kind.as_str() {
        "point" => ProblemData::Point {
            a: point_matrix(semiring, &raw.a)?,
            b: point_matrix(semiring, &raw.b)?,
            x0: raw.x0.as_deref().map(|v| point_vector(semiring, v)).transpose()?,
            x: raw.x.as_deref().map(|v| point_vector(semiring, v)).transpose()?,
            y: raw.y.as_deref().map(|v| point_vector(semiring, v)).transpose()?,
        },
        "interval" => ProblemData::Interval {
            a: interval_matrix(semiring, &raw.a)?,
            b: interval_matrix(semiring, &raw.b)?,
            x0: raw.x0.as_deref().map(|v| interval_vector(semiring, v)).transpose()?,
            x: raw.x.as_deref().map(|v| interval_vector(semiring, v)).transpose()?,
            y: raw.y.as_deref().map(|v| interval_vector(semiring, v)).transpose()?,
        },
        other => {
            return Err(CliError::Parse(format!(
                "unknown kind {other:?}: expected \"point\" or \"interval\""
            )))
        }
    };

    Ok(Problem { semiring, data, max_iter, trace: raw.trace.unwrap_or(false) })
}

pub fn scalar_to_value(s: Scalar) -> Value {
    match s {
        Scalar::Finite(k) => Value::from(k),
        Scalar::NegInf => Value::from("-inf"),
        Scalar::PosInf => Value::from("+inf"),
    }
}

pub fn interval_to_value(iv: &Interval) -> Value {
    Value::Array(vec![scalar_to_value(iv.lower()), scalar_to_value(iv.upper())])
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_value(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn interval_matrix_to_value(m: &IntervalMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| {
                Value::Array((0..m.cols()).map(|j| interval_to_value(&m.get(i, j))).collect())
            })
            .collect(),
    )
}

/// Column vectors are written as flat arrays.
pub fn vector_to_value(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| scalar_to_value(m.get(i, 0))).collect())
}

pub fn interval_vector_to_value(m: &IntervalMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| interval_to_value(&m.get(i, 0))).collect())
}

/// Serializes a problem back to its (normalized) document form.
pub fn problem_to_value(p: &Problem) -> Value {
    let mut map = Map::new();
    map.insert("semiring".into(), Value::from(p.semiring.to_string()));
    map.insert("kind".into(), Value::from(p.data.kind_name()));
    match &p.data {
        ProblemData::Point { a, b, x0, x, y } => {
            map.insert("a".into(), matrix_to_value(a));
            map.insert("b".into(), matrix_to_value(b));
            if let Some(v) = x0 {
                map.insert("x0".into(), vector_to_value(v));
            }
            if let Some(v) = x {
                map.insert("x".into(), vector_to_value(v));
            }
            if let Some(v) = y {
                map.insert("y".into(), vector_to_value(v));
            }
        }
        ProblemData::Interval { a, b, x0, x, y } => {
            map.insert("a".into(), interval_matrix_to_value(a));
            map.insert("b".into(), interval_matrix_to_value(b));
            if let Some(v) = x0 {
                map.insert("x0".into(), interval_vector_to_value(v));
            }
            if let Some(v) = x {
                map.insert("x".into(), interval_vector_to_value(v));
            }
            if let Some(v) = y {
                map.insert("y".into(), interval_vector_to_value(v));
            }
        }
    }
    if let Some(n) = p.max_iter {
        map.insert("max_iter".into(), Value::from(n as u64));
    }
    if p.trace {
        map.insert("trace".into(), Value::from(true));
    }
    Value::Object(map)
}
