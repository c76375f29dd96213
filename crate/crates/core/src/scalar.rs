//! Scalar carrier and the two concrete complete idempotent semirings.
//!
//! The carrier is the extended integers Z ∪ {-∞, +∞}. Two instances are
//! provided, selected by [`SemiringTag`]:
//!
//! | Instance | ⊕   | ⊗   | ε  | e  | ⊤  |
//! |----------|-----|-----|----|----|----|
//! | MaxPlus  | max | +   | -∞ | 0  | +∞ |
//! | MaxMin   | max | min | -∞ | +∞ | +∞ |
//!
//! Both are complete: the canonical order a ⪯ b ⇔ a ⊕ b = b coincides with
//! the numeric order, every subset has a supremum, and meets (∧) exist and
//! equal the numeric minimum.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An extended integer: -∞, a finite `i64`, or +∞.
///
/// The derived `Ord` is the numeric order `NegInf < Finite(k) < PosInf`,
/// which is exactly the canonical order of both semiring instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    NegInf,
    Finite(i64),
    PosInf,
}

impl Scalar {
    pub fn is_finite(self) -> bool {
        matches!(self, Scalar::Finite(_))
    }
}

impl From<i64> for Scalar {
    fn from(value: i64) -> Self {
        Scalar::Finite(value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::NegInf => write!(f, "-inf"),
            Scalar::Finite(k) => write!(f, "{k}"),
            Scalar::PosInf => write!(f, "+inf"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-inf" => Ok(Scalar::NegInf),
            "+inf" => Ok(Scalar::PosInf),
            _ => s
                .parse::<i64>()
                .map(Scalar::Finite)
                .map_err(|_| Error::ParseScalar(s.to_owned())),
        }
    }
}

/// Selects which of the two semiring instances governs ⊗, residuation, and
/// the unit element. ⊕, ∧, and the order are shared (both instances use max).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SemiringTag {
    MaxPlus,
    MaxMin,
}

impl fmt::Display for SemiringTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemiringTag::MaxPlus => write!(f, "maxplus"),
            SemiringTag::MaxMin => write!(f, "maxmin"),
        }
    }
}

impl FromStr for SemiringTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxplus" => Ok(SemiringTag::MaxPlus),
            "maxmin" => Ok(SemiringTag::MaxMin),
            _ => Err(Error::ParseTag(s.to_owned())),
        }
    }
}

impl SemiringTag {
    /// Zero element ε, neutral for ⊕ and absorbing for ⊗.
    pub fn zero(self) -> Scalar {
        Scalar::NegInf
    }

    /// Unit element e, neutral for ⊗.
    pub fn one(self) -> Scalar {
        match self {
            SemiringTag::MaxPlus => Scalar::Finite(0),
            SemiringTag::MaxMin => Scalar::PosInf,
        }
    }

    /// Top element ⊤, the sum of all elements of the complete semiring.
    pub fn top(self) -> Scalar {
        Scalar::PosInf
    }

    /// ⊕: the numeric maximum for both instances. Idempotent, commutative,
    /// associative, with ε neutral.
    pub fn add(self, a: Scalar, b: Scalar) -> Scalar {
        a.max(b)
    }

    /// ⊗: integer addition (MaxPlus) or numeric minimum (MaxMin).
    ///
    /// ε is absorbing even against ⊤, so `mul(⊤, ε) = ε`. The only failure
    /// mode is `i64` overflow of a finite MaxPlus sum.
    pub fn mul(self, a: Scalar, b: Scalar) -> Result<Scalar> {
        match self {
            SemiringTag::MaxPlus => match (a, b) {
                (Scalar::NegInf, _) | (_, Scalar::NegInf) => Ok(Scalar::NegInf),
                (Scalar::PosInf, _) | (_, Scalar::PosInf) => Ok(Scalar::PosInf),
                (Scalar::Finite(x), Scalar::Finite(y)) => x
                    .checked_add(y)
                    .map(Scalar::Finite)
                    .ok_or(Error::Overflow { op: "mul", lhs: a, rhs: b }),
            },
            SemiringTag::MaxMin => Ok(a.min(b)),
        }
    }

    /// ∧: greatest lower bound, the numeric minimum for both instances.
    pub fn meet(self, a: Scalar, b: Scalar) -> Scalar {
        a.min(b)
    }

    /// Canonical order: `a ⪯ b` iff `a ⊕ b = b`, i.e. numeric ≤.
    pub fn leq(self, a: Scalar, b: Scalar) -> bool {
        a <= b
    }

    /// Left residual a∖b: the greatest x with `mul(a, x) ⪯ b`.
    ///
    /// MaxPlus: ε∖b = ⊤; a∖⊤ = ⊤; ⊤∖b = ε for b ≺ ⊤; a∖ε = ε for finite a;
    /// otherwise b - a. MaxMin: ⊤ when a ⪯ b, else b.
    pub fn left_residual(self, a: Scalar, b: Scalar) -> Result<Scalar> {
        match self {
            SemiringTag::MaxPlus => match (a, b) {
                (Scalar::NegInf, _) => Ok(Scalar::PosInf),
                (_, Scalar::PosInf) => Ok(Scalar::PosInf),
                (Scalar::PosInf, _) => Ok(Scalar::NegInf),
                (_, Scalar::NegInf) => Ok(Scalar::NegInf),
                (Scalar::Finite(x), Scalar::Finite(y)) => y
                    .checked_sub(x)
                    .map(Scalar::Finite)
                    .ok_or(Error::Overflow { op: "left_residual", lhs: a, rhs: b }),
            },
            SemiringTag::MaxMin => {
                if a <= b {
                    Ok(Scalar::PosInf)
                } else {
                    Ok(b)
                }
            }
        }
    }

    /// Right residual b⌿a: the greatest x with `mul(x, a) ⪯ b`.
    ///
    /// Both instances are commutative, so this equals `left_residual(a, b)`;
    /// the entry point is kept distinct to preserve the L/R pairing.
    pub fn right_residual(self, b: Scalar, a: Scalar) -> Result<Scalar> {
        self.left_residual(a, b)
    }
}
