//! Integers extended by `-inf` and `+inf`, the codomain of the length
//! functions of a quasi-crystal.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Variant order gives the total order `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtIntError {
    #[error("(+inf) + (-inf) is undefined")]
    OppositeInfinities,
    #[error("cannot parse {0:?} as an extended integer")]
    Parse(String),
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn is_pos_inf(self) -> bool {
        self == ExtInt::PosInf
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// `self + m` for a finite `m`; infinities absorb.
    pub fn shift(self, m: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + m),
            inf => inf,
        }
    }

    pub fn checked_add(self, other: ExtInt) -> Result<ExtInt, ExtIntError> {
        match (self, other) {
            (ExtInt::PosInf, ExtInt::NegInf) | (ExtInt::NegInf, ExtInt::PosInf) => {
                Err(ExtIntError::OppositeInfinities)
            }
            (ExtInt::PosInf, _) | (_, ExtInt::PosInf) => Ok(ExtInt::PosInf),
            (ExtInt::NegInf, _) | (_, ExtInt::NegInf) => Ok(ExtInt::NegInf),
            (ExtInt::Finite(a), ExtInt::Finite(b)) => Ok(ExtInt::Finite(a + b)),
        }
    }

    /// Finite, strictly positive, i.e. `not in {.., 0, +inf}` for
    /// non-negative lengths.
    pub fn is_positive_finite(self) -> bool {
        matches!(self, ExtInt::Finite(v) if v > 0)
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialEq<i64> for ExtInt {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtInt::Finite(*other)
    }
}

impl PartialOrd<i64> for ExtInt {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.cmp(&ExtInt::Finite(*other)))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::PosInf => write!(f, "+inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl FromStr for ExtInt {
    type Err = ExtIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+inf" | "inf" => Ok(ExtInt::PosInf),
            "-inf" => Ok(ExtInt::NegInf),
            other => other
                .parse::<i64>()
                .map(ExtInt::Finite)
                .map_err(|_| ExtIntError::Parse(s.to_string())),
        }
    }
}

// Finite values serialise as JSON numbers, infinities as "+inf" / "-inf".
impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => serializer.serialize_i64(*v),
            inf => serializer.serialize_str(&inf.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ExtVisitor;
        impl Visitor<'_> for ExtVisitor {
            type Value = ExtInt;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer or \"+inf\" / \"-inf\"")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtInt, E> {
                Ok(ExtInt::Finite(v))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtInt, E> {
                i64::try_from(v)
                    .map(ExtInt::Finite)
                    .map_err(|_| E::custom("integer out of range"))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtInt, E> {
                v.parse().map_err(E::custom)
            }
        }
        deserializer.deserialize_any(ExtVisitor)
    }
}
