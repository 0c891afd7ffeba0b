//! Extended integer edge weights: finite signed 64-bit values plus an
//! absorbing infinity for absent edges.

use core::fmt;

/// An edge length: either a finite signed integer or infinity.
///
/// The derived ordering places every finite value below [`Weight::Infinity`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Weight {
    Finite(i64),
    Infinity,
}

impl Weight {
    pub const ZERO: Weight = Weight::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Weight::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Weight::Finite(v) => Some(v),
            Weight::Infinity => None,
        }
    }
}

impl From<i64> for Weight {
    fn from(v: i64) -> Self {
        Weight::Finite(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Weight::Finite(v) => write!(f, "{v}"),
            Weight::Infinity => f.write_str("INF"),
        }
    }
}

/// Sum of two finite operands left the representable range.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OverflowError {
    pub lhs: i64,
    pub rhs: i64,
}

impl fmt::Display for OverflowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight addition {} + {} overflows", self.lhs, self.rhs)
    }
}

impl core::error::Error for OverflowError {}

/// Adds two weights. Infinity absorbs; finite overflow is an error, never a
/// wrap or a saturation.
pub fn weight_add(a: Weight, b: Weight) -> Result<Weight, OverflowError> {
    match (a, b) {
        (Weight::Finite(x), Weight::Finite(y)) => x
            .checked_add(y)
            .map(Weight::Finite)
            .ok_or(OverflowError { lhs: x, rhs: y }),
        _ => Ok(Weight::Infinity),
    }
}
