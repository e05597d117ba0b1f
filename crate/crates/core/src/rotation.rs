//! Exact roots of unity as rotation numbers.
//!
//! A root of unity `exp(2πiθ)` is stored as the rational `θ ∈ [0, 1)`.
//! Multiplying roots of unity adds rotation numbers, so every eigenvalue
//! and character value in this crate is compared exactly.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rotation(Ratio<i64>);

impl Rotation {
    pub const ZERO: Rotation = Rotation(Ratio::new_raw(0, 1));

    /// The rotation `num / den` reduced modulo one.
    ///
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rotation number with zero denominator");
        let (num, den) = if den < 0 { (-num, -den) } else { (num, den) };
        Rotation(Ratio::new(num.mod_floor(&den), den))
    }

    /// `true` when the root of unity is 1.
    pub fn is_zero(&self) -> bool {
        *self.0.numer() == 0
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Order of the root of unity.
    pub fn order(&self) -> i64 {
        self.denom()
    }
}

impl Add for Rotation {
    type Output = Rotation;

    fn add(self, rhs: Rotation) -> Rotation {
        let sum = self.0 + rhs.0;
        Rotation::new(*sum.numer(), *sum.denom())
    }
}

impl Neg for Rotation {
    type Output = Rotation;

    fn neg(self) -> Rotation {
        Rotation::new(-self.numer(), self.denom())
    }
}

impl Sub for Rotation {
    type Output = Rotation;

    fn sub(self, rhs: Rotation) -> Rotation {
        self + (-rhs)
    }
}

impl fmt::Display for Rotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

// Serialized as a `[numerator, denominator]` pair.
impl Serialize for Rotation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.numer(), self.denom()].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rotation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [num, den] = <[i64; 2]>::deserialize(deserializer)?;
        if den == 0 {
            return Err(serde::de::Error::custom("rotation denominator must be nonzero"));
        }
        Ok(Rotation::new(num, den))
    }
}
