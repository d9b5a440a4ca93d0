//! Exact half-integer arithmetic.
//!
//! Hyperbolicity and several of the slimness bounds live in half-integer
//! units. Storing the doubled value as an integer keeps every comparison in
//! the verifier exact; nothing in this crate ever rounds through floats.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    pub const fn from_doubled(doubled: i64) -> HalfInt {
        HalfInt { doubled }
    }

    pub const fn from_int(value: i64) -> HalfInt {
        HalfInt { doubled: 2 * value }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    /// Largest integer not exceeding the value.
    pub fn floor(self) -> i64 {
        self.doubled.div_euclid(2)
    }

    pub fn min(self, other: HalfInt) -> HalfInt {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: HalfInt) -> HalfInt {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled + rhs.doubled)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_doubled(self.doubled - rhs.doubled)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_doubled(-self.doubled)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt::from_doubled(self.doubled * rhs)
    }
}

impl From<i64> for HalfInt {
    fn from(value: i64) -> HalfInt {
        HalfInt::from_int(value)
    }
}

impl From<u32> for HalfInt {
    fn from(value: u32) -> HalfInt {
        HalfInt::from_int(i64::from(value))
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("HalfInt", 1)?;
        s.serialize_field("doubled", &self.doubled)?;
        s.end()
    }
}
