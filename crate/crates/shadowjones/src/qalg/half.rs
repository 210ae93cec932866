//! Half-integers stored exactly as doubled integers, and the admissibility
//! conditions on color triples.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::QalgError;

/// An element of (1/2)Z stored as twice its value.
#[derive(
    Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_nonneg(self) -> bool {
        self.twice >= 0
    }

    /// Integer value; panics on half-odd input.
    pub fn to_integer(self) -> i64 {
        assert!(self.is_integer(), "half-odd value {self}");
        self.twice / 2
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// 2j+1 for a color j (the quantum dimension index).
    pub fn dim_index(self) -> i64 {
        self.twice + 1
    }

    /// u-exponent of t^(-j(j+1)*gl) for color j = self and the given gleam:
    /// with j = a/2, gl = g/2 this is -a(a+2)g, always an integer.
    pub fn weight_u_exp(self, gleam: HalfInt) -> i64 {
        let a = self.twice;
        let g = gleam.twice;
        -(a * (a + 2) * g)
    }

    /// Power of sqrt(-1) in (sqrt(-1))^(4*j*gl) = i^(a*g).
    pub fn weight_i_pow(self, gleam: HalfInt) -> i64 {
        self.twice * gleam.twice
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice + rhs.twice,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            twice: self.twice - rhs.twice,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice % 2 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Admissibility of a triple: triangle inequalities plus integer sum.
///
/// The defining conditions are read as the triangle inequalities
/// |i-j| <= k <= i+j (equivalently each color bounded by the sum of the
/// other two, all non-negative) together with i+j+k being a natural number.
pub fn is_admissible(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    if !(a.is_nonneg() && b.is_nonneg() && c.is_nonneg()) {
        return false;
    }
    let (ta, tb, tc) = (a.twice, b.twice, c.twice);
    if ta > tb + tc || tb > ta + tc || tc > ta + tb {
        return false;
    }
    (ta + tb + tc) % 2 == 0
}

/// r-admissibility adds the caps color <= (r-2)/2 and sum <= r-2.
pub fn is_r_admissible(a: HalfInt, b: HalfInt, c: HalfInt, r: u32) -> bool {
    assert!(r >= 3, "level r must be at least 3");
    if !is_admissible(a, b, c) {
        return false;
    }
    let cap = r as i64 - 2; // caps in doubled units: 2*color <= r-2
    a.twice <= cap && b.twice <= cap && c.twice <= cap && a.twice + b.twice + c.twice <= 2 * cap
}

/// A triple that passed the admissibility check at construction.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AdmissibleTriple {
    a: HalfInt,
    b: HalfInt,
    c: HalfInt,
}

impl AdmissibleTriple {
    pub fn new(a: HalfInt, b: HalfInt, c: HalfInt) -> Result<Self, QalgError> {
        if !is_admissible(a, b, c) {
            return Err(QalgError::NotAdmissible(a, b, c));
        }
        Ok(AdmissibleTriple { a, b, c })
    }

    pub fn colors(&self) -> (HalfInt, HalfInt, HalfInt) {
        (self.a, self.b, self.c)
    }
}
