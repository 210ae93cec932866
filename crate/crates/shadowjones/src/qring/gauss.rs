//! Exact Gaussian rationals: numbers of the form `re + im*sqrt(-1)` with
//! arbitrary-precision rational parts.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, re-exported for coefficient work.
pub type Rat = BigRational;

/// An exact element of Q(i). All ring operations are exact; the rational
/// parts are kept in lowest terms by `BigRational` itself.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::default()
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: Rat::from_integer(BigInt::from(n)),
            im: Rat::zero(),
        }
    }

    pub fn from_rat(re: Rat) -> Self {
        GaussRat { re, im: Rat::zero() }
    }

    /// The Gaussian unit `i^k` (k may be negative).
    pub fn i_pow(k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => GaussRat::from_int(1),
            1 => GaussRat::new(Rat::zero(), Rat::one()),
            2 => GaussRat::from_int(-1),
            _ => GaussRat::new(Rat::zero(), -Rat::one()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, the field norm down to Q.
    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussRat {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    // Division as multiplication by the conjugate over the norm.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &GaussRat) -> GaussRat {
        let inv = rhs.inv().expect("division by zero GaussRat");
        self * &inv
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussRat> for GaussRat {
    fn mul_assign(&mut self, rhs: &GaussRat) {
        *self = &*self * rhs;
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rat(&self.re));
        }
        let im_part = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rat(&self.im))
        };
        if self.re.is_zero() {
            write!(f, "{im_part}")
        } else if self.im.is_positive() {
            write!(f, "({}+{})", fmt_rat(&self.re), im_part)
        } else {
            write!(f, "({}{})", fmt_rat(&self.re), im_part)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_powers_cycle() {
        let i = GaussRat::i_pow(1);
        assert_eq!(&i * &i, GaussRat::from_int(-1));
        assert_eq!(GaussRat::i_pow(-1), GaussRat::i_pow(3));
        assert_eq!(GaussRat::i_pow(-6), GaussRat::from_int(-1));
        assert_eq!(GaussRat::i_pow(8), GaussRat::one());
    }

    #[test]
    fn inverse_roundtrip() {
        let z = GaussRat::new(
            Rat::new(BigInt::from(3), BigInt::from(2)),
            Rat::new(BigInt::from(-1), BigInt::from(5)),
        );
        let w = z.inv().unwrap();
        assert!((&z * &w).is_one());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRat::from_int(-2).to_string(), "-2");
        assert_eq!(GaussRat::i_pow(1).to_string(), "i");
        assert_eq!(
            GaussRat::new(Rat::one(), -Rat::one()).to_string(),
            "(1-i)"
        );
    }
}
