//! Rational functions num/den over the Laurent ring, kept in a canonical
//! form so that equality of values is equality of representations.
//!
//! Canonical form: gcd(num, den) removed, den's lowest exponent is 0 and its
//! lowest coefficient is 1. The gcd runs as a primitive polynomial remainder
//! sequence over the Gaussian integers after clearing denominators, with the
//! exponent lattice compressed first (state-sum polynomials usually live on
//! a sublattice of u-exponents, which cuts the working degree).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gauss::GaussRat;
use super::laurent::LaurentPoly;
use super::QringError;

// ---------------------------------------------------------------------------
// Gaussian integers (coefficient domain of the PRS)
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
struct Zi {
    re: BigInt,
    im: BigInt,
}

impl Zi {
    fn zero() -> Self {
        Zi {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, rhs: &Zi) -> Zi {
        Zi {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn sub(&self, rhs: &Zi) -> Zi {
        Zi {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    fn conj(&self) -> Zi {
        Zi {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Nearest-integer rounding of `n / d` for d > 0.
    fn round_div(n: &BigInt, d: &BigInt) -> BigInt {
        Integer::div_floor(&(n * 2 + d), &(d * 2))
    }

    /// Euclidean division with remainder of minimal norm.
    fn div_round(&self, rhs: &Zi) -> Zi {
        let num = self.mul(&rhs.conj());
        let den = rhs.norm();
        Zi {
            re: Self::round_div(&num.re, &den),
            im: Self::round_div(&num.im, &den),
        }
    }

    fn gcd(a: &Zi, b: &Zi) -> Zi {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let q = x.div_round(&y);
            let r = x.sub(&q.mul(&y));
            x = y;
            y = r;
        }
        x
    }
}

// ---------------------------------------------------------------------------
// Dense Z[i][v] helpers for the PRS
// ---------------------------------------------------------------------------

type ZiPoly = Vec<Zi>; // index = exponent, last entry nonzero

fn zp_trim(p: &mut ZiPoly) {
    while p.last().is_some_and(Zi::is_zero) {
        p.pop();
    }
}

fn zp_deg(p: &ZiPoly) -> usize {
    p.len().saturating_sub(1)
}

fn zp_content(p: &ZiPoly) -> Zi {
    let mut g = Zi::zero();
    for c in p {
        if !c.is_zero() {
            g = if g.is_zero() { c.clone() } else { Zi::gcd(&g, c) };
            if g.norm() == BigInt::one() {
                break;
            }
        }
    }
    g
}

fn zp_exact_div_scalar(p: &mut ZiPoly, s: &Zi) {
    let n = s.norm();
    for c in p.iter_mut() {
        if c.is_zero() {
            continue;
        }
        let q = c.mul(&s.conj());
        *c = Zi {
            re: &q.re / &n,
            im: &q.im / &n,
        };
    }
}

fn zp_primitive(mut p: ZiPoly) -> ZiPoly {
    zp_trim(&mut p);
    if p.is_empty() {
        return p;
    }
    let c = zp_content(&p);
    if c.norm() != BigInt::one() {
        zp_exact_div_scalar(&mut p, &c);
    }
    p
}

/// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero).
fn zp_prem(mut a: ZiPoly, b: &ZiPoly) -> ZiPoly {
    let db = zp_deg(b);
    let lb = b[db].clone();
    while {
        zp_trim(&mut a);
        !a.is_empty() && zp_deg(&a) >= db
    } {
        let da = zp_deg(&a);
        let la = a[da].clone();
        // a = a*lb - la * b * v^(da-db)
        for c in a.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in b.iter().enumerate() {
            let sub = la.mul(bc);
            a[da - db + i] = a[da - db + i].sub(&sub);
        }
    }
    a
}

fn zp_gcd(a: ZiPoly, b: ZiPoly) -> ZiPoly {
    let mut x = zp_primitive(a);
    let mut y = zp_primitive(b);
    if x.is_empty() {
        return y;
    }
    if y.is_empty() {
        return x;
    }
    if zp_deg(&x) < zp_deg(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = zp_prem(x, &y);
        let r = zp_primitive(r);
        if r.is_empty() {
            return y;
        }
        x = y;
        y = r;
    }
}

// ---------------------------------------------------------------------------
// Laurent-level gcd
// ---------------------------------------------------------------------------

/// Clear rational denominators and strip the exponent offset, recording the
/// lattice step so the PRS can run on compressed exponents.
fn laurent_to_zi(p: &LaurentPoly, lattice: i64, offset: i64) -> ZiPoly {
    let mut denom_lcm = BigInt::one();
    for (_, c) in p.terms() {
        denom_lcm = denom_lcm.lcm(c.re.denom());
        denom_lcm = denom_lcm.lcm(c.im.denom());
    }
    let deg = ((p.max_exp().unwrap() - offset) / lattice) as usize;
    let mut out = vec![Zi::zero(); deg + 1];
    for (&e, c) in p.terms() {
        let idx = ((e - offset) / lattice) as usize;
        let scale = BigRational::from_integer(denom_lcm.clone());
        let re = (&c.re * &scale).to_integer();
        let im = (&c.im * &scale).to_integer();
        out[idx] = Zi { re, im };
    }
    out
}

fn zi_to_laurent(p: &ZiPoly, lattice: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            out.add_term(
                i as i64 * lattice,
                GaussRat::new(
                    BigRational::from_integer(c.re.clone()),
                    BigRational::from_integer(c.im.clone()),
                ),
            );
        }
    }
    out
}

fn exponent_lattice(a: &LaurentPoly, a_off: i64, b: &LaurentPoly, b_off: i64) -> i64 {
    let mut g: i64 = 0;
    for (&e, _) in a.terms() {
        g = g.gcd(&(e - a_off));
    }
    for (&e, _) in b.terms() {
        g = g.gcd(&(e - b_off));
    }
    if g == 0 {
        1
    } else {
        g
    }
}

/// Gcd of two Laurent polynomials, up to a unit (content and monomial
/// factors are not part of the result's contract).
pub fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::one();
    }
    let a_off = a.min_exp().unwrap();
    let b_off = b.min_exp().unwrap();
    let lattice = exponent_lattice(a, a_off, b, b_off);
    let za = laurent_to_zi(a, lattice, a_off);
    let zb = laurent_to_zi(b, lattice, b_off);
    let g = zp_gcd(za, zb);
    zi_to_laurent(&g, lattice)
}

// ---------------------------------------------------------------------------
// RationalFunc
// ---------------------------------------------------------------------------

/// Element of the fraction field of the Laurent ring, in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunc {
    /// Canonicalizing constructor; this is `ratfn_normalize`.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, QringError> {
        if den.is_zero() {
            return Err(QringError::ZeroDenominator);
        }
        let mut rf = RationalFunc { num, den };
        rf.reduce_full();
        Ok(rf)
    }

    fn reduce_full(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = laurent_gcd(&self.num, &self.den);
        if !g.is_monomial() || g.min_exp() != Some(0) {
            self.num = self.num.exact_div(&g).expect("gcd divides numerator");
            self.den = self.den.exact_div(&g).expect("gcd divides denominator");
        }
        self.fix_units();
    }

    /// Shift so den's lowest exponent is 0, scale its lowest coefficient
    /// to 1.
    fn fix_units(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let e = self.den.min_exp().unwrap();
        if e != 0 {
            self.num = self.num.shifted(-e);
            self.den = self.den.shifted(-e);
        }
        let c = self.den.coeff(0);
        if !c.is_one() {
            let inv = c.inv().expect("lowest den coefficient nonzero");
            self.num = self.num.scaled(&inv);
            self.den = self.den.scaled(&inv);
        }
    }

    pub fn zero() -> Self {
        RationalFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_quarter_graded(&self) -> bool {
        self.num.is_quarter_graded() && self.den.is_quarter_graded()
    }

    pub fn inverse(&self) -> Result<Self, QringError> {
        RationalFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, n: i32) -> Result<Self, QringError> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RationalFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }
}

impl Add for &RationalFunc {
    type Output = RationalFunc;
    fn add(self, rhs: &RationalFunc) -> RationalFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunc::new(num, den).expect("nonzero denominators")
    }
}

impl Sub for &RationalFunc {
    type Output = RationalFunc;
    fn sub(self, rhs: &RationalFunc) -> RationalFunc {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunc::new(num, den).expect("nonzero denominators")
    }
}

impl Mul for &RationalFunc {
    type Output = RationalFunc;
    fn mul(self, rhs: &RationalFunc) -> RationalFunc {
        RationalFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominators")
    }
}

impl Neg for &RationalFunc {
    type Output = RationalFunc;
    fn neg(self) -> RationalFunc {
        RationalFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
