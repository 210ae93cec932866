//! Laurent polynomials over the Gaussian rationals in the formal variable
//! `u = t^(1/8)`.
//!
//! Exponents are integers in u-units, so every region weight
//! `t^(-j(j+1)gl)` with half-integer color and gleam lands on an integer
//! exponent. A polynomial is *quarter-graded* when all exponents are even,
//! i.e. it lies in the `t^(1/4)` lattice where the assembled invariants live.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;

use super::gauss::{GaussRat, Rat};

/// A Laurent polynomial in `u = t^(1/8)`. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, GaussRat::one())
    }

    pub fn monomial(u_exp: i64, coeff: GaussRat) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(u_exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(terms: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, u_exp: i64) -> GaussRat {
        self.coeffs.get(&u_exp).cloned().unwrap_or_else(GaussRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &GaussRat)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, u_exp: i64, coeff: GaussRat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(u_exp) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by the monomial `c * u^e` in place.
    pub fn mul_monomial(&mut self, u_exp: i64, coeff: &GaussRat) {
        if coeff.is_zero() {
            *self = LaurentPoly::zero();
            return;
        }
        let old = std::mem::take(&mut self.coeffs);
        for (e, mut c) in old {
            c *= coeff;
            self.coeffs.insert(e + u_exp, c);
        }
    }

    pub fn shifted(&self, u_exp: i64) -> Self {
        let mut p = self.clone();
        p.mul_monomial(u_exp, &GaussRat::one());
        p
    }

    pub fn scaled(&self, coeff: &GaussRat) -> Self {
        let mut p = self.clone();
        p.mul_monomial(0, coeff);
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// All exponents even in u, i.e. the value lies in the t^(1/4) lattice.
    pub fn is_quarter_graded(&self) -> bool {
        self.coeffs.keys().all(|e| e % 2 == 0)
    }

    /// Exact division; `None` when `self` is not a multiple of `div`.
    pub fn exact_div(&self, div: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!div.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let d_hi = div.max_exp().unwrap();
        let d_lead = div.coeff(d_hi);
        let d_lead_inv = d_lead.inv().unwrap();
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        // Degree (term-span) must not grow; bail out early when it would.
        while !rem.is_zero() {
            let r_hi = rem.max_exp().unwrap();
            if rem.min_exp().unwrap() - div.min_exp().unwrap() > r_hi - d_hi {
                return None;
            }
            let q_exp = r_hi - d_hi;
            let q_coeff = &rem.coeff(r_hi) * &d_lead_inv;
            quot.add_term(q_exp, q_coeff.clone());
            let mut sub = div.clone();
            sub.mul_monomial(q_exp, &q_coeff);
            rem = &rem - &sub;
        }
        Some(quot)
    }

    /// Evaluate at `u = 1` (sum of coefficients); handy for sanity checks.
    pub fn eval_one(&self) -> GaussRat {
        let mut s = GaussRat::zero();
        for c in self.coeffs.values() {
            s += c;
        }
        s
    }

    /// Render with `t` exponents (u-exponent / 8) as exact fractions.
    fn fmt_t_graded(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            // Pull a leading minus out of real negative coefficients.
            let (neg, c_abs);
            if c.is_real() && c.re.is_negative() {
                neg = true;
                c_abs = -c;
            } else {
                neg = false;
                c_abs = c.clone();
            }
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            if e == 0 {
                write!(f, "{c_abs}")?;
            } else if c_abs.is_one() {
                write!(f, "{}", t_power(e))?;
            } else {
                write!(f, "{c_abs}*{}", t_power(e))?;
            }
        }
        Ok(())
    }
}

/// `u^e` rendered as a power of t with the exponent in lowest terms.
fn t_power(u_exp: i64) -> String {
    let r = Rat::new(u_exp.into(), 8.into());
    if r.is_one() {
        "t".to_string()
    } else if r.denom().is_one() {
        format!("t^{}", r.numer())
    } else {
        format!("t^({}/{})", r.numer(), r.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_t_graded(f)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in rhs.coeffs.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Iterate the smaller operand on the outside.
        let (small, big) = if self.num_terms() <= rhs.num_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in small.coeffs.iter() {
            for (&e2, c2) in big.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&e, c)| (e, -c.clone()))
            .collect();
        LaurentPoly { coeffs }
    }
}

/// Dispatch used by callers that take the operation as data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LaurentOp {
    Add,
    Sub,
    Mul,
}

/// Exact ring operation on Laurent polynomials with zero pruning.
pub fn laurent_arith(a: &LaurentPoly, b: &LaurentPoly, op: LaurentOp) -> LaurentPoly {
    match op {
        LaurentOp::Add => a + b,
        LaurentOp::Sub => a - b,
        LaurentOp::Mul => a * b,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, GaussRat::one())
    }

    #[test]
    fn binomial_square() {
        // (u^2 + u^-2)^2 = u^4 + 2 + u^-4
        let p = &u(2) + &u(-2);
        let sq = &p * &p;
        let expected = LaurentPoly::from_terms([
            (4, GaussRat::one()),
            (0, GaussRat::from_int(2)),
            (-4, GaussRat::one()),
        ]);
        assert_eq!(sq, expected);
    }

    #[test]
    fn add_zero_identity() {
        let p = &u(3) - &u(-1);
        assert_eq!(&p + &LaurentPoly::zero(), p);
    }

    #[test]
    fn mul_matches_convolution_oracle() {
        // [2]*[3] checked against brute-force exponent convolution.
        // [2] = u^4 + u^-4, [3] = u^8 + 1 + u^-8 in u-units.
        let two = &u(4) + &u(-4);
        let three = &(&u(8) + &u(0)) + &u(-8);
        let prod = &two * &three;
        // Brute-force convolution over raw term lists.
        let mut expect = LaurentPoly::zero();
        for (e1, c1) in two.terms() {
            for (e2, c2) in three.terms() {
                expect.add_term(e1 + e2, c1 * c2);
            }
        }
        assert_eq!(prod, expect);
        assert_eq!(prod.num_terms(), 4); // u^12 + u^4 + u^-4 + u^-12
    }

    #[test]
    fn exact_div_roundtrip() {
        let a = &(&u(2) + &u(-2)) * &(&u(6) + &(-&u(0)));
        let q = a.exact_div(&(&u(2) + &u(-2))).unwrap();
        assert_eq!(q, &u(6) + &(-&u(0)));
        // Monomials are units: u^4 + 1 = u^2 * (u^2 + u^-2).
        assert_eq!(
            (&u(4) + &u(0)).exact_div(&(&u(2) + &u(-2))).unwrap(),
            u(2)
        );
        // Genuinely non-divisible case.
        let three_terms = &(&u(4) + &u(2)) + &u(0);
        assert!(three_terms.exact_div(&(&u(2) + &u(-2))).is_none());
    }

    #[test]
    fn pruning_keeps_no_zeros() {
        let p = &u(1) - &u(1);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
    }

    #[test]
    fn arith_dispatch() {
        let a = &u(2) + &u(-2);
        let b = u(4);
        assert_eq!(laurent_arith(&a, &b, LaurentOp::Add), &a + &b);
        assert_eq!(laurent_arith(&a, &b, LaurentOp::Sub), &a - &b);
        assert_eq!(laurent_arith(&a, &b, LaurentOp::Mul), &a * &b);
    }
}
