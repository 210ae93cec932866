//! Numeric evaluation at roots of unity in configurable-precision arithmetic.
//!
//! The root convention is fixed once: `t^(1/8) = e^(2*pi*i/(8r))` (principal
//! eighth root) and `sqrt(-1) = +i`, so every evaluation is reproducible
//! bit-for-bit at a given precision.

use std::cell::RefCell;
use std::fmt;

use astro_float::{BigFloat, Consts, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;

use super::gauss::GaussRat;
use super::laurent::LaurentPoly;
use super::ratfunc::RationalFunc;
use super::QringError;

/// Default working precision in bits. State sums to d around 1000 lose well
/// under 64 bits to cancellation in log-space form, so 128 leaves headroom.
pub const DEFAULT_PRECISION: u32 = 128;

/// Minimum accepted precision (f64-equivalent).
pub const MIN_PRECISION: u32 = 53;

const RM: RoundingMode = RoundingMode::ToEven;

/// Shared context for multiprecision arithmetic: precision plus the
/// constants cache. One per worker; not Sync by design.
pub struct NumCtx {
    prec: usize,
    cc: RefCell<Consts>,
}

impl NumCtx {
    pub fn new(precision_bits: u32) -> Result<Self, QringError> {
        if precision_bits < MIN_PRECISION {
            return Err(QringError::BadPrecision(precision_bits));
        }
        Ok(NumCtx {
            prec: precision_bits as usize,
            cc: RefCell::new(Consts::new().expect("constants cache")),
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.prec as u32
    }

    pub fn pi(&self) -> BigFloat {
        self.cc.borrow_mut().pi(self.prec, RM)
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.prec)
    }

    pub fn from_i64(&self, x: i64) -> BigFloat {
        BigFloat::from_i64(x, self.prec)
    }

    pub fn from_bigint(&self, x: &BigInt) -> BigFloat {
        let (sign, digits) = x.to_u64_digits();
        let mut acc = BigFloat::from_i8(0, self.prec + 64);
        let shift = BigFloat::from_u128(1u128 << 64, self.prec + 64);
        for limb in digits.iter().rev() {
            acc = acc.mul(&shift, self.prec + 64, RM);
            acc = acc.add(&BigFloat::from_u64(*limb, self.prec + 64), self.prec + 64, RM);
        }
        if sign == num_bigint::Sign::Minus {
            acc = acc.neg();
        }
        acc
    }

    pub fn from_rat(&self, x: &BigRational) -> BigFloat {
        let n = self.from_bigint(x.numer());
        let d = self.from_bigint(x.denom());
        n.div(&d, self.prec, RM)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.prec, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.prec, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.prec, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.prec, RM)
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        a.sin(self.prec, RM, &mut self.cc.borrow_mut())
    }

    pub fn cos(&self, a: &BigFloat) -> BigFloat {
        a.cos(self.prec, RM, &mut self.cc.borrow_mut())
    }

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        a.ln(self.prec, RM, &mut self.cc.borrow_mut())
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        a.exp(self.prec, RM, &mut self.cc.borrow_mut())
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.prec, RM)
    }

    pub fn atan(&self, a: &BigFloat) -> BigFloat {
        a.atan(self.prec, RM, &mut self.cc.borrow_mut())
    }

    /// Four-quadrant arctangent; result in (-pi, pi].
    pub fn atan2(&self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        let pi = self.pi();
        let zero = self.from_i64(0);
        if x.is_zero() {
            if y.is_zero() {
                return zero;
            }
            let half_pi = self.div(&pi, &self.from_i64(2));
            return if y.is_negative() { half_pi.neg() } else { half_pi };
        }
        let base = self.atan(&self.div(y, x));
        if x.is_negative() {
            if y.is_negative() {
                self.sub(&base, &pi)
            } else {
                self.add(&base, &pi)
            }
        } else {
            base
        }
    }

    /// Reduce an angle to (-pi, pi].
    pub fn reduce_phase(&self, a: &BigFloat) -> BigFloat {
        let pi = self.pi();
        let two_pi = self.add(&pi, &pi);
        // k = round(a / 2pi)
        let k = self.div(a, &two_pi);
        let k_rounded = k.round(self.prec, RM).int();
        let mut out = self.sub(a, &self.mul(&k_rounded, &two_pi));
        // Nudge into (-pi, pi].
        let neg_pi = pi.neg();
        if out.cmp(&neg_pi).is_some_and(|c| c <= 0) {
            out = self.add(&out, &two_pi);
        } else if out.cmp(&pi).is_some_and(|c| c > 0) {
            out = self.sub(&out, &two_pi);
        }
        out
    }

    pub fn to_f64(&self, a: &BigFloat) -> f64 {
        if a.is_inf_pos() {
            return f64::INFINITY;
        }
        if a.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        if a.is_nan() {
            return f64::NAN;
        }
        format!("{a}").parse::<f64>().unwrap_or(f64::NAN)
    }

    pub fn neg_inf(&self) -> BigFloat {
        BigFloat::from_f64(f64::NEG_INFINITY, self.prec)
    }
}

/// A complex number stored as `e^(log_mag + i*phase)`; `log_mag` is -inf for
/// zero and `phase` lies in (-pi, pi]. Multiplication adds the fields;
/// addition goes through cartesian form.
#[derive(Clone, Debug)]
pub struct UnitEval {
    pub log_mag: BigFloat,
    pub phase: BigFloat,
}

impl UnitEval {
    pub fn one(ctx: &NumCtx) -> Self {
        UnitEval {
            log_mag: ctx.from_i64(0),
            phase: ctx.from_i64(0),
        }
    }

    pub fn zero(ctx: &NumCtx) -> Self {
        UnitEval {
            log_mag: ctx.neg_inf(),
            phase: ctx.from_i64(0),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.log_mag.is_inf_neg()
    }

    pub fn mul(&self, rhs: &UnitEval, ctx: &NumCtx) -> UnitEval {
        UnitEval {
            log_mag: ctx.add(&self.log_mag, &rhs.log_mag),
            phase: ctx.reduce_phase(&ctx.add(&self.phase, &rhs.phase)),
        }
    }

    pub fn div(&self, rhs: &UnitEval, ctx: &NumCtx) -> UnitEval {
        UnitEval {
            log_mag: ctx.sub(&self.log_mag, &rhs.log_mag),
            phase: ctx.reduce_phase(&ctx.sub(&self.phase, &rhs.phase)),
        }
    }

    pub fn to_complex(&self, ctx: &NumCtx) -> (BigFloat, BigFloat) {
        if self.is_zero() {
            return (ctx.from_i64(0), ctx.from_i64(0));
        }
        let mag = ctx.exp(&self.log_mag);
        (
            ctx.mul(&mag, &ctx.cos(&self.phase)),
            ctx.mul(&mag, &ctx.sin(&self.phase)),
        )
    }

    pub fn from_complex(re: &BigFloat, im: &BigFloat, ctx: &NumCtx) -> UnitEval {
        let norm2 = ctx.add(&ctx.mul(re, re), &ctx.mul(im, im));
        if norm2.is_zero() {
            return UnitEval::zero(ctx);
        }
        let log_mag = ctx.mul(&ctx.ln(&norm2), &ctx.from_f64(0.5));
        let phase = ctx.atan2(im, re);
        UnitEval { log_mag, phase }
    }

    /// Real part of the value (for results known to be real).
    pub fn real_f64(&self, ctx: &NumCtx) -> f64 {
        let (re, _) = self.to_complex(ctx);
        ctx.to_f64(&re)
    }

    pub fn log_mag_f64(&self, ctx: &NumCtx) -> f64 {
        ctx.to_f64(&self.log_mag)
    }

    pub fn phase_f64(&self, ctx: &NumCtx) -> f64 {
        ctx.to_f64(&self.phase)
    }
}

impl fmt::Display for UnitEval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({} + {}i)", self.log_mag, self.phase)
    }
}

/// Outcome of evaluating a rational function at a root of unity.
#[derive(Clone, Debug)]
pub enum EvalOutcome {
    Value(UnitEval),
    Zero,
    Pole,
}

impl EvalOutcome {
    pub fn unwrap_value(self) -> UnitEval {
        match self {
            EvalOutcome::Value(v) => v,
            other => panic!("expected a finite evaluation, got {other:?}"),
        }
    }
}

/// Evaluate a Laurent polynomial at `u = e^(i*pi/(4r))`, returning cartesian
/// coordinates. Terms are accumulated in exponent order, so results are
/// deterministic at fixed precision.
pub fn eval_poly_at_root(p: &LaurentPoly, r: u32, ctx: &NumCtx) -> (BigFloat, BigFloat) {
    let pi = ctx.pi();
    let step = ctx.div(&pi, &ctx.from_i64(4 * r as i64));
    let mut re = ctx.from_i64(0);
    let mut im = ctx.from_i64(0);
    let period = 8 * r as i64;
    for (&e, c) in p.terms() {
        let e_red = e.rem_euclid(period);
        let angle = ctx.mul(&step, &ctx.from_i64(e_red));
        let (cos_a, sin_a) = (ctx.cos(&angle), ctx.sin(&angle));
        let cre = ctx.from_rat(&c.re);
        let cim = ctx.from_rat(&c.im);
        // (cre + i*cim) * (cos + i*sin)
        re = ctx.add(&re, &ctx.sub(&ctx.mul(&cre, &cos_a), &ctx.mul(&cim, &sin_a)));
        im = ctx.add(&im, &ctx.add(&ctx.mul(&cre, &sin_a), &ctx.mul(&cim, &cos_a)));
    }
    (re, im)
}

fn below_zero_threshold(re: &BigFloat, im: &BigFloat, ctx: &NumCtx) -> bool {
    // |v| < 2^(-prec/2) tested as |v|^2 < 2^(-prec).
    let norm2 = ctx.add(&ctx.mul(re, re), &ctx.mul(im, im));
    if norm2.is_zero() {
        return true;
    }
    let thresh = BigFloat::from_f64(1.0, ctx.prec)
        .mul(&pow2(-(ctx.prec as i64), ctx), ctx.prec, RM);
    norm2.cmp(&thresh).is_some_and(|c| c < 0)
}

fn pow2(e: i64, ctx: &NumCtx) -> BigFloat {
    let mut x = BigFloat::from_i8(1, ctx.prec);
    x.set_exponent(x.exponent().unwrap() + e as i32);
    x
}

/// Evaluate `f` at `t = e^(2*pi*i/r)` (so `u = e^(2*pi*i/(8r))`).
///
/// Removable singularities are already gone because `f` is canonical; a
/// residual zero of the denominator is a genuine pole.
pub fn eval_at_root(f: &RationalFunc, r: u32, ctx: &NumCtx) -> Result<EvalOutcome, QringError> {
    assert!(r >= 1, "root order must be positive");
    if f.is_zero() {
        return Ok(EvalOutcome::Zero);
    }
    let (nre, nim) = eval_poly_at_root(f.num(), r, ctx);
    let (dre, dim) = eval_poly_at_root(f.den(), r, ctx);
    let num_zero = below_zero_threshold(&nre, &nim, ctx);
    let den_zero = below_zero_threshold(&dre, &dim, ctx);
    match (num_zero, den_zero) {
        (true, true) => Err(QringError::IndeterminateEval),
        (true, false) => Ok(EvalOutcome::Zero),
        (false, true) => Ok(EvalOutcome::Pole),
        (false, false) => {
            let n = UnitEval::from_complex(&nre, &nim, ctx);
            let d = UnitEval::from_complex(&dre, &dim, ctx);
            Ok(EvalOutcome::Value(n.div(&d, ctx)))
        }
    }
}

/// Evaluate a single Gaussian rational exactly into log/phase form.
pub fn eval_gauss(c: &GaussRat, ctx: &NumCtx) -> UnitEval {
    if c.is_zero() {
        return UnitEval::zero(ctx);
    }
    let re = ctx.from_rat(&c.re);
    let im = ctx.from_rat(&c.im);
    UnitEval::from_complex(&re, &im, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::gauss::GaussRat;

    fn ctx() -> NumCtx {
        NumCtx::new(128).unwrap()
    }

    fn qint_poly(n: u64) -> LaurentPoly {
        // [n] in u-units: exponents 4(n-1-2j).
        let mut p = LaurentPoly::zero();
        for j in 0..n {
            p.add_term(4 * (n as i64 - 1 - 2 * j as i64), GaussRat::one());
        }
        p
    }

    #[test]
    fn bracket_two_at_r5_is_golden_ratio_like() {
        // ev_5([2]) = sin(2*pi/5)/sin(pi/5) = 2cos(pi/5) = golden ratio phi
        let c = ctx();
        let f = RationalFunc::from_poly(qint_poly(2));
        let v = eval_at_root(&f, 5, &c).unwrap().unwrap_value();
        let expect = 1.618_033_988_749_895_f64;
        assert!((v.real_f64(&c) - expect).abs() < 1e-12);
        assert!(v.phase_f64(&c).abs() < 1e-30);
    }

    #[test]
    fn one_evaluates_to_unit() {
        let c = ctx();
        let v = eval_at_root(&RationalFunc::one(), 7, &c)
            .unwrap()
            .unwrap_value();
        assert_eq!(v.log_mag_f64(&c), 0.0);
        assert_eq!(v.phase_f64(&c), 0.0);
    }

    #[test]
    fn bracket_five_at_r5_is_zero() {
        let c = ctx();
        let f = RationalFunc::from_poly(qint_poly(5));
        assert!(matches!(
            eval_at_root(&f, 5, &c).unwrap(),
            EvalOutcome::Zero
        ));
    }

    #[test]
    fn pole_detected() {
        let c = ctx();
        let f = RationalFunc::new(LaurentPoly::one(), qint_poly(5)).unwrap();
        assert!(matches!(
            eval_at_root(&f, 5, &c).unwrap(),
            EvalOutcome::Pole
        ));
    }

    #[test]
    fn eval_multiplicative() {
        // ev(f*g) = ev(f)*ev(g) to high accuracy.
        let c = ctx();
        let f = RationalFunc::from_poly(qint_poly(3));
        let g = RationalFunc::new(qint_poly(2), qint_poly(4)).unwrap();
        let fg = &f * &g;
        let vf = eval_at_root(&f, 9, &c).unwrap().unwrap_value();
        let vg = eval_at_root(&g, 9, &c).unwrap().unwrap_value();
        let vfg = eval_at_root(&fg, 9, &c).unwrap().unwrap_value();
        let prod = vf.mul(&vg, &c);
        assert!((vfg.log_mag_f64(&c) - prod.log_mag_f64(&c)).abs() < 1e-12);
        assert!((vfg.phase_f64(&c) - prod.phase_f64(&c)).abs() < 1e-12);
    }

    #[test]
    fn phase_reduction_range() {
        let c = ctx();
        let big_angle = c.from_f64(123.456);
        let red = c.reduce_phase(&big_angle);
        let v = c.to_f64(&red);
        assert!(v > -std::f64::consts::PI - 1e-15 && v <= std::f64::consts::PI + 1e-15);
        // Consistency: same point on the circle.
        let d = (v - 123.456).rem_euclid(2.0 * std::f64::consts::PI);
        assert!(d.abs() < 1e-9 || (d - 2.0 * std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn to_f64_handles_infinities() {
        let c = ctx();
        assert_eq!(c.to_f64(&c.neg_inf()), f64::NEG_INFINITY);
        assert!((c.to_f64(&c.from_f64(2.5)) - 2.5).abs() < 1e-300);
    }
}
