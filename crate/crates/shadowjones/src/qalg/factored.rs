//! Products of quantum integers in factored form.
//!
//! Every multiplicand the state sum produces (region weights, paired Delta
//! squares, tetrahedral z-terms, normalizations) is a Gaussian scalar times
//! a u-monomial times a product of quantum integers `[m]^e`. Keeping terms
//! factored until the last moment buys two things:
//!
//! * symbolic sums assemble over one factored common denominator instead of
//!   chains of pairwise gcds;
//! * evaluation at `t = e^(2*pi*i/r)` can cancel vanishing `[m]` factors
//!   (those with r | m) exactly by multiplicity, which is what makes the
//!   Volume Conjecture evaluations at r = d finite term by term.

use std::collections::BTreeMap;

use astro_float::BigFloat;
use rayon::prelude::*;

use crate::qring::{
    eval_gauss, EvalOutcome, GaussRat, LaurentPoly, NumCtx, RationalFunc, UnitEval,
};

use super::qnum::qint;
use super::QalgError;

/// `scalar * u^u_exp * prod over m of [m]^e`. An absent bracket has e = 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredQ {
    scalar: GaussRat,
    u_exp: i64,
    brackets: BTreeMap<u64, i64>,
}

impl FactoredQ {
    pub fn one() -> Self {
        FactoredQ {
            scalar: GaussRat::one(),
            u_exp: 0,
            brackets: BTreeMap::new(),
        }
    }

    pub fn zero() -> Self {
        FactoredQ {
            scalar: GaussRat::zero(),
            u_exp: 0,
            brackets: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn mul_scalar(&mut self, c: &GaussRat) {
        self.scalar *= c;
    }

    pub fn mul_sign(&mut self, negative: bool) {
        if negative {
            self.scalar = -std::mem::take(&mut self.scalar);
        }
    }

    pub fn mul_i_pow(&mut self, k: i64) {
        self.scalar *= &GaussRat::i_pow(k);
    }

    pub fn mul_u_pow(&mut self, e: i64) {
        self.u_exp += e;
    }

    /// Multiply by `[m]^e`. `[1]` is trivial; `[0]` collapses the term to zero.
    pub fn mul_bracket(&mut self, m: u64, e: i64) {
        if e == 0 || self.is_zero() {
            return;
        }
        if m == 0 {
            *self = FactoredQ::zero();
            return;
        }
        if m == 1 {
            return;
        }
        let slot = self.brackets.entry(m).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.brackets.remove(&m);
        }
    }

    /// Multiply by `([n]!)^e`.
    pub fn mul_qfact(&mut self, n: u64, e: i64) {
        for m in 2..=n {
            self.mul_bracket(m, e);
        }
    }

    pub fn mul(&mut self, rhs: &FactoredQ) {
        self.scalar *= &rhs.scalar;
        if self.is_zero() {
            self.brackets.clear();
            self.u_exp = 0;
            return;
        }
        self.u_exp += rhs.u_exp;
        for (&m, &e) in &rhs.brackets {
            self.mul_bracket(m, e);
        }
    }

    pub fn pow_assign(&mut self, k: u32) {
        if k == 1 {
            return;
        }
        let base = self.clone();
        *self = FactoredQ::one();
        for _ in 0..k {
            self.mul(&base);
        }
    }

    /// Expand to a canonical rational function.
    pub fn to_ratfunc(&self) -> Result<RationalFunc, QalgError> {
        assemble_sum(std::slice::from_ref(self))
    }

    /// Total degree of the fully expanded numerator+denominator, used to
    /// guard against runaway symbolic requests.
    fn expansion_cost(&self) -> u64 {
        self.brackets
            .iter()
            .map(|(&m, &e)| m * e.unsigned_abs())
            .sum()
    }
}

/// Expand `prod [m]^exps[m]` (all exponents >= 0) into a polynomial.
fn expand_product(exps: &BTreeMap<u64, i64>) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (&m, &e) in exps {
        debug_assert!(e >= 0);
        let b = qint(m);
        for _ in 0..e {
            acc = &acc * &b;
        }
    }
    acc
}

/// Sum of factored terms as one canonical rational function.
///
/// A common denominator is taken in factored form (per-bracket maximum of
/// the negative exponents); the numerators expand to honest polynomials and
/// are summed exactly. Bracket factors of the summed numerator are then
/// divided back out where possible before the final generic normalization.
pub fn assemble_sum(terms: &[FactoredQ]) -> Result<RationalFunc, QalgError> {
    let live: Vec<&FactoredQ> = terms.iter().filter(|t| !t.is_zero()).collect();
    if live.is_empty() {
        return Ok(RationalFunc::zero());
    }

    let mut den_exp: BTreeMap<u64, i64> = BTreeMap::new();
    for t in &live {
        for (&m, &e) in &t.brackets {
            if e < 0 {
                let slot = den_exp.entry(m).or_insert(0);
                *slot = (*slot).max(-e);
            }
        }
    }

    let cost: u64 = live.iter().map(|t| t.expansion_cost()).sum();
    if cost > 40_000_000 {
        return Err(QalgError::SymbolicTooLarge(cost));
    }

    let numerators: Vec<LaurentPoly> = live
        .par_iter()
        .map(|t| {
            let mut exps = den_exp.clone();
            for (&m, &e) in &t.brackets {
                let slot = exps.entry(m).or_insert(0);
                *slot += e;
            }
            let mut p = expand_product(&exps);
            p.mul_monomial(t.u_exp, &t.scalar);
            p
        })
        .collect();

    let mut num = LaurentPoly::zero();
    for p in numerators {
        num = &num + &p;
    }
    if num.is_zero() {
        return Ok(RationalFunc::zero());
    }

    // Divide known denominator factors back out of the sum while they divide
    // exactly; whatever remains goes through the generic gcd.
    for (&m, e) in den_exp.iter_mut() {
        let b = qint(m);
        while *e > 0 {
            match num.exact_div(&b) {
                Some(q) => {
                    num = q;
                    *e -= 1;
                }
                None => break,
            }
        }
    }
    den_exp.retain(|_, e| *e > 0);
    let den = expand_product(&den_exp);
    Ok(RationalFunc::new(num, den)?)
}

/// Outcome of evaluating one factored term at a root of unity.
#[derive(Clone, Debug)]
pub enum FactoredEval {
    Zero,
    Pole,
    Value(UnitEval),
}

/// Evaluation context at `t = e^(2*pi*i/r)`: caches the log-sines the
/// bracket magnitudes are built from. One per worker thread.
pub struct RootContext {
    r: u64,
    ctx: NumCtx,
    ln_sin: Vec<BigFloat>, // index m in 1..r -> ln(sin(pi m / r)); [0] unused
}

impl RootContext {
    pub fn new(r: u32, precision_bits: u32) -> Result<Self, crate::qring::QringError> {
        // At r = 1 the reference bracket [1] degenerates together with the
        // evaluation point; the classical limit t -> 1 is out of scope.
        assert!(r >= 2, "root order must be at least 2");
        let ctx = NumCtx::new(precision_bits)?;
        let r = r as u64;
        let pi = ctx.pi();
        let step = ctx.div(&pi, &ctx.from_i64(r as i64));
        let mut ln_sin = Vec::with_capacity(r as usize);
        ln_sin.push(ctx.from_i64(0)); // placeholder for m = 0
        for m in 1..r {
            let angle = ctx.mul(&step, &ctx.from_i64(m as i64));
            ln_sin.push(ctx.ln(&ctx.sin(&angle)));
        }
        Ok(RootContext { r, ctx, ln_sin })
    }

    pub fn r(&self) -> u32 {
        self.r as u32
    }

    pub fn ctx(&self) -> &NumCtx {
        &self.ctx
    }

    /// ln |ev(`[m]`)| for r not dividing m.
    fn ln_abs_bracket(&self, m: u64) -> BigFloat {
        let m_red = (m % self.r) as usize;
        self.ctx.sub(&self.ln_sin[m_red], &self.ln_sin[1])
    }

    /// Sign of ev(`[m]`) = sin(pi m / r)/sin(pi / r) for r not dividing m.
    fn bracket_negative(&self, m: u64) -> bool {
        (m / self.r) % 2 == 1
    }

    /// Evaluate a factored term, cancelling vanishing brackets exactly.
    ///
    /// Brackets `[m]` with r | m are simple zeros at the evaluation point; a
    /// term whose net multiplicity of such factors is zero has the finite
    /// limit obtained by replacing each with (-1)^(m/r) * m.
    pub fn eval(&self, t: &FactoredQ) -> FactoredEval {
        if t.is_zero() {
            return FactoredEval::Zero;
        }
        let mut net_vanishing: i64 = 0;
        for (&m, &e) in &t.brackets {
            if m % self.r == 0 {
                net_vanishing += e;
            }
        }
        if net_vanishing > 0 {
            return FactoredEval::Zero;
        }
        if net_vanishing < 0 {
            return FactoredEval::Pole;
        }

        let ctx = &self.ctx;
        let mut log_mag = ctx.from_i64(0);
        let mut negative = false;
        for (&m, &e) in &t.brackets {
            if m % self.r == 0 {
                // limit value contribution: ((-1)^(m/r) * m)^e
                log_mag = ctx.add(
                    &log_mag,
                    &ctx.mul(&ctx.from_i64(e), &ctx.ln(&ctx.from_i64(m as i64))),
                );
                if (m / self.r) % 2 == 1 && e % 2 != 0 {
                    negative = !negative;
                }
            } else {
                log_mag = ctx.add(&log_mag, &ctx.mul(&ctx.from_i64(e), &self.ln_abs_bracket(m)));
                if self.bracket_negative(m) && e % 2 != 0 {
                    negative = !negative;
                }
            }
        }
        let scalar_ev = eval_gauss(&t.scalar, ctx);
        log_mag = ctx.add(&log_mag, &scalar_ev.log_mag);
        // phase = arg(scalar) + sign flip + u_exp * pi/(4r)
        let mut phase = scalar_ev.phase;
        if negative {
            phase = ctx.add(&phase, &ctx.pi());
        }
        let u_phase = ctx.div(
            &ctx.mul(&ctx.pi(), &ctx.from_i64(t.u_exp.rem_euclid(8 * self.r as i64))),
            &ctx.from_i64(4 * self.r as i64),
        );
        phase = ctx.reduce_phase(&ctx.add(&phase, &u_phase));
        FactoredEval::Value(UnitEval { log_mag, phase })
    }

    /// Deterministic fixed-order complex sum of factored terms. Any pole
    /// term makes the whole sum a pole; zero terms are skipped.
    pub fn sum_terms(&self, terms: &[FactoredQ]) -> EvalOutcome {
        let ctx = &self.ctx;
        let mut re = ctx.from_i64(0);
        let mut im = ctx.from_i64(0);
        let mut any = false;
        for t in terms {
            match self.eval(t) {
                FactoredEval::Pole => return EvalOutcome::Pole,
                FactoredEval::Zero => {}
                FactoredEval::Value(v) => {
                    let (tre, tim) = v.to_complex(ctx);
                    re = ctx.add(&re, &tre);
                    im = ctx.add(&im, &tim);
                    any = true;
                }
            }
        }
        if !any {
            return EvalOutcome::Zero;
        }
        let v = UnitEval::from_complex(&re, &im, ctx);
        if v.is_zero() {
            EvalOutcome::Zero
        } else {
            EvalOutcome::Value(v)
        }
    }
}
