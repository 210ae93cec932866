//! Delta squares, reduced tetrahedral sums, 6j-symbols and region weights.
//!
//! A standalone Delta is never computed symbolically: it is the square root
//! of a rational function, which leaves the ring. Symbolic consumers pair
//! Delta factors into Delta^2 (per singular edge, or squared outright in the
//! all-equal 6j); the numeric 6j takes the positive real branch, legitimate
//! under r-admissibility where every bracket involved is a positive real.

use crate::qring::{RationalFunc, UnitEval};

use super::factored::{assemble_sum, FactoredEval, FactoredQ, RootContext};
use super::half::{is_admissible, is_r_admissible, AdmissibleTriple, HalfInt};
use super::QalgError;

/// The four admissible triples of a 6-tuple (i,j,k,l,m,n) with opposite
/// pairs (i,l), (j,m), (k,n).
pub fn six_tuple_triples(six: [HalfInt; 6]) -> [(HalfInt, HalfInt, HalfInt); 4] {
    let [i, j, k, l, m, n] = six;
    [(i, j, k), (i, m, n), (j, l, n), (k, l, m)]
}

fn check_triples(six: [HalfInt; 6]) -> Result<(), QalgError> {
    for (a, b, c) in six_tuple_triples(six) {
        if !is_admissible(a, b, c) {
            return Err(QalgError::NotAdmissible(a, b, c));
        }
    }
    Ok(())
}

/// Delta(a,b,c)^2 = [a+b-c]! [a+c-b]! [b+c-a]! / [a+b+c+1]! in factored form.
pub(crate) fn delta_squared_factored(a: HalfInt, b: HalfInt, c: HalfInt) -> FactoredQ {
    debug_assert!(is_admissible(a, b, c));
    let mut t = FactoredQ::one();
    t.mul_qfact((a + b - c).to_integer() as u64, 1);
    t.mul_qfact((a + c - b).to_integer() as u64, 1);
    t.mul_qfact((b + c - a).to_integer() as u64, 1);
    t.mul_qfact((a + b + c).to_integer() as u64 + 1, -1);
    t
}

/// Exact Delta^2 of an admissible triple.
pub fn delta_squared(tr: &AdmissibleTriple) -> Result<RationalFunc, QalgError> {
    let (a, b, c) = tr.colors();
    delta_squared_factored(a, b, c).to_ratfunc()
}

/// The z-sum terms of the 6j-symbol with phase and Delta prefactors
/// stripped: (-1)^z [z+1]! / (prod over triads [z-T]! * prod over quads [Q-z]!).
///
/// z runs over the integers making every factorial argument non-negative;
/// the quads are the sums of two opposite pairs, i+j+l+m, i+k+l+n and
/// j+k+m+n, which is the placement that survives the tetrahedral-symmetry
/// and binomial-identity checks.
pub(crate) fn tet_z_terms(six: [HalfInt; 6]) -> Result<Vec<FactoredQ>, QalgError> {
    check_triples(six)?;
    let [i, j, k, l, m, n] = six;
    let triads: [HalfInt; 4] = [i + j + k, i + m + n, j + l + n, k + l + m];
    let total = i + j + k + l + m + n;
    let quads: [HalfInt; 3] = [total - (k + n), total - (j + m), total - (i + l)];
    debug_assert!(triads.iter().all(|t| t.is_integer()));
    debug_assert!(quads.iter().all(|q| q.is_integer()));
    let lo = triads.iter().map(|t| t.to_integer()).max().unwrap();
    let hi = quads.iter().map(|q| q.to_integer()).min().unwrap();
    let mut terms = Vec::new();
    for z in lo..=hi {
        let mut t = FactoredQ::one();
        t.mul_sign(z % 2 != 0);
        t.mul_qfact(z as u64 + 1, 1);
        for tr in triads {
            t.mul_qfact((z - tr.to_integer()) as u64, -1);
        }
        for q in quads {
            t.mul_qfact((q.to_integer() - z) as u64, -1);
        }
        terms.push(t);
    }
    Ok(terms)
}

/// The reduced tetrahedral sum U: the 6j z-sum with the phase and the four
/// Delta prefactors stripped. An empty z-range yields 0.
pub fn reduced_tet_sum(six: [HalfInt; 6]) -> Result<RationalFunc, QalgError> {
    assemble_sum(&tet_z_terms(six)?)
}

/// Power of sqrt(-1) in the 6j phase: -2(i+j+k+l+m+n), always an integer
/// exponent since each triple has integer sum.
fn phase_i_power(six: [HalfInt; 6]) -> i64 {
    -six.iter().map(|h| h.twice()).sum::<i64>()
}

/// Numeric 6j-symbol at t = e^(2*pi*i/r). Requires all four triples
/// r-admissible so the Delta^2 product evaluates to a positive real and the
/// square root can take the positive branch.
pub fn sixj_numeric(six: [HalfInt; 6], rc: &RootContext) -> Result<UnitEval, QalgError> {
    let r = rc.r();
    for (a, b, c) in six_tuple_triples(six) {
        if !is_r_admissible(a, b, c, r) {
            return Err(QalgError::NotRAdmissible(a, b, c, r));
        }
    }
    let ctx = rc.ctx();

    let mut delta_prod = FactoredQ::one();
    for (a, b, c) in six_tuple_triples(six) {
        delta_prod.mul(&delta_squared_factored(a, b, c));
    }
    let delta_val = match rc.eval(&delta_prod) {
        FactoredEval::Value(v) => v,
        other => return Err(QalgError::DegenerateDelta(format!("{other:?}"))),
    };
    // Positive real by r-admissibility; take half the log for the root.
    debug_assert!(delta_val.phase_f64(ctx).abs() < 1e-9);
    let half_log = ctx.mul(&delta_val.log_mag, &ctx.from_f64(0.5));
    let sqrt_delta = UnitEval {
        log_mag: half_log,
        phase: ctx.from_i64(0),
    };

    let u_val = match rc.sum_terms(&tet_z_terms(six)?) {
        crate::qring::EvalOutcome::Value(v) => v,
        crate::qring::EvalOutcome::Zero => UnitEval::zero(ctx),
        crate::qring::EvalOutcome::Pole => {
            return Err(QalgError::DegenerateDelta("pole in z-sum".into()))
        }
    };

    let mut phase_term = FactoredQ::one();
    phase_term.mul_i_pow(phase_i_power(six));
    let phase_val = match rc.eval(&phase_term) {
        FactoredEval::Value(v) => v,
        other => return Err(QalgError::DegenerateDelta(format!("{other:?}"))),
    };

    Ok(phase_val.mul(&sqrt_delta, ctx).mul(&u_val, ctx))
}

/// The 6j with all six entries k (k a non-negative integer color), exact:
/// the four equal Delta factors pair into (Delta^2)^2, so the whole symbol
/// stays in the rational ring.
pub fn sixj_symmetric(k: HalfInt) -> Result<RationalFunc, QalgError> {
    if !k.is_integer() || !k.is_nonneg() {
        return Err(QalgError::NotAdmissible(k, k, k));
    }
    let six = [k; 6];
    let mut prefix = FactoredQ::one();
    prefix.mul_i_pow(phase_i_power(six)); // i^(-12k) = 1 for integer k
    let d2 = delta_squared_factored(k, k, k);
    prefix.mul(&d2);
    prefix.mul(&d2);
    let mut terms = tet_z_terms(six)?;
    for t in &mut terms {
        t.mul(&prefix);
    }
    assemble_sum(&terms)
}

/// Region weight in factored form:
/// w[R] = w_j^euler * t^(-j(j+1)gleam) * (sqrt(-1))^(4 j gleam)
/// with w_j = (-1)^(2j) [2j+1].
pub fn region_weight_factored(color: HalfInt, euler: i64, gleam: HalfInt) -> FactoredQ {
    let mut t = FactoredQ::one();
    t.mul_sign((color.twice() * euler).rem_euclid(2) == 1);
    t.mul_bracket(color.dim_index() as u64, euler);
    t.mul_u_pow(color.weight_u_exp(gleam));
    t.mul_i_pow(color.weight_i_pow(gleam));
    t
}

/// Region weight as an exact rational function.
pub fn region_weight(color: HalfInt, euler: i64, gleam: HalfInt) -> Result<RationalFunc, QalgError> {
    region_weight_factored(color, euler, gleam).to_ratfunc()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qnum::{qfact, qint};
    use crate::qring::{eval_at_root, GaussRat, LaurentPoly, NumCtx, RationalFunc};

    fn h(twice: i64) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn delta_squared_base_cases() {
        // (0,0,0) -> 1/[1]! = 1
        let tr = AdmissibleTriple::new(h(0), h(0), h(0)).unwrap();
        assert!(delta_squared(&tr).unwrap().is_one());
        // (1/2,1/2,0) -> [0]![0]![1]!/[2]! = 1/[2]
        let tr = AdmissibleTriple::new(h(1), h(1), h(0)).unwrap();
        let expect = RationalFunc::new(LaurentPoly::one(), qint(2)).unwrap();
        assert_eq!(delta_squared(&tr).unwrap(), expect);
    }

    #[test]
    fn delta_squared_positive_at_root() {
        // ev_7 of Delta^2(1,1,1) > 0: every bracket [n], n <= 4 < 7 positive.
        let tr = AdmissibleTriple::new(h(2), h(2), h(2)).unwrap();
        let d2 = delta_squared(&tr).unwrap();
        let ctx = NumCtx::new(96).unwrap();
        let v = eval_at_root(&d2, 7, &ctx).unwrap().unwrap_value();
        assert!(v.real_f64(&ctx) > 0.0);
        assert!(v.phase_f64(&ctx).abs() < 1e-20);
    }

    #[test]
    fn delta_squared_is_factorial_ratio() {
        // Verified by exact division against the product of qfact values
        // where the result is polynomial (denominator = [1]! here).
        let tr = AdmissibleTriple::new(h(2), h(2), h(0)).unwrap();
        // Delta^2(1,1,0) = [2]![0]![0]!/[3]! = 1/[3] — check against raw quotient.
        let raw_num = &(&qfact(2) * &qfact(0)) * &qfact(0);
        let raw_den = qfact(3);
        assert_eq!(
            delta_squared(&tr).unwrap(),
            RationalFunc::new(raw_num, raw_den).unwrap()
        );
    }

    #[test]
    fn tet_sum_all_zeros() {
        // Single term z = 0: [1]!/[0]!^7 = 1.
        assert!(reduced_tet_sum([h(0); 6]).unwrap().is_one());
    }

    #[test]
    fn tet_sum_against_explicit_z_loop() {
        // (1/2,1/2,0,1/2,1/2,0): triples (1/2,1/2,0),(1/2,1/2,0),(1/2,1/2,0),
        // (0,1/2,1/2). Independent oracle: enumerate z explicitly and build
        // each term by hand from quantum factorials.
        let six = [h(1), h(1), h(0), h(1), h(1), h(0)];
        let got = reduced_tet_sum(six).unwrap();

        // Triads all 1; quads: i+j+l+m = 2, i+k+l+n = 1, j+k+m+n = 1.
        // So z = 1 only: term = -[2]!/([0]!^4 [1]!^3) = -[2].
        let expect = -&RationalFunc::from_poly(qint(2));
        assert_eq!(got, expect);

        // Brute-force check of the same value by direct z enumeration.
        let mut acc = RationalFunc::zero();
        for z in 1..=1i64 {
            let sign = if z % 2 == 0 { 1 } else { -1 };
            let num = qfact(z as u64 + 1).scaled(&GaussRat::from_int(sign));
            let den = LaurentPoly::one(); // all denominator factorials are [0]! or [1]!
            acc = &acc + &RationalFunc::new(num, den).unwrap();
        }
        assert_eq!(got, acc);
    }

    #[test]
    fn sixj_all_zeros_is_one() {
        let rc = RootContext::new(8, 96).unwrap();
        let v = sixj_numeric([h(0); 6], &rc).unwrap();
        assert!(v.log_mag_f64(rc.ctx()).abs() < 1e-20);
        assert!(v.phase_f64(rc.ctx()).abs() < 1e-20);
    }

    #[test]
    fn sixj_numeric_matches_bruteforce_display_at_r10() {
        // (1/2,1/2,1,1/2,1/2,1) at r = 10 against a term-by-term brute-force
        // evaluation of the full display via symbolic expansion + eval.
        let six = [h(1), h(1), h(2), h(1), h(1), h(2)];
        let rc = RootContext::new(10, 128).unwrap();
        let got = sixj_numeric(six, &rc).unwrap();

        // Brute force: phase * sqrt(prod Delta^2) * U, all through the
        // symbolic route and eval_at_root.
        let ctx = NumCtx::new(128).unwrap();
        let mut d2_prod = RationalFunc::one();
        for (a, b, c) in six_tuple_triples(six) {
            let tr = AdmissibleTriple::new(a, b, c).unwrap();
            d2_prod = &d2_prod * &delta_squared(&tr).unwrap();
        }
        let d2_val = eval_at_root(&d2_prod, 10, &ctx).unwrap().unwrap_value();
        let u = reduced_tet_sum(six).unwrap();
        let u_val = eval_at_root(&u, 10, &ctx).unwrap().unwrap_value();
        let phase = GaussRat::i_pow(phase_i_power(six));
        let phase_val = crate::qring::eval_gauss(&phase, &ctx);

        let expect_log = 0.5 * d2_val.log_mag_f64(&ctx)
            + u_val.log_mag_f64(&ctx)
            + phase_val.log_mag_f64(&ctx);
        assert!((got.log_mag_f64(rc.ctx()) - expect_log).abs() < 1e-12);
        let expect_phase = u_val.phase_f64(&ctx) + phase_val.phase_f64(&ctx);
        let dp = (got.phase_f64(rc.ctx()) - expect_phase).rem_euclid(2.0 * std::f64::consts::PI);
        assert!(dp < 1e-12 || (dp - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn sixj_symmetric_base_and_cross_check() {
        assert!(sixj_symmetric(h(0)).unwrap().is_one());
        assert!(sixj_symmetric(h(1)).is_err()); // half-odd k inadmissible

        // k = 1 symbolic evaluated at r = 7 matches sixj_numeric.
        let sym = sixj_symmetric(h(2)).unwrap();
        let ctx = NumCtx::new(128).unwrap();
        let sym_val = eval_at_root(&sym, 7, &ctx).unwrap().unwrap_value();
        let rc = RootContext::new(7, 128).unwrap();
        let num_val = sixj_numeric([h(2); 6], &rc).unwrap();
        assert!((sym_val.log_mag_f64(&ctx) - num_val.log_mag_f64(rc.ctx())).abs() < 1e-12);
        let dp = (sym_val.phase_f64(&ctx) - num_val.phase_f64(rc.ctx()))
            .rem_euclid(2.0 * std::f64::consts::PI);
        assert!(dp < 1e-12 || (dp - 2.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn region_weight_examples() {
        // j = (d-1)/2, euler 1, gleam 0 -> (-1)^(d-1) [d]; here d = 4.
        let j = h(3);
        let w = region_weight(j, 1, h(0)).unwrap();
        let expect = -&RationalFunc::from_poly(qint(4));
        assert_eq!(w, expect);
        // j = 0 is trivial for any euler/gleam.
        assert!(region_weight(h(0), -3, h(5)).unwrap().is_one());
        // j = 1/2, euler 0, gleam 1/2 -> i * u^-3.
        let w = region_weight(h(1), 0, h(1)).unwrap();
        let expect = RationalFunc::from_poly(LaurentPoly::monomial(-3, GaussRat::i_pow(1)));
        assert_eq!(w, expect);
    }

    #[test]
    fn tet_sum_empty_range_is_zero() {
        // Construct admissible triples whose z-range is empty: not possible
        // for genuinely admissible data, so check the guard via a direct
        // call with a valid tuple and verify non-emptiness instead.
        let six = [h(2); 6];
        let terms = tet_z_terms(six).unwrap();
        assert!(!terms.is_empty());
    }
}
