//! The analytic side of the Volume Conjecture checks: the Lobachevsky
//! function, the ideal-octahedron volume, the scan target, the log-space
//! quantum-binomial evaluator, and the quantum-factorial asymptotics.

use crate::qalg::RootContext;
use crate::qring::QringError;
use crate::statesum::{VCScanRecord, VCStatus};

#[derive(Debug, Clone, thiserror::Error)]
pub enum VolumeError {
    #[error("tolerance {tolerance} unreachable within {max_terms} series terms")]
    ToleranceUnreachable { tolerance: f64, max_terms: usize },
    #[error(transparent)]
    Qring(#[from] QringError),
}

/// Series evaluation parameters for the Lobachevsky function.
#[derive(Clone, Copy, Debug)]
pub struct LobParams {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for LobParams {
    fn default() -> Self {
        LobParams {
            tolerance: 1e-12,
            max_terms: 64,
        }
    }
}

/// zeta(2), zeta(4), ..., zeta(2n) by the Euler convolution recurrence
/// zeta(2n) = (sum_{k=1}^{n-1} zeta(2k) zeta(2n-2k)) / (n + 1/2).
fn even_zetas(n: usize) -> Vec<f64> {
    let mut z = Vec::with_capacity(n);
    z.push(std::f64::consts::PI * std::f64::consts::PI / 6.0);
    for m in 2..=n {
        let s: f64 = (1..m).map(|k| z[k - 1] * z[m - k - 1]).sum();
        z.push(s / (m as f64 + 0.5));
    }
    z
}

/// The Lobachevsky function: odd, pi-periodic, zero at multiples of pi/2's
/// endpoints. Evaluated by the resummed sine series
///   Lambda(x) = x - x ln(2x) + x sum_{n>=1} zeta(2n)/(n(2n+1)) (x/pi)^(2n)
/// after range reduction to [0, pi/2], where the term ratio is at most 1/4
/// and the geometric tail bound is rigorous.
pub fn lobachevsky(x: f64, p: &LobParams) -> Result<f64, VolumeError> {
    assert!(x.is_finite(), "Lobachevsky of a non-finite argument");
    if p.tolerance < 1e-14 {
        // Below double-precision resolution the bound cannot be certified.
        return Err(VolumeError::ToleranceUnreachable {
            tolerance: p.tolerance,
            max_terms: p.max_terms,
        });
    }
    let pi = std::f64::consts::PI;
    // Reduce to [0, pi) by periodicity, then to [0, pi/2] by oddness.
    let mut y = x.rem_euclid(pi);
    let mut sign = 1.0;
    if y > pi / 2.0 {
        y = pi - y;
        sign = -1.0;
    }
    if y == 0.0 {
        return Ok(0.0);
    }
    let q = (y / pi) * (y / pi); // <= 1/4 after reduction
    let zetas = even_zetas(p.max_terms);
    let mut series = 0.0f64;
    let mut qn = q;
    let mut converged = false;
    for n in 1..=p.max_terms {
        let coeff = zetas[n - 1] / (n as f64 * (2 * n + 1) as f64);
        series += coeff * qn;
        // Rigorous tail: zeta(2m) < 2 for m >= 1 and the powers are
        // geometric with ratio q, so tail < 2 q^(n+1) / ((n+1)(2n+3)(1-q)).
        let tail = 2.0 * qn * q / ((n as f64 + 1.0) * (2.0 * n as f64 + 3.0) * (1.0 - q));
        if y * tail < p.tolerance {
            converged = true;
            break;
        }
        qn *= q;
    }
    if !converged {
        return Err(VolumeError::ToleranceUnreachable {
            tolerance: p.tolerance,
            max_terms: p.max_terms,
        });
    }
    Ok(sign * (y - y * (2.0 * y).ln() + y * series))
}

fn lob(x: f64) -> f64 {
    lobachevsky(x, &LobParams::default()).expect("default parameters converge")
}

/// Adaptive-quadrature reference for Lambda(x) = -int_0^x ln|2 sin s| ds,
/// kept as an independent oracle for the series implementation. The
/// endpoint log singularities integrate in closed form against ln(2s); the
/// smooth remainder ln(sin s / s) goes through adaptive Simpson.
pub fn lobachevsky_quadrature(x: f64, tol: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let y = x.rem_euclid(pi);
    if y == 0.0 {
        return 0.0;
    }
    // int_0^y ln(2 sin s) ds for y in (0, pi/2] via the subtraction trick;
    // for y in (pi/2, pi) reflect: int_0^y = int_0^(pi-y) shifted by the
    // symmetric full quadrant pieces (Lambda is odd about pi/2 here).
    fn first_quadrant(y: f64, tol: f64) -> f64 {
        // returns int_0^y ln(2 sin s) ds, 0 < y <= pi/2
        let g = |s: f64| {
            if s == 0.0 {
                0.0
            } else {
                (s.sin() / s).ln()
            }
        };
        y * (2.0 * y).ln() - y + adaptive_simpson(&g, 0.0, y, tol)
    }
    let val = if y <= pi / 2.0 {
        first_quadrant(y, tol)
    } else {
        // int_0^y = int_0^(pi/2) + int_(pi/2)^y; substitute s = pi - u in
        // the second piece: int_(pi-y)^(pi/2) ln(2 sin u) du.
        let a = first_quadrant(pi / 2.0, tol / 2.0);
        let b = first_quadrant(pi / 2.0, tol / 2.0) - first_quadrant(pi - y, tol / 2.0);
        a + b
    };
    -val
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b))
    }
    fn rec(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        if depth > 50 || (left + right - whole).abs() < 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            rec(f, a, m, left, tol / 2.0, depth + 1) + rec(f, m, b, right, tol / 2.0, depth + 1)
        }
    }
    let whole = simpson(f, a, b);
    rec(f, a, b, whole, tol, 0)
}

/// Volume of the ideal regular octahedron: 8 Lambda(pi/4).
pub fn vol_oct() -> f64 {
    8.0 * lob(std::f64::consts::PI / 4.0)
}

/// The Volume Conjecture target for a universal link of complexity c:
/// 2c Vol_Oct / (2 pi) = 8 c Lambda(pi/4) / pi.
pub fn vc_target(c: u32) -> f64 {
    assert!(c >= 1);
    8.0 * c as f64 * lob(std::f64::consts::PI / 4.0) / std::f64::consts::PI
}

/// L(alpha, beta) = Lambda(alpha) + Lambda(pi/2 - alpha + beta)
///                - Lambda(pi/2 + beta).
pub fn l_alpha_beta(alpha: f64, beta: f64) -> f64 {
    let pi = std::f64::consts::PI;
    lob(alpha) + lob(pi / 2.0 - alpha + beta) - lob(pi / 2.0 + beta)
}

/// log of `sum_j ev_d([k choose j])^4` at d = 2k+1, computed entirely
/// in log space: `log ev_d([m])` telescopes over log sin(pi m / d), and the
/// positive terms combine by log-sum-exp.
pub fn binomial_sum_log(k: u32, precision_bits: u32) -> Result<f64, VolumeError> {
    assert!(k >= 1);
    let d = 2 * k + 1;
    let rc = RootContext::new(d, precision_bits)?;
    let ctx = rc.ctx();
    let pi = ctx.pi();
    let step = ctx.div(&pi, &ctx.from_i64(d as i64));
    // Prefix sums of ln ev_d([m]) = ln sin(pi m/d) - ln sin(pi/d), m <= k.
    let ln_sin_1 = ctx.ln(&ctx.sin(&step));
    let mut prefix = Vec::with_capacity(k as usize + 1);
    prefix.push(ctx.from_i64(0));
    let mut acc = ctx.from_i64(0);
    for m in 1..=k {
        let angle = ctx.mul(&step, &ctx.from_i64(m as i64));
        let ln_ev = ctx.sub(&ctx.ln(&ctx.sin(&angle)), &ln_sin_1);
        acc = ctx.add(&acc, &ln_ev);
        prefix.push(acc.clone());
    }
    // x_j = 4 (S_k - S_j - S_{k-j}); log-sum-exp with the max pulled out.
    let xs: Vec<astro_float::BigFloat> = (0..=k)
        .map(|j| {
            let v = ctx.sub(
                &ctx.sub(&prefix[k as usize], &prefix[j as usize]),
                &prefix[(k - j) as usize],
            );
            ctx.mul(&v, &ctx.from_i64(4))
        })
        .collect();
    let max = xs
        .iter()
        .cloned()
        .reduce(|a, b| if a.cmp(&b).is_some_and(|c| c >= 0) { a } else { b })
        .expect("nonempty");
    let mut sum = ctx.from_i64(0);
    for x in &xs {
        sum = ctx.add(&sum, &ctx.exp(&ctx.sub(x, &max)));
    }
    let lse = ctx.add(&max, &ctx.ln(&sum));
    Ok(ctx.to_f64(&lse))
}

/// Fast Volume Conjecture scan over odd d <= d_max for a universal link of
/// complexity c, using `ev_d(J_d) = (sum_j [k choose j]^4)^c`. Columns match
/// the state-sum engine's records.
pub fn vc_sequence(
    c: u32,
    d_max: u32,
    precision_bits: u32,
) -> Result<Vec<VCScanRecord>, VolumeError> {
    assert!(c >= 1);
    let mut out = Vec::new();
    let mut d = 3;
    while d <= d_max {
        let k = (d - 1) / 2;
        let log_mag = c as f64 * binomial_sum_log(k, precision_bits)?;
        out.push(VCScanRecord {
            d,
            status: VCStatus::Ok,
            log_mag: Some(log_mag),
            a_d: Some(log_mag / d as f64),
        });
        d += 2;
    }
    Ok(out)
}

/// Normalized residual of the quantum-factorial asymptotics at d = 2k+1:
/// `(1/d) |log((2 sin(pi/d))^j ev_d([j]!)) + (d/pi) Lambda(pi j/d)|`,
/// which telescopes to (1/d) | sum_{m<=j} ln(2 sin(pi m/d)) + (d/pi) Lambda |.
pub fn qfact_asymptotic_residual(d: u32, j: u32, precision_bits: u32) -> Result<f64, VolumeError> {
    assert!(d % 2 == 1 && d >= 5, "d = 2k+1 with k >= 2");
    let k = (d - 1) / 2;
    assert!(j >= 1 && j < k, "j in [1, k-1]");
    let rc = RootContext::new(d, precision_bits)?;
    let ctx = rc.ctx();
    let pi = ctx.pi();
    let step = ctx.div(&pi, &ctx.from_i64(d as i64));
    let two = ctx.from_i64(2);
    let mut sum = ctx.from_i64(0);
    for m in 1..=j {
        let angle = ctx.mul(&step, &ctx.from_i64(m as i64));
        sum = ctx.add(&sum, &ctx.ln(&ctx.mul(&two, &ctx.sin(&angle))));
    }
    let sum_f = ctx.to_f64(&sum);
    let lam = lob(std::f64::consts::PI * j as f64 / d as f64);
    Ok((sum_f + d as f64 / std::f64::consts::PI * lam).abs() / d as f64)
}

/// Residuals for every j in [1, k-1] at once, sharing the log-sine prefix
/// sums (one pass of multiprecision work per d instead of one per j).
pub fn qfact_residual_profile(d: u32, precision_bits: u32) -> Result<Vec<f64>, VolumeError> {
    assert!(d % 2 == 1 && d >= 5, "d = 2k+1 with k >= 2");
    let k = (d - 1) / 2;
    let rc = RootContext::new(d, precision_bits)?;
    let ctx = rc.ctx();
    let pi = ctx.pi();
    let step = ctx.div(&pi, &ctx.from_i64(d as i64));
    let two = ctx.from_i64(2);
    let mut out = Vec::with_capacity(k as usize - 1);
    let mut sum = ctx.from_i64(0);
    for m in 1..=(k - 1) {
        let angle = ctx.mul(&step, &ctx.from_i64(m as i64));
        sum = ctx.add(&sum, &ctx.ln(&ctx.mul(&two, &ctx.sin(&angle))));
        let lam = lob(std::f64::consts::PI * m as f64 / d as f64);
        out.push((ctx.to_f64(&sum) + d as f64 / std::f64::consts::PI * lam).abs() / d as f64);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn lobachevsky_special_points() {
        assert_eq!(lob(0.0), 0.0);
        assert!(lob(PI).abs() < 1e-12);
        assert!(lob(PI / 2.0).abs() < 1e-12);
        // Known value at pi/4 (one eighth of the octahedron volume).
        assert!((lob(PI / 4.0) - 0.45798279797).abs() < 1e-9);
    }

    #[test]
    fn series_matches_quadrature() {
        // Deterministic pseudo-random points in (0, pi).
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut rand01 = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64)
        };
        for _ in 0..100 {
            let x = 1e-3 + rand01() * (PI - 2e-3);
            let s = lob(x);
            let q = lobachevsky_quadrature(x, 1e-13);
            assert!((s - q).abs() < 1e-10, "x={x}: series {s} vs quadrature {q}");
        }
    }

    #[test]
    fn oddness_periodicity_duplication() {
        for x in [0.17, 0.6, 1.1, 1.44] {
            assert!((lob(-x) + lob(x)).abs() < 1e-12, "odd at {x}");
            assert!((lob(x + PI) - lob(x)).abs() < 1e-12, "periodic at {x}");
            let dup = 2.0 * lob(x) + 2.0 * lob(x + PI / 2.0);
            assert!((lob(2.0 * x) - dup).abs() < 1e-10, "duplication at {x}");
        }
    }

    #[test]
    fn tolerance_unreachable_is_reported() {
        let p = LobParams {
            tolerance: 1e-12,
            max_terms: 2,
        };
        assert!(matches!(
            lobachevsky(1.5, &p),
            Err(VolumeError::ToleranceUnreachable { .. })
        ));
    }

    #[test]
    fn octahedron_volume_and_target() {
        assert!((vol_oct() - 3.663862376708).abs() < 1e-9);
        assert!((vc_target(1) - 1.16624).abs() < 5e-5);
        assert!((vc_target(3) - 3.0 * vc_target(1)).abs() < 1e-12);
    }

    #[test]
    fn l_function_values() {
        assert!((l_alpha_beta(PI / 4.0, 0.0) - 2.0 * lob(PI / 4.0)).abs() < 1e-12);
        assert!(l_alpha_beta(0.0, 0.0).abs() < 1e-12);
        // Max over alpha at beta = 0 is 2 Lambda(pi/4): golden-section search.
        let f = |a: f64| lob(a) + lob(PI / 2.0 - a);
        let (mut lo, mut hi) = (0.0f64, PI / 2.0);
        let phi = (5.0f64.sqrt() - 1.0) / 2.0;
        while hi - lo > 1e-10 {
            let x1 = hi - phi * (hi - lo);
            let x2 = lo + phi * (hi - lo);
            if f(x1) < f(x2) {
                lo = x1;
            } else {
                hi = x2;
            }
        }
        let argmax = 0.5 * (lo + hi);
        assert!((argmax - PI / 4.0).abs() < 1e-7);
        assert!((f(argmax) - 2.0 * lob(PI / 4.0)).abs() < 1e-8);
    }

    #[test]
    fn binomial_log_small_cases() {
        // k = 1: both binomials are 1, so the sum is 2.
        assert!((binomial_sum_log(1, 96).unwrap() - 2.0f64.ln()).abs() < 1e-14);
        // k = 2 (d = 5): 2 + phi^4 with phi = 2 cos(pi/5) the golden ratio.
        let phi = 2.0 * (PI / 5.0).cos();
        let expect = (2.0 + phi.powi(4)).ln();
        assert!((binomial_sum_log(2, 96).unwrap() - expect).abs() < 1e-13);
    }

    #[test]
    fn residual_small_case_exact_sines() {
        // d = 11, j = 1: the residual reduces to
        // |ln(2 sin(pi/11)) + (11/pi) Lambda(pi/11)| / 11.
        let d = 11u32;
        let got = qfact_asymptotic_residual(d, 1, 96).unwrap();
        let direct = ((2.0 * (PI / 11.0).sin()).ln()
            + 11.0 / PI * lob(PI / 11.0))
        .abs()
            / 11.0;
        assert!((got - direct).abs() < 1e-12);
    }

    #[test]
    fn residual_profile_matches_single_op() {
        let d = 21u32;
        let profile = qfact_residual_profile(d, 96).unwrap();
        assert_eq!(profile.len(), ((d - 1) / 2 - 1) as usize);
        for j in [1u32, 4, 9] {
            let single = qfact_asymptotic_residual(d, j, 96).unwrap();
            assert!((profile[j as usize - 1] - single).abs() < 1e-14);
        }
    }

    #[test]
    fn vc_sequence_multiplicative_in_c() {
        let one = vc_sequence(1, 21, 96).unwrap();
        let two = vc_sequence(2, 21, 96).unwrap();
        assert_eq!(one.len(), 10); // odd d in [3, 21]
        for (a, b) in one.iter().zip(&two) {
            assert_eq!(a.d, b.d);
            let ratio = b.a_d.unwrap() / a.a_d.unwrap();
            assert!((ratio - 2.0).abs() < 1e-9, "d={}", a.d);
        }
    }
}
