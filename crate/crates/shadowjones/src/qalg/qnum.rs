//! Quantum integers, factorials and binomials, and the level constants
//! W and S.

use crate::qring::{GaussRat, LaurentPoly, RationalFunc};

use super::QalgError;

/// The quantum integer `[n]` = (t^(n/2) - t^(-n/2)) / (t^(1/2) - t^(-1/2)),
/// expanded as t^((n-1)/2) + t^((n-3)/2) + ... + t^(-(n-1)/2).
/// In u-units the exponents are 4(n-1), 4(n-3), ..., -4(n-1). `[0]` = 0.
pub fn qint(n: u64) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for j in 0..n {
        p.add_term(4 * (n as i64 - 1 - 2 * j as i64), GaussRat::one());
    }
    p
}

/// `[n]! = [1][2]...[n]`, with `[0]! = [1]! = 1`.
pub fn qfact(n: u64) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for i in 2..=n {
        acc = &acc * &qint(i);
    }
    acc
}

/// Quantum binomial `[l choose s] = [l]!/([s]![l-s]!)`. The result is
/// always a Laurent polynomial; it is computed by exact division so the
/// polynomiality is checked rather than assumed.
pub fn qbinom(l: u64, s: u64) -> Result<RationalFunc, QalgError> {
    if s > l {
        return Err(QalgError::BinomialRange { l, s });
    }
    let s = s.max(l - s); // cancel the larger factorial
    let mut num = LaurentPoly::one();
    for m in (s + 1)..=l {
        num = &num * &qint(m);
    }
    let den = qfact(l - s);
    let q = num
        .exact_div(&den)
        .expect("quantum binomial is a Laurent polynomial");
    Ok(RationalFunc::from_poly(q))
}

/// `[n]^e` as a canonical rational function (negative e gives a denominator).
pub fn qint_pow(n: u64, e: i64) -> Result<RationalFunc, QalgError> {
    let mut t = super::factored::FactoredQ::one();
    t.mul_bracket(n, e);
    t.to_ratfunc()
}

/// W = sum over colors i in {0, 1/2, ..., (r-2)/2} of (w_i)^2 where
/// w_i = (-1)^(2i) `[2i+1]`; the signs square away, leaving sum of `[n]`^2 for
/// n = 1..r-1.
pub fn w_const(r: u32) -> LaurentPoly {
    assert!(r >= 3, "level r must be at least 3");
    let mut acc = LaurentPoly::zero();
    for n in 1..=(r as u64 - 1) {
        let b = qint(n);
        acc = &acc + &(&b * &b);
    }
    acc
}

/// S = W^(-1) * sum_i (w_i)^2 t^(-i(i+1)) (sqrt(-1))^(4i); with i = a/2 the
/// term is `[a+1]`^2 u^(-2a(a+2)) (-1)^a.
pub fn s_const(r: u32) -> RationalFunc {
    assert!(r >= 3, "level r must be at least 3");
    let mut num = LaurentPoly::zero();
    for a in 0..=(r as i64 - 2) {
        let b = qint((a + 1) as u64);
        let mut term = &b * &b;
        let sign = if a % 2 == 0 {
            GaussRat::one()
        } else {
            GaussRat::from_int(-1)
        };
        term.mul_monomial(-2 * a * (a + 2), &sign);
        num = &num + &term;
    }
    RationalFunc::new(num, w_const(r)).expect("W nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{eval_at_root, NumCtx};

    fn u(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(e, GaussRat::one())
    }

    #[test]
    fn qint_small_values() {
        assert!(qint(0).is_zero());
        assert!(qint(1).is_one());
        // [2] = t^(1/2) + t^(-1/2) = u^4 + u^-4, from the defining quotient:
        // (t - t^-1) / (t^(1/2) - t^(-1/2)) expanded symbolically.
        let defining = (&u(8) - &u(-8))
            .exact_div(&(&u(4) - &u(-4)))
            .unwrap();
        assert_eq!(qint(2), defining);
        assert_eq!(qint(2), &u(4) + &u(-4));
    }

    #[test]
    fn qfact_base_cases() {
        assert!(qfact(0).is_one());
        assert!(qfact(1).is_one());
        assert_eq!(qfact(2), qint(2));
    }

    #[test]
    fn qfact4_matches_bruteforce_product() {
        // Independent convolution oracle: multiply term lists directly.
        let mut oracle = LaurentPoly::one();
        for i in [2u64, 3, 4] {
            let b = qint(i);
            let mut next = LaurentPoly::zero();
            for (e1, c1) in oracle.terms() {
                for (e2, c2) in b.terms() {
                    next.add_term(e1 + e2, c1 * c2);
                }
            }
            oracle = next;
        }
        assert_eq!(qfact(4), oracle);
    }

    #[test]
    fn qbinom_values() {
        assert!(qbinom(5, 0).unwrap().is_one());
        assert_eq!(
            qbinom(2, 1).unwrap(),
            RationalFunc::from_poly(qint(2))
        );
        // [4 choose 2] by exact division oracle: [4]!/([2]!^2).
        let expect = qfact(4)
            .exact_div(&(&qfact(2) * &qfact(2)))
            .expect("divides exactly");
        assert_eq!(qbinom(4, 2).unwrap(), RationalFunc::from_poly(expect));
        assert!(qbinom(2, 3).is_err());
    }

    #[test]
    fn w_small_level() {
        // r = 3: W = w_0^2 + w_(1/2)^2 = 1 + [2]^2.
        let expect = &LaurentPoly::one() + &(&qint(2) * &qint(2));
        assert_eq!(w_const(3), expect);
    }

    #[test]
    fn s_times_w_small_level() {
        // r = 3: S*W = 1 + [2]^2 t^(-3/4) i^2.
        let sw = &s_const(3) * &RationalFunc::from_poly(w_const(3));
        let mut term = &qint(2) * &qint(2);
        term.mul_monomial(-6, &GaussRat::from_int(-1));
        let expect = RationalFunc::from_poly(&LaurentPoly::one() + &term);
        assert_eq!(sw, expect);
    }

    #[test]
    fn w_positive_at_roots() {
        let ctx = NumCtx::new(96).unwrap();
        for r in 3..=20 {
            let v = eval_at_root(&RationalFunc::from_poly(w_const(r)), r, &ctx)
                .unwrap()
                .unwrap_value();
            assert!(
                v.real_f64(&ctx) > 0.0 && v.phase_f64(&ctx).abs() < 1e-20,
                "W at r={r} should be a positive real"
            );
        }
    }
}
