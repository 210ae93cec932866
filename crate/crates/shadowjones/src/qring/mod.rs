//! Exact Laurent-polynomial and rational-function arithmetic over the
//! Gaussian rationals in `u = t^(1/8)`, plus numeric evaluation on the unit
//! circle.
//!
//! Working in eighth powers of `t` keeps every individual region weight on
//! an integer exponent; assembled invariants are asserted (not assumed) to
//! land back on the `t^(1/4)` lattice.

mod eval;
mod gauss;
mod laurent;
mod ratfunc;

pub use eval::{
    eval_at_root, eval_gauss, eval_poly_at_root, EvalOutcome, NumCtx, UnitEval,
    DEFAULT_PRECISION, MIN_PRECISION,
};
pub use gauss::{GaussRat, Rat};
pub use laurent::{laurent_arith, LaurentOp, LaurentPoly};
pub use ratfunc::{laurent_gcd, RationalFunc};

/// Errors from the coefficient-ring layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QringError {
    #[error("zero denominator in rational function")]
    ZeroDenominator,
    #[error("numerator and denominator both vanish at the evaluation point (canonical form violated)")]
    IndeterminateEval,
    #[error("precision {0} too low: at least 53 bits required")]
    BadPrecision(u32),
    #[error("value not quarter-graded: odd u-exponent {0}")]
    NotQuarterGraded(i64),
}
