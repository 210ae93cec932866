//! The quantum-algebra layer: quantum integers, factorials and binomials,
//! admissibility, Delta squares, reduced tetrahedral sums, 6j-symbols,
//! region weights and the level constants W and S.

mod factored;
mod half;
mod qnum;
mod sixj;

pub use factored::{assemble_sum, FactoredEval, FactoredQ, RootContext};
pub use half::{is_admissible, is_r_admissible, AdmissibleTriple, HalfInt};
pub use qnum::{qbinom, qfact, qint, qint_pow, s_const, w_const};
pub use sixj::{
    delta_squared, reduced_tet_sum, region_weight, sixj_numeric, sixj_symmetric,
    six_tuple_triples,
};

pub(crate) use sixj::{delta_squared_factored, region_weight_factored, tet_z_terms};

use crate::qring::QringError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QalgError {
    #[error("triple ({0}, {1}, {2}) is not admissible")]
    NotAdmissible(HalfInt, HalfInt, HalfInt),
    #[error("triple ({0}, {1}, {2}) is not {3}-admissible")]
    NotRAdmissible(HalfInt, HalfInt, HalfInt, u32),
    #[error("quantum binomial [{l} choose {s}] out of range")]
    BinomialRange { l: u64, s: u64 },
    #[error("symbolic expansion too large (cost {0}); use the numeric route")]
    SymbolicTooLarge(u64),
    #[error("degenerate Delta^2 evaluation: {0}")]
    DegenerateDelta(String),
    #[error(transparent)]
    Qring(#[from] QringError),
}
