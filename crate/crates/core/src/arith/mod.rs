//! Exact integer/rational arithmetic layer: univariate polynomials,
//! resultants, factorization over the rationals, certified complex root
//! isolation and power-sum traces.

pub mod dyadic;
pub mod factor;
pub mod linalg;
pub mod poly;
pub mod roots;
pub mod traces;

pub use factor::factor_over_rationals;
pub use poly::{IntPoly, RatPoly};
pub use roots::{isolate_roots, ComplexBox};
pub use traces::power_traces;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision integer used throughout.
pub type Int = BigInt;
/// Exact rational used throughout.
pub type Rat = BigRational;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, thiserror::Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be squarefree")]
    NotSquarefree,
    #[error("degree {0} exceeds the supported cap {1}")]
    DegreeCap(usize, usize),
    #[error("root isolation failed to certify at maximum precision")]
    IsolationFailed,
}
