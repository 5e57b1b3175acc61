//! Truncated exact series: graded polynomials in the couplings `t_a`, two-variable
//! series in `(y, z)`, symmetric n-point coefficient tables and finite Laurent
//! polynomials used as scratch space by the n-point engines.

mod biseries;
mod graded;
mod laurent;
mod npoint;

pub use biseries::{bi_coeff, bi_mul, BiSeries};
pub use graded::{poly_exp, poly_log, poly_mul, GradedPoly, Monomial};
pub use laurent::MultiLaurent;
pub use npoint::NPointSeries;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("truncation degrees differ: {0} vs {1}")]
    MismatchedDegree(u32, u32),
    #[error("series windows are incompatible")]
    MismatchedWindow,
    #[error("constant term must be {expected} for {op}")]
    ConstantTerm { op: &'static str, expected: &'static str },
    #[error("z-exponent {z} exceeds the ceiling {ceiling}")]
    Overflow { z: i32, ceiling: i32 },
    #[error("coefficient y^{y} z^{z} lies outside the guaranteed window")]
    OutsideWindow { y: u32, z: i32 },
    #[error("n-point series need arity at least 1")]
    ZeroArity,
    #[error("invalid exponent key {0:?}")]
    InvalidKey(Vec<u32>),
    #[error("division by (z{0} - z{1}) leaves a remainder")]
    InexactDivision(usize, usize),
    #[error("cannot parse {0}")]
    Parse(String),
}
