//! Exact scalars and the small combinatorial toolkit shared by every other crate.

mod combinat;
mod partition;
mod rational;
mod verdict;

pub use combinat::{bernoulli, binomial, double_factorial, factorial};
pub use partition::{partitions_of, Partition};
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use verdict::Verdict;

pub use num_bigint::BigInt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("Bernoulli number requested at odd index {0}")]
    OddBernoulli(u32),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("invalid Frobenius coordinates: {0}")]
    Frobenius(String),
}
