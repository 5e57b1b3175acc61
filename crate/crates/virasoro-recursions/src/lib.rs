//! Recursions for 1D gravity correlators: the thin quadratic recursion and the
//! Eynard-Orantin recursion on the semicircle curve.

mod checks;
mod fat;
mod rational_fn;
mod series1;
mod thin;

pub use checks::{
    cross_pipeline_check, fat_total_check, thin_genus, thin_total_check, FatBackend, ThinBackend,
};
pub use fat::{fat_W, fat_W01_expansion, fat_min_order, fat_omega, FatCorrelator, PoleKey};
pub use rational_fn::{Poly, RationalFn};
pub use series1::{inverse_uniformizer, Series1};
pub use thin::{thin_W, ThinCoefficients, ThinCorrelator};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecursionError {
    #[error("W_({g},{n}) is not homogeneous of the expected degree")]
    Inhomogeneous { g: i32, n: usize },
    #[error("pole at an unexpected point in ({g},{n})")]
    UnexpectedPole { g: i32, n: usize },
    #[error("({g},{n}) is not produced by the recursion")]
    Unstable { g: i32, n: usize },
    #[error("correlator ({g},{n}) is not symmetric")]
    NotSymmetric { g: i32, n: usize },
    #[error(transparent)]
    Series(#[from] series_algebra::SeriesError),
    #[error(transparent)]
    NPoint(#[from] kp_npoint::NPointError),
}
