//! The KP side of 1D gravity: affine coordinates, connected n-point functions from the
//! cycle formula, the assembly map back to the free energy and Kac-Schwarz checks.

mod affine;
mod assemble;
mod cumulant;
mod cycles;
pub mod golden;
mod ks;

pub use affine::{a_hat, AffineCoords};
pub use assemble::{assemble_F, AffineBackend, CycleBackend, NPointBackend};
pub use cumulant::{cumulant_npoint, CumulantEngine};
pub use cycles::{connected_npoint, cycle_sum, default_internal_order, CycleOptions};
pub use ks::{ks_apply, ks_verify, KSOperator, LaurentVector};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NPointError {
    #[error("n-point functions need n >= 1")]
    ZeroArity,
    #[error("order {order} is too small for n = {n}")]
    WindowTooSmall { n: usize, order: u32 },
    #[error("internal order {0} must be positive")]
    BadInternalOrder(u32),
    #[error("monomial with exponents {0:?} survives although it must cancel")]
    Surviving(Vec<i32>),
    #[error("result is not symmetric at exponents {0:?}")]
    NotSymmetric(Vec<i32>),
    #[error("the {0} backend cannot serve this request")]
    Unsupported(&'static str),
    #[error("backend failure: {0}")]
    Backend(String),
    #[error(transparent)]
    Series(#[from] series_algebra::SeriesError),
}
