//! Orbifold Euler characteristics of the moduli spaces `Mbar_{g,n}` from the
//! n-point functions of topological 1D gravity.

mod chi;
mod hz;
mod params;
mod specialize;
mod table;

pub use chi::{chi_series, chi_series_with, chi_table, fat_genus_needed, npoint_inputs, table_from_series, Backend};
pub use hz::{chi_open, tilde_V, v_series};
pub use params::{index_weight, SpecializationParams};
pub use specialize::{orbit_denominator, specialize, NPointWindow};
pub use table::{golden_table, ChiTable, Mismatch};

use kp_npoint::NPointError;
use series_algebra::SeriesError;

#[derive(Debug, thiserror::Error)]
pub enum EulerError {
    #[error("(g, n) = ({g}, {n}) is unstable")]
    Unstable { g: u32, n: u32 },
    #[error("window g <= {g_max}, n <= {n_max} has no stable pair")]
    EmptyWindow { g_max: u32, n_max: u32 },
    #[error("(g, n) = ({g}, {n}) lies outside the computed window")]
    OutsideWindow { g: u32, n: u32 },
    #[error("no {0}-point input supplied")]
    MissingArity(usize),
    #[error("two {0}-point inputs supplied")]
    DuplicateArity(usize),
    #[error("{n}-point input complete to order {have}, need {need}")]
    Incomplete { n: usize, have: u32, need: u32 },
    #[error("unknown backend {0:?}")]
    UnknownBackend(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error("thread pool: {0}")]
    Threads(String),
    #[error(transparent)]
    Exact(#[from] exact_core::ExactError),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    NPoint(#[from] NPointError),
}

/// Sizes the global thread pool from `MODULI_EULER_THREADS` when set; returns the pool size.
pub fn configure_threads() -> Result<usize, EulerError> {
    if let Ok(v) = std::env::var("MODULI_EULER_THREADS") {
        let threads: usize = v.trim().parse().map_err(|_| EulerError::Parse(v.clone()))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| EulerError::Threads(e.to_string()))?;
    }
    Ok(rayon::current_num_threads())
}
