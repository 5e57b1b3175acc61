//! Symmetric functions in the power-sum basis, Schur functions through hook
//! determinants, multigraph enumeration and the bosonic form of the 1D partition function.

mod bosonic;
mod graphs;
mod schur;
mod symfunc;

pub use bosonic::{substitute_couplings, verify_bosonic_Z};
pub use graphs::{graph_classes, graph_sum_formula, graph_sum_oracle, GraphClass};
pub use schur::{e_in_p, h_in_p, schur, schur_hook};
pub use symfunc::SymFunc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("degree {needed} exceeds the cap {cap}")]
    CapExceeded { needed: u32, cap: u32 },
    #[error("profile with {0} vertices is beyond the enumeration limit")]
    TooManyVertices(usize),
}
