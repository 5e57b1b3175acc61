//! The 1D gravity partition function at unit coupling: closed-form expansion, free
//! energy, differential constraints and the cut-and-join representation.

mod cutjoin;
mod diffop;
mod virasoro;
mod zpart;

pub use cutjoin::{cut_and_join_operator, cut_and_join_Z};
pub use diffop::{DiffOp, DiffTerm};
pub use virasoro::{
    apply_virasoro, commutator_check, flow_check, polymer_check, virasoro_check, Family,
    VirasoroOp,
};
pub use zpart::{free_energy, genus_of, partition_function, selection_rule_check};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GravityError {
    #[error("Virasoro index {0} is below -1")]
    BadIndex(i32),
}
