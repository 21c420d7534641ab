//! Shuffle/stuffle combinatorics and symmetry predicates.

mod classify;
mod relations;
mod unit;
mod words;

pub use classify::{classify, invariance_checks, Membership};
pub use relations::{
    alternility_sum, e_alternality_sum, is_alternal, is_alternal_up_to_constant, is_alternil, is_symmetral,
    shuffle_sum, solve_constant_correction, Defect, Relation, StuffleSum, SymmetryDefect,
};
pub use unit::{ez_mould, pic, FlexionUnit};
pub use words::{shuffle_set, stuffle_set, Slot, StuffleWord};
