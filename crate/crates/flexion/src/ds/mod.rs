//! Noncommutative polynomials, the double shuffle space and the dictionary
//! to polynomial moulds.

pub mod basis;
pub mod closure;
pub mod cpoly;
pub mod dictionary;
pub mod lie;
pub mod magnus;
pub mod ncpoly;
pub mod ypoly;

pub use basis::{ds_basis, ds_membership, is_in_ds, DsMembership};
pub use closure::check_racinet_closure;
pub use cpoly::{c_generator, from_c_basis, to_c_basis, CPoly};
pub use dictionary::{
    check_ma_homomorphism, check_transcription, correction_mould, ma, ma_c, ma_inverse, mi, transcription,
    truncate_weight,
};
pub use lie::{
    check_derivation_identity, derivation, is_lie, is_lie_lyndon, lie_basis, lie_bracket, lyndon_words, poisson,
    shuffle_relations_check,
};
pub use magnus::{adjudicate_odot, check_group_isomorphism, exp_odot, mt_group_mul, prelie_odot, OdotConvention};
pub use ncpoly::{NcPoly, Word};
pub use ypoly::{f_star, stuffle_relations_check, YPoly};
