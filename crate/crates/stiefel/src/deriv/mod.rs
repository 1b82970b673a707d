//! Derivation spaces, g-homomorphism spaces and non-derivation witnesses.

pub mod centralizer;
pub mod endo;
pub mod ops;
pub mod witness;

pub use centralizer::{centralizer_of_g0, centralizer_preserves_blocks, g0_block_preservation};
pub use endo::EndoSubspace;
pub use ops::{
    ad_span, derivations, filter_b_derivations, hom_g, is_derivation, right_mult_matrix,
    right_mult_recognize, right_mult_span, skew_constraint_rm_span, AdSpan,
};
pub use witness::{all_p_ads_outside, witness_non_derivation, Witness};
