//! Generalized kernels and images, the nonnilpotent part of an
//! endomorphism, similarity invariants and Jordan block profiles.

mod generalized;
mod jordan;
mod smith;

pub use generalized::{
    generalized_image, generalized_kernel, kernel_chain, nonnilpotent_part, InducedMap,
};
pub use jordan::{jordan_profile, EigenClass, EigenKind, JordanProfile};
pub use smith::{invariant_factors, invariant_factors_monic, is_similar};
