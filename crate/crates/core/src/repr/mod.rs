//! Irreducible sp(2g)-representations `V_{iω₁+ω_j}`, their dimensions,
//! decomposition rules and torus characters.

pub mod character;
pub mod decompose;
pub mod dims;
pub mod label;
pub mod weight;

pub use character::{Character, CharacterEngine};
pub use decompose::{
    branching_hook, ext_power_decomp, ext_sym_decomp, sym_power_decomp, tensor_std_sym_decomp,
};
pub use dims::{binomial, binomial_signed, dim_irrep, label_dim, sl_hook_dim, weyl_dim};
pub use label::{RepLabel, RepTerm, VirtualRep};
pub use weight::WeightVector;
