//! Hom spaces, covers and envelopes, Ext¹, tensor products, the star dual and the transpose.

mod dual;
mod hom;
mod resolution;
mod tensor;

pub use dual::{
    eval_double_dual, projective_multiplicity, star_dual, star_dual_map, star_dual_map_with, transpose, StarDual,
    Transpose,
};
pub use hom::{extend, hom_basis, lift, HomSpace};
pub use resolution::{
    cosyzygy, ext1, injective_envelope, is_injective, is_projective, map_from_projective, projective_cover, syzygy, top_multiplicities, Ext1,
    ShortExactSequence,
};
pub use tensor::{tensor, tensor_map, tensor_map_left, tensor_map_right, TensorProduct};
