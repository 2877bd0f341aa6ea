//! Fixture algebras and seeded random modules, maps and functor morphisms.

mod fixtures;
mod random;

pub use fixtures::Fixture;
pub use random::{draw_module, random_fp_morphism, random_hom, random_matrix, random_module, random_scalar, Draw};
