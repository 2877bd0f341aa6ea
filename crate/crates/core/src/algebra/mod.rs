//! Bound quiver algebras and their finite-dimensional representations.

mod bound;
pub mod construct;
mod module;
mod quiver;

pub use bound::Algebra;
pub use module::{ModuleMap, Representation, Submodule};
pub use quiver::{Arrow, Quiver, Relation, Side};
pub use construct::{
    direct_sum, direct_sum_map, indec_injective, indec_projective, radical, regular_module, simple, socle, top,
    vector_dual, vector_dual_map, DirectSum,
};
