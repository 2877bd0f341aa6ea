//! Exact dense linear algebra over a prime field or the rationals.
//!
//! Matrices act on column vectors. Subspaces are kept in reduced row echelon form, so two
//! subspaces are equal exactly when their stored bases are equal.

pub(crate) mod field;
mod matrix;
mod subspace;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use subspace::Subspace;
