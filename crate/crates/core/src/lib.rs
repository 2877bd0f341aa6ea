//! Stable module theory over finite-dimensional bound quiver algebras, in exact arithmetic.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is built from representations of
//! bound quivers over a prime field or the rationals:
//!
//! * [`exactla`]: echelon forms, kernels, subspaces.
//! * [`algebra`]: bound quiver algebras, their opposites, representations and module maps.
//! * [`homology`]: Hom spaces, projective covers, injective envelopes, Ext¹, tensor products,
//!   the star dual and the Auslander transpose.
//! * [`stable`]: stable Hom, Bass torsion, cotorsion, approximations and finite-presentation
//!   certificates.
//! * [`fpfun`]: finitely presented functors given by a single module map.
#![no_std]

extern crate alloc;

macro_rules! arith {
    ($field:expr, $ar:ident => $body:expr) => {
        match $field {
            $crate::exactla::Field::Prime(p) => {
                let $ar = &$crate::exactla::field::Zp { p: *p };
                $body
            }
            $crate::exactla::Field::Rational => {
                let $ar = &$crate::exactla::field::Qq;
                $body
            }
        }
    };
}

pub mod error;
pub mod exactla;
pub mod algebra;
pub mod homology;
pub mod stable;
pub mod fpfun;
pub mod catalog;

pub use error::{Error, Result};
