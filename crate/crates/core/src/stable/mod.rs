//! Stable Hom, Bass torsion, the cotorsion coradical, approximations, finite-presentation
//! certificates and the sub-stabilized tensor product.

mod certificate;
mod factor;
mod substab;
mod torsion;

pub use certificate::{fp_certificate, Certificate, CertificateKind};
pub use factor::{ifactor_subspace, pfactor_subspace, stable_hom, Flavor, StableHom};
pub use substab::{hereditary_split, tensor_substab, torsion_radical, HereditarySplit, TensorSubstab};
pub use torsion::{
    bass_torsion, cotorsion_quotient, cotorsion_trace, is_left_proj_approximation, is_right_inj_approximation,
    left_proj_approximation, right_inj_approximation, torsionless_quotient, Approximation, TorsionMethod,
};
