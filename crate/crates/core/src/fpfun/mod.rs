//! Finitely presented functors on finite-dimensional modules, each given by a single module
//! map, with evaluation, defects, kernels, cokernels and sub-stabilization.

mod functor;
mod ops;
mod presentations;

pub use functor::{fp_defect, fp_eval, fp_from_map, Defect, FpFunctor, FpMorphism, FpValue, Variance};
pub use ops::{fp_cokernel, fp_dim, fp_kernel, fp_substab, pushout, rho};
pub use presentations::{
    present_overline_contra, present_overline_cov, present_tensor, present_tensor_substab, present_torsion_radical,
    present_underline_contra, present_underline_cov, tensor_morphism, TensorPresentation,
};
