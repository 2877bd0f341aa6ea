use alloc::format;

use super::functor::{fp_defect, FpFunctor, FpMorphism, Variance};
use super::ops::fp_kernel;
use crate::algebra::{regular_module, ModuleMap, Representation, Side};
use crate::error::{Error, Result};
use crate::homology::{
    injective_envelope, lift, projective_cover, star_dual, star_dual_map_with, ShortExactSequence,
};
use crate::stable::{fp_certificate, CertificateKind};

/// `(overline a, −)`, presented by the injective envelope `a -> I`.
pub fn present_overline_cov(a: &Representation) -> Result<FpFunctor> {
    Ok(FpFunctor::new(injective_envelope(a)?.inclusion, Variance::Covariant))
}

/// `(underline −, a)`, presented by the projective cover `P -> a`.
pub fn present_underline_contra(a: &Representation) -> Result<FpFunctor> {
    Ok(FpFunctor::new(projective_cover(a)?.surjection, Variance::Contravariant))
}

/// `(underline a, −)`, presented by the left projective approximation `a -> Q`.
pub fn present_underline_cov(a: &Representation) -> Result<FpFunctor> {
    let cert = fp_certificate(a, CertificateKind::CovariantUnderline)?;
    Ok(FpFunctor::new(cert.approximation.map, Variance::Covariant))
}

/// `(overline −, a)`, presented by the right injective approximation `I -> a`.
pub fn present_overline_contra(a: &Representation) -> Result<FpFunctor> {
    let cert = fp_certificate(a, CertificateKind::ContravariantOverline)?;
    Ok(FpFunctor::new(cert.approximation.map, Variance::Contravariant))
}

/// The functor `a ⊗ −` (or `− ⊗ a` for a left module `a`) with the minimal presentation it
/// was built from.
#[derive(Debug, Clone)]
pub struct TensorPresentation {
    pub functor: FpFunctor,
    /// `P0 -> a`.
    pub cover: ShortExactSequence,
    /// `P1 -> Ωa`.
    pub syzygy_cover: ShortExactSequence,
    /// `f: P1 -> P0`.
    pub presentation: ModuleMap,
}

/// `a ⊗ −` presented by `f*: P0* -> P1*` for the minimal presentation `P1 -f-> P0 -> a`.
/// Checks that the defect is `a*` in dimension.
pub fn present_tensor(a: &Representation) -> Result<TensorPresentation> {
    let cover = projective_cover(a)?;
    let syzygy_cover = projective_cover(&cover.left)?;
    let f = cover.inclusion.compose(&syzygy_cover.surjection)?;
    let p0 = star_dual(&cover.middle)?;
    let p1 = star_dual(&syzygy_cover.middle)?;
    let f_star = star_dual_map_with(&f, &p0, &p1);
    let functor = FpFunctor::new(f_star, Variance::Covariant);
    let w = fp_defect(&functor)?.module.total_dim();
    let a_star = star_dual(a)?.module.total_dim();
    if w != a_star {
        return Err(Error::NotExact(format!("defect of the tensor functor has dimension {w}, a* has {a_star}")));
    }
    Ok(TensorPresentation { functor, cover, syzygy_cover, presentation: f })
}

/// `a ⊗̄ −`, presented by the inclusion `Im f* -> P1*` (the image is `Ω Tr a`).
pub fn present_tensor_substab(a: &Representation) -> Result<FpFunctor> {
    let t = present_tensor(a)?;
    let (_, incl) = t.functor.presentation.image().to_module();
    Ok(FpFunctor::new(incl, Variance::Covariant))
}

/// The morphism `(a ⊗ −) -> (b ⊗ −)` induced by `h: a -> b`, obtained by lifting `h` to the
/// minimal presentations and dualizing.
pub fn tensor_morphism(h: &ModuleMap, src: &TensorPresentation, dst: &TensorPresentation) -> Result<FpMorphism> {
    let lift_err = || Error::LiftFailure;
    // g0: P0 -> Q0 with π_Q∘g0 = h∘π_P
    let g0 = lift(&h.compose(&src.cover.surjection)?, &dst.cover.surjection)?.ok_or_else(lift_err)?;
    // g1: P1 -> Q1 with f_Q∘g1 = g0∘f_P; g0∘f_P lands in the syzygy of b
    let into_syzygy = g0.compose(&src.presentation)?.corestrict(&dst.cover.surjection.kernel())?;
    let g1 = lift(&into_syzygy, &dst.syzygy_cover.surjection)?.ok_or_else(lift_err)?;
    let p0 = star_dual(&src.cover.middle)?;
    let p1 = star_dual(&src.syzygy_cover.middle)?;
    let q0 = star_dual(&dst.cover.middle)?;
    let q1 = star_dual(&dst.syzygy_cover.middle)?;
    let u = star_dual_map_with(&g0, &q0, &p0);
    let v = star_dual_map_with(&g1, &q1, &p1);
    FpMorphism::new(&src.functor, &dst.functor, u, v)
}

/// The torsion radical `𝔰 = ker((− ⊗ Λ) -> (− ⊗ I))` as a functor of right modules, for the
/// injective envelope `Λ -> I` of the regular left module.
pub fn present_torsion_radical(algebra: &crate::algebra::Algebra) -> Result<FpFunctor> {
    let lam = regular_module(algebra, Side::Left);
    let env = injective_envelope(&lam)?;
    let src = present_tensor(&lam)?;
    let dst = present_tensor(&env.middle)?;
    let alpha = tensor_morphism(&env.inclusion, &src, &dst)?;
    Ok(fp_kernel(&alpha)?.0)
}
