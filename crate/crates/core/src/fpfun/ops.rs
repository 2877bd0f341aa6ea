use alloc::format;

use super::functor::{fp_defect, fp_eval, FpFunctor, FpMorphism, Variance};
use crate::algebra::{direct_sum, indec_injective, ModuleMap, Representation};
use crate::error::{Error, Result};

/// Pushout of `p: A -> B` and `q: A -> C`, with the maps from `B` and `C`.
pub fn pushout(p: &ModuleMap, q: &ModuleMap) -> Result<(Representation, ModuleMap, ModuleMap)> {
    let a = p.domain();
    let sum = direct_sum(a.algebra(), a.side(), &[p.codomain().clone(), q.codomain().clone()])?;
    let diff = sum.injections[0].compose(p)?.sub(&sum.injections[1].compose(q)?)?;
    let (module, proj) = diff.cokernel();
    let from_b = proj.compose(&sum.injections[0])?;
    let from_c = proj.compose(&sum.injections[1])?;
    Ok((module, from_b, from_c))
}

/// Cokernel of `α: F -> G`, with the canonical morphism `G -> Coker α`.
pub fn fp_cokernel(alpha: &FpMorphism) -> Result<(FpFunctor, FpMorphism)> {
    if alpha.variance() == Variance::Contravariant {
        let (c, q) = fp_cokernel(&alpha.dual())?;
        return Ok((c.dual(), q.dual()));
    }
    // G is presented by g: X' -> Y'; the cokernel by (g, u): X' -> Y' ⊕ X
    let g = &alpha.target.presentation;
    let xp = g.domain();
    let sum = direct_sum(xp.algebra(), xp.side(), &[g.codomain().clone(), alpha.u.codomain().clone()])?;
    let h = sum.injections[0].compose(g)?.add(&sum.injections[1].compose(&alpha.u)?)?;
    let coker = FpFunctor::new(h, Variance::Covariant);
    let q = FpMorphism::new(&alpha.target, &coker, ModuleMap::identity(xp), sum.projections[0].clone())?;
    Ok((coker, q))
}

/// Kernel of `α: F -> G` with its inclusion into `F`.
///
/// For `F` presented by `f: X -> Y`, `G` by `g: X' -> Y'` and `α = (u, v)`: let
/// `D = pushout(u, g)` and `E = pushout(X -> D, f)`. The kernel is presented by `D -> E`.
pub fn fp_kernel(alpha: &FpMorphism) -> Result<(FpFunctor, FpMorphism)> {
    if alpha.variance() == Variance::Contravariant {
        let (k, i) = fp_kernel(&alpha.dual())?;
        return Ok((k.dual(), i.dual()));
    }
    let f = &alpha.source.presentation;
    let g = &alpha.target.presentation;
    let (_, x_to_d, _) = pushout(&alpha.u, g)?;
    let (_, d_to_e, y_to_e) = pushout(&x_to_d, f)?;
    let kernel = FpFunctor::new(d_to_e, Variance::Covariant);
    let incl = FpMorphism::new(&kernel, &alpha.source, x_to_d, y_to_e)?;
    Ok((kernel, incl))
}

/// `ρ_F: F -> (w(F), −)`, induced by the inclusion of the defect. Checks that it evaluates to
/// an isomorphism at every indecomposable injective.
pub fn rho(functor: &FpFunctor) -> Result<FpMorphism> {
    if functor.variance != Variance::Covariant {
        return Err(Error::VarianceMismatch);
    }
    let w = fp_defect(functor)?;
    let zero = Representation::zero(w.module.algebra(), w.module.side());
    let target = FpFunctor::new(ModuleMap::zero(&w.module, &zero), Variance::Covariant);
    let rho = FpMorphism::new(functor, &target, w.map.clone(), ModuleMap::zero(&zero, functor.y()))?;
    let x = functor.x();
    for v in 0..x.dims().len() {
        let inj = indec_injective(x.algebra(), v, x.side())?;
        let (src, dst, m) = rho.evaluate_at(&inj)?;
        if src.dim() != dst.dim() || m.rank() != src.dim() {
            return Err(Error::NotDerivedIso(format!("ρ_F at I({v}) is not invertible")));
        }
    }
    Ok(rho)
}

/// The sub-stabilization `F̄ = ker(ρ_F)`.
pub fn fp_substab(functor: &FpFunctor) -> Result<(FpFunctor, FpMorphism)> {
    fp_kernel(&rho(functor)?)
}

/// Dimension of `F(b)`, convenience for tests and reports.
pub fn fp_dim(functor: &FpFunctor, b: &Representation) -> Result<usize> {
    Ok(fp_eval(functor, b)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_projective, simple, Algebra, Quiver, Side};
    use crate::exactla::Field;
    use crate::homology::projective_cover;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    fn probes(alg: &Algebra) -> alloc::vec::Vec<Representation> {
        let mut out = alloc::vec::Vec::new();
        for v in 0..2 {
            out.push(simple(alg, v, Side::Left).unwrap());
            out.push(indec_projective(alg, v, Side::Left).unwrap());
            out.push(indec_injective(alg, v, Side::Left).unwrap());
        }
        out
    }

    #[test]
    fn cokernel_of_identity_is_zero() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let c = projective_cover(&s1).unwrap();
        for var in [Variance::Covariant, Variance::Contravariant] {
            let f = FpFunctor::new(c.surjection.clone(), var);
            let (coker, _) = fp_cokernel(&FpMorphism::identity(&f)).unwrap();
            for b in probes(&alg) {
                assert_eq!(fp_dim(&coker, &b).unwrap(), 0);
            }
        }
    }

    #[test]
    fn kernel_of_zero_is_source() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let c = projective_cover(&s1).unwrap();
        for var in [Variance::Covariant, Variance::Contravariant] {
            let f = FpFunctor::new(c.surjection.clone(), var);
            let g = FpFunctor::new(c.inclusion.clone(), var);
            let (k, _) = fp_kernel(&FpMorphism::zero(&f, &g).unwrap()).unwrap();
            for b in probes(&alg) {
                assert_eq!(fp_dim(&k, &b).unwrap(), fp_dim(&f, &b).unwrap());
            }
        }
    }

    #[test]
    fn substab_of_representable_vanishes() {
        let alg = a2();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        let zero = Representation::zero(&alg, Side::Left);
        let rep = FpFunctor::new(ModuleMap::zero(&p1, &zero), Variance::Covariant);
        let (sub, _) = fp_substab(&rep).unwrap();
        for b in probes(&alg) {
            assert_eq!(fp_dim(&sub, &b).unwrap(), 0);
        }
    }
}
