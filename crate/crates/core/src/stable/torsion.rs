use alloc::vec::Vec;

use super::factor::{ifactor_subspace, pfactor_subspace};
use crate::algebra::{
    direct_sum, indec_injective, indec_projective, regular_module, ModuleMap, Representation, Submodule,
};
use crate::error::{Error, Result};
use crate::homology::{eval_double_dual, extend, hom_basis, lift};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorsionMethod {
    /// Kernel of the evaluation into the double dual.
    Evaluation,
    /// Intersection of the kernels of all maps into the regular module.
    Reject,
    /// Kernel of the left projective approximation.
    Approximation,
}

/// An approximation map together with the vertices of the indecomposable summands of its
/// projective (resp. injective) end, in summand order.
#[derive(Debug, Clone)]
pub struct Approximation {
    pub map: ModuleMap,
    pub summands: Vec<usize>,
}

/// Bass torsion `𝔱(a)`: the elements killed by every map into `Λ`.
pub fn bass_torsion(a: &Representation, method: TorsionMethod) -> Result<Submodule> {
    match method {
        TorsionMethod::Evaluation => Ok(eval_double_dual(a)?.kernel()),
        TorsionMethod::Reject => {
            let lam = regular_module(a.algebra(), a.side());
            let hom = hom_basis(a, &lam)?;
            let mut out = Submodule::whole(a);
            for f in hom.basis() {
                out = out.intersection(&f.kernel())?;
            }
            Ok(out)
        }
        TorsionMethod::Approximation => Ok(build_left_approximation(a)?.map.kernel()),
    }
}

/// `𝔱⁻¹(a) = a / 𝔱(a)` with the canonical surjection.
pub fn torsionless_quotient(a: &Representation) -> Result<(Representation, ModuleMap)> {
    Ok(bass_torsion(a, TorsionMethod::Reject)?.quotient())
}

/// `𝔮⁻¹(a)`: the sum of the images of all maps from injectives.
pub fn cotorsion_trace(a: &Representation) -> Result<Submodule> {
    let mut out = Submodule::zero(a);
    for v in 0..a.dims().len() {
        let inj = indec_injective(a.algebra(), v, a.side())?;
        for g in hom_basis(&inj, a)?.basis() {
            out = out.sum(&g.image())?;
        }
    }
    Ok(out)
}

/// `𝔮(a) = a / 𝔮⁻¹(a)` with the canonical surjection.
pub fn cotorsion_quotient(a: &Representation) -> Result<(Representation, ModuleMap)> {
    Ok(cotorsion_trace(a)?.quotient())
}

fn build_left_approximation(a: &Representation) -> Result<Approximation> {
    let mut summands = Vec::new();
    let mut modules = Vec::new();
    let mut parts = Vec::new();
    for v in 0..a.dims().len() {
        let p = indec_projective(a.algebra(), v, a.side())?;
        for f in hom_basis(a, &p)?.basis() {
            summands.push(v);
            modules.push(p.clone());
            parts.push(f.clone());
        }
    }
    let sum = direct_sum(a.algebra(), a.side(), &modules)?;
    let mut map = ModuleMap::zero(a, &sum.module);
    for (f, inj) in parts.iter().zip(&sum.injections) {
        map = map.add(&inj.compose(f)?)?;
    }
    Ok(Approximation { map, summands })
}

/// `γ: a -> Q` with `Q = ⊕_v P(v)^{dim Hom(a, P(v))}`, the components running over Hom bases.
/// Verifies that every map from `a` to an indecomposable projective extends over `γ`.
pub fn left_proj_approximation(a: &Representation) -> Result<Approximation> {
    let approx = build_left_approximation(a)?;
    if !extends_projective_maps(&approx.map)? {
        return Err(Error::ExtensionFailure);
    }
    Ok(approx)
}

/// `γ: I -> a` with `I = ⊕_v I(v)^{dim Hom(I(v), a)}`. Verifies that every map from an
/// indecomposable injective lifts against `γ`.
pub fn right_inj_approximation(a: &Representation) -> Result<Approximation> {
    let mut summands = Vec::new();
    let mut modules = Vec::new();
    let mut parts = Vec::new();
    for v in 0..a.dims().len() {
        let inj = indec_injective(a.algebra(), v, a.side())?;
        for g in hom_basis(&inj, a)?.basis() {
            summands.push(v);
            modules.push(inj.clone());
            parts.push(g.clone());
        }
    }
    let sum = direct_sum(a.algebra(), a.side(), &modules)?;
    let mut map = ModuleMap::zero(&sum.module, a);
    for (g, proj) in parts.iter().zip(&sum.projections) {
        map = map.add(&g.compose(proj)?)?;
    }
    if !lifts_injective_maps(&map)? {
        return Err(Error::LiftFailure);
    }
    Ok(Approximation { map, summands })
}

fn extends_projective_maps(gamma: &ModuleMap) -> Result<bool> {
    let a = gamma.domain();
    for v in 0..a.dims().len() {
        let p = indec_projective(a.algebra(), v, a.side())?;
        for f in hom_basis(a, &p)?.basis() {
            if extend(f, gamma)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn lifts_injective_maps(gamma: &ModuleMap) -> Result<bool> {
    let a = gamma.codomain();
    for v in 0..a.dims().len() {
        let inj = indec_injective(a.algebra(), v, a.side())?;
        for g in hom_basis(&inj, a)?.basis() {
            if lift(g, gamma)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `γ: a -> X` factors through a projective and every map from `a` to a projective
/// extends over it.
pub fn is_left_proj_approximation(gamma: &ModuleMap) -> Result<bool> {
    let (hom, pf) = pfactor_subspace(gamma.domain(), gamma.codomain())?;
    let coords = hom.coordinates(gamma).ok_or_else(|| Error::InvalidMap("not a module map".into()))?;
    Ok(pf.contains_vector(&coords) && extends_projective_maps(gamma)?)
}

/// Whether `γ: X -> a` factors through an injective and every map from an injective to `a`
/// lifts against it.
pub fn is_right_inj_approximation(gamma: &ModuleMap) -> Result<bool> {
    let (hom, inf) = ifactor_subspace(gamma.domain(), gamma.codomain())?;
    let coords = hom.coordinates(gamma).ok_or_else(|| Error::InvalidMap("not a module map".into()))?;
    Ok(inf.contains_vector(&coords) && lifts_injective_maps(gamma)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{simple, Algebra, Quiver, Relation, Side};
    use crate::exactla::Field;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    fn dual_numbers() -> Algebra {
        let f = Field::prime(5).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::from_names(&q, &[(f.one(), &["x", "x"])]).unwrap();
        Algebra::build(q, alloc::vec![r], f, 10).unwrap()
    }

    const METHODS: [TorsionMethod; 3] = [TorsionMethod::Evaluation, TorsionMethod::Reject, TorsionMethod::Approximation];

    #[test]
    fn torsion_of_simples() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        for m in METHODS {
            assert!(bass_torsion(&s1, m).unwrap().is_whole());
        }
        assert!(torsionless_quotient(&s1).unwrap().0.is_zero());
        let k = simple(&dual_numbers(), 0, Side::Left).unwrap();
        for m in METHODS {
            assert!(bass_torsion(&k, m).unwrap().is_zero());
        }
    }

    #[test]
    fn approximations() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        assert!(left_proj_approximation(&s1).unwrap().map.codomain().is_zero());
        let k = simple(&dual_numbers(), 0, Side::Left).unwrap();
        let g = left_proj_approximation(&k).unwrap();
        assert_eq!(g.summands, alloc::vec![0]);
        assert!(g.map.is_injective());
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        assert!(right_inj_approximation(&s2).unwrap().map.domain().is_zero());
    }

    #[test]
    fn cotorsion() {
        let alg = a2();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        assert!(cotorsion_trace(&s2).unwrap().is_zero());
        assert_eq!(cotorsion_quotient(&s2).unwrap().0, s2);
        let i = indec_injective(&alg, 1, Side::Left).unwrap();
        assert!(cotorsion_trace(&i).unwrap().is_whole());
    }
}
