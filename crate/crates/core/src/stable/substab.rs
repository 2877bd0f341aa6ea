use alloc::format;

use super::factor::{stable_hom, Flavor};
use super::torsion::{bass_torsion, cotorsion_trace, TorsionMethod};
use crate::algebra::{direct_sum, regular_module, ModuleMap, Representation, Side, Submodule};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::homology::{
    extend, hom_basis, injective_envelope, is_injective, is_projective, lift, tensor, tensor_map, ShortExactSequence,
    TensorProduct,
};

/// `a ⊗̄ b = ker(a ⊗ b -> a ⊗ I_b)` along the injective envelope of `b`.
#[derive(Debug, Clone)]
pub struct TensorSubstab {
    pub tensor: TensorProduct,
    pub envelope: ShortExactSequence,
    /// Kernel inside `a ⊗ b`, in its quotient coordinates.
    pub kernel: Subspace,
}

impl TensorSubstab {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }
}

pub fn tensor_substab(a: &Representation, b: &Representation) -> Result<TensorSubstab> {
    let t = tensor(a, b)?;
    let envelope = injective_envelope(b)?;
    let ti = tensor(a, &envelope.middle)?;
    let m = tensor_map(&t, &ti, &ModuleMap::identity(a), &envelope.inclusion)?;
    Ok(TensorSubstab { tensor: t, envelope, kernel: m.kernel_basis() })
}

/// The torsion radical `𝔰(a) = a ⊗̄ Λ` of a right module.
pub fn torsion_radical(a: &Representation) -> Result<TensorSubstab> {
    if a.side() != Side::Right {
        return Err(Error::SideMismatch("the torsion radical takes a right module".into()));
    }
    tensor_substab(a, &regular_module(a.algebra(), Side::Left))
}

/// Splittings `a ≅ 𝔱(a) ⊕ 𝔱⁻¹(a)` and `a ≅ 𝔮(a) ⊕ 𝔮⁻¹(a)` over a hereditary algebra.
#[derive(Debug, Clone)]
pub struct HereditarySplit {
    pub torsion: Submodule,
    /// Section `𝔱⁻¹(a) -> a` of the canonical surjection.
    pub torsionless_section: ModuleMap,
    pub trace: Submodule,
    /// Retraction `a -> 𝔮⁻¹(a)` of the inclusion.
    pub trace_retraction: ModuleMap,
    /// Number of probe modules checked against the stable Hom identities.
    pub probes_checked: usize,
}

pub fn hereditary_split(a: &Representation, probes: &[Representation]) -> Result<HereditarySplit> {
    if !a.algebra().is_hereditary() {
        return Err(Error::NotHereditary);
    }
    let torsion = bass_torsion(a, TorsionMethod::Reject)?;
    let (tmod, tincl) = torsion.to_module();
    let (tinv, q) = torsion.quotient();
    if !is_projective(&tinv)? {
        return Err(Error::SplitFailure("𝔱⁻¹(a) is not projective".into()));
    }
    let section = lift(&ModuleMap::identity(&tinv), &q)?
        .ok_or_else(|| Error::SplitFailure("no section of a -> 𝔱⁻¹(a)".into()))?;
    let sum = direct_sum(a.algebra(), a.side(), &[tmod.clone(), tinv.clone()])?;
    let iso = tincl.compose(&sum.projections[0])?.add(&section.compose(&sum.projections[1])?)?;
    if !iso.is_isomorphism() {
        return Err(Error::SplitFailure("𝔱(a) ⊕ 𝔱⁻¹(a) -> a is not an isomorphism".into()));
    }

    let trace = cotorsion_trace(a)?;
    let (trmod, trincl) = trace.to_module();
    let (cot, p) = trace.quotient();
    if !is_injective(&trmod)? {
        return Err(Error::SplitFailure("𝔮⁻¹(a) is not injective".into()));
    }
    let retraction = extend(&ModuleMap::identity(&trmod), &trincl)?
        .ok_or_else(|| Error::SplitFailure("no retraction of 𝔮⁻¹(a) -> a".into()))?;
    let sum = direct_sum(a.algebra(), a.side(), &[cot.clone(), trmod.clone()])?;
    let iso = sum.injections[0].compose(&p)?.add(&sum.injections[1].compose(&retraction)?)?;
    if !iso.is_isomorphism() {
        return Err(Error::SplitFailure("a -> 𝔮(a) ⊕ 𝔮⁻¹(a) is not an isomorphism".into()));
    }

    for (i, b) in probes.iter().enumerate() {
        let under = stable_hom(a, b, Flavor::ModuloProjectives)?.dim();
        let tors = hom_basis(&tmod, b)?.dim();
        if under != tors {
            return Err(Error::SplitFailure(format!("probe {i}: dim underline Hom(a,b) = {under}, dim Hom(𝔱(a),b) = {tors}")));
        }
        let over = stable_hom(b, a, Flavor::ModuloInjectives)?.dim();
        let cotors = hom_basis(b, &cot)?.dim();
        if over != cotors {
            return Err(Error::SplitFailure(format!("probe {i}: dim overline Hom(b,a) = {over}, dim Hom(b,𝔮(a)) = {cotors}")));
        }
    }
    Ok(HereditarySplit {
        torsion,
        torsionless_section: section,
        trace,
        trace_retraction: retraction,
        probes_checked: probes.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_injective, indec_projective, simple, Algebra, Quiver};
    use crate::exactla::Field;
    use crate::homology::ext1;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    #[test]
    fn worked_a2_value() {
        let alg = a2();
        let sr2 = simple(&alg, 1, Side::Right).unwrap();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        assert_eq!(tensor_substab(&sr2, &s2).unwrap().dim(), 1);
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        assert_eq!(ext1(&s1, &s2).unwrap().dim(), 1);
        assert_eq!(torsion_radical(&sr2).unwrap().dim(), 1);
    }

    #[test]
    fn vanishing_cases() {
        let alg = a2();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        for v in 0..2 {
            let p = indec_projective(&alg, v, Side::Right).unwrap();
            assert_eq!(tensor_substab(&p, &s2).unwrap().dim(), 0);
            assert_eq!(torsion_radical(&p).unwrap().dim(), 0);
            let sr = simple(&alg, v, Side::Right).unwrap();
            let i = indec_injective(&alg, v, Side::Left).unwrap();
            assert_eq!(tensor_substab(&sr, &i).unwrap().dim(), 0);
        }
    }

    #[test]
    fn a2_split() {
        let alg = a2();
        let s = [simple(&alg, 0, Side::Left).unwrap(), simple(&alg, 1, Side::Left).unwrap()];
        let a = direct_sum(&alg, Side::Left, &s).unwrap().module;
        let split = hereditary_split(&a, &s).unwrap();
        assert_eq!(split.torsion.dims(), alloc::vec![1, 0]);
        let i2 = indec_injective(&alg, 1, Side::Left).unwrap();
        assert!(hereditary_split(&i2, &s).unwrap().trace.is_whole());
    }
}
