use alloc::format;
use alloc::vec::Vec;

use super::torsion::{
    bass_torsion, cotorsion_quotient, left_proj_approximation, right_inj_approximation, Approximation, TorsionMethod,
};
use crate::algebra::{indec_injective, regular_module, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::homology::ext1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateKind {
    /// `0 -> 𝔱(a) -> a -> Q -> M -> 0` with `Ext¹(M, Λ) = 0`.
    CovariantUnderline,
    /// `0 -> N -> I -> a -> 𝔮(a) -> 0` with `Ext¹(I(v), N) = 0` for all `v`.
    ContravariantOverline,
}

/// A finite-presentation certificate: a four-term exact sequence built from an approximation,
/// the vanishing checks, and an explicit isomorphism between the defect and the independently
/// computed torsion (resp. cotorsion quotient).
#[derive(Debug, Clone)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub approximation: Approximation,
    pub terms: [Representation; 4],
    pub maps: [ModuleMap; 3],
    /// Dimensions of the Ext groups required to vanish.
    pub vanishing: Vec<usize>,
    /// Covariant: `ker γ -> 𝔱(a)`. Contravariant: `coker γ -> 𝔮(a)`.
    pub defect_iso: ModuleMap,
}

impl Certificate {
    pub fn is_exact(&self) -> bool {
        let [f, g, h] = &self.maps;
        f.is_injective() && f.image() == g.kernel() && g.image() == h.kernel() && h.is_surjective()
    }

    pub fn vanishing_holds(&self) -> bool {
        self.vanishing.iter().all(|&d| d == 0)
    }
}

pub fn fp_certificate(a: &Representation, kind: CertificateKind) -> Result<Certificate> {
    match kind {
        CertificateKind::CovariantUnderline => covariant(a),
        CertificateKind::ContravariantOverline => contravariant(a),
    }
}

fn covariant(a: &Representation) -> Result<Certificate> {
    let approx = left_proj_approximation(a)?;
    let gamma = approx.map.clone();
    let (kmod, kincl) = gamma.kernel().to_module();
    let (m, proj) = gamma.cokernel();
    let lam = regular_module(a.algebra(), a.side());
    let e = ext1(&m, &lam)?.dim();
    if e != 0 {
        return Err(Error::VanishingCheckFailed(format!("dim Ext¹(M, Λ) = {e}")));
    }
    let torsion = bass_torsion(a, TorsionMethod::Evaluation)?;
    let defect_iso = kincl.corestrict(&torsion).map_err(|_| Error::NotExact("ker γ is not inside 𝔱(a)".into()))?;
    if !defect_iso.is_isomorphism() {
        return Err(Error::NotExact("ker γ differs from 𝔱(a)".into()));
    }
    let cert = Certificate {
        kind: CertificateKind::CovariantUnderline,
        approximation: approx,
        terms: [kmod, a.clone(), gamma.codomain().clone(), m],
        maps: [kincl, gamma, proj],
        vanishing: alloc::vec![e],
        defect_iso,
    };
    if !cert.is_exact() {
        return Err(Error::NotExact("covariant sequence".into()));
    }
    Ok(cert)
}

fn contravariant(a: &Representation) -> Result<Certificate> {
    let approx = right_inj_approximation(a)?;
    let gamma = approx.map.clone();
    let (n, nincl) = gamma.kernel().to_module();
    let (c, proj) = gamma.cokernel();
    let mut vanishing = Vec::with_capacity(a.dims().len());
    for v in 0..a.dims().len() {
        let inj = indec_injective(a.algebra(), v, a.side())?;
        let e = ext1(&inj, &n)?.dim();
        if e != 0 {
            return Err(Error::VanishingCheckFailed(format!("dim Ext¹(I({v}), N) = {e}")));
        }
        vanishing.push(e);
    }
    let (_, qproj) = cotorsion_quotient(a)?;
    let defect_iso = qproj
        .factor_through_quotient(&proj)
        .map_err(|_| Error::NotExact("image of γ is not inside 𝔮⁻¹(a)".into()))?;
    if !defect_iso.is_isomorphism() {
        return Err(Error::NotExact("coker γ differs from 𝔮(a)".into()));
    }
    let cert = Certificate {
        kind: CertificateKind::ContravariantOverline,
        approximation: approx,
        terms: [n, gamma.domain().clone(), a.clone(), c],
        maps: [nincl, gamma, proj],
        vanishing,
        defect_iso,
    };
    if !cert.is_exact() {
        return Err(Error::NotExact("contravariant sequence".into()));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_projective, simple, Algebra, Quiver, Relation, Side};
    use crate::exactla::Field;

    #[test]
    fn a2_simple_certificate() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let c = fp_certificate(&s1, CertificateKind::CovariantUnderline).unwrap();
        assert_eq!(c.terms[0].total_dim(), 1);
        assert!(c.terms[2].is_zero() && c.terms[3].is_zero());
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        let c = fp_certificate(&p1, CertificateKind::CovariantUnderline).unwrap();
        assert!(c.terms[0].is_zero() && c.terms[3].is_zero());
        for m in [&s1, &p1] {
            assert!(fp_certificate(m, CertificateKind::ContravariantOverline).unwrap().is_exact());
        }
    }

    #[test]
    fn self_injective_certificate() {
        let f = Field::prime(5).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::from_names(&q, &[(f.one(), &["x", "x"])]).unwrap();
        let alg = Algebra::build(q, alloc::vec![r], f, 10).unwrap();
        let k = simple(&alg, 0, Side::Left).unwrap();
        let c = fp_certificate(&k, CertificateKind::CovariantUnderline).unwrap();
        assert!(c.terms[0].is_zero());
        assert_eq!(c.terms[2].total_dim(), 2);
        assert_eq!(c.terms[3].total_dim(), 1);
        assert!(c.vanishing_holds());
    }
}
