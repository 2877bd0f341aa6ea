use alloc::vec::Vec;

use crate::algebra::{ModuleMap, Representation};
use crate::error::Result;
use crate::exactla::{Matrix, Subspace};
use crate::homology::{hom_basis, injective_envelope, projective_cover, HomSpace};

/// Maps `a -> b` factoring through a projective: postcomposites with the projective cover of
/// `b`. Returned in the coordinates of `hom_basis(a, b)`.
pub fn pfactor_subspace(a: &Representation, b: &Representation) -> Result<(HomSpace, Subspace)> {
    let hom = hom_basis(a, b)?;
    let cover = projective_cover(b)?;
    let through = hom_basis(a, &cover.middle)?;
    let maps: Vec<ModuleMap> = through.basis().iter().map(|h| cover.surjection.compose(h)).collect::<Result<_>>()?;
    let span = hom.span_of(&maps);
    Ok((hom, span))
}

/// Maps `a -> b` factoring through an injective: precomposites with the injective envelope of
/// `a`.
pub fn ifactor_subspace(a: &Representation, b: &Representation) -> Result<(HomSpace, Subspace)> {
    let hom = hom_basis(a, b)?;
    let env = injective_envelope(a)?;
    let through = hom_basis(&env.middle, b)?;
    let maps: Vec<ModuleMap> = through.basis().iter().map(|h| h.compose(&env.inclusion)).collect::<Result<_>>()?;
    let span = hom.span_of(&maps);
    Ok((hom, span))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// Hom modulo maps factoring through projectives (underline).
    ModuloProjectives,
    /// Hom modulo maps factoring through injectives (overline).
    ModuloInjectives,
}

/// A stable Hom space `Hom(a, b) / factoring`.
#[derive(Debug, Clone)]
pub struct StableHom {
    pub hom: HomSpace,
    pub factoring: Subspace,
    /// Quotient map on `hom` basis coordinates (columns).
    pub projection: Matrix,
}

impl StableHom {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.factoring.dim()
    }
}

pub fn stable_hom(a: &Representation, b: &Representation, flavor: Flavor) -> Result<StableHom> {
    let (hom, factoring) = match flavor {
        Flavor::ModuloProjectives => pfactor_subspace(a, b)?,
        Flavor::ModuloInjectives => ifactor_subspace(a, b)?,
    };
    let projection = factoring.quotient_projection();
    Ok(StableHom { hom, factoring, projection })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_projective, simple, Algebra, Quiver, Side};
    use crate::exactla::Field;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    #[test]
    fn a2_stable_homs() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        assert!(pfactor_subspace(&s1, &s1).unwrap().1.is_zero());
        assert!(ifactor_subspace(&s2, &s2).unwrap().1.is_zero());
        let (hom, pf) = pfactor_subspace(&p1, &s1).unwrap();
        assert_eq!(hom.dim(), pf.dim());
        assert_eq!(stable_hom(&s1, &s1, Flavor::ModuloProjectives).unwrap().dim(), 1);
        assert_eq!(stable_hom(&s2, &s2, Flavor::ModuloInjectives).unwrap().dim(), 1);
        for b in [&s1, &s2, &p1] {
            assert_eq!(stable_hom(&s2, b, Flavor::ModuloProjectives).unwrap().dim(), 0);
        }
    }
}
