use alloc::vec::Vec;

use super::hom::{hom_basis, HomSpace};
use crate::algebra::{direct_sum, indec_projective, radical, vector_dual, vector_dual_map, ModuleMap, Representation};
use crate::error::Result;
use crate::exactla::{Matrix, Subspace};

/// `0 -> left -> middle -> right -> 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortExactSequence {
    pub left: Representation,
    pub middle: Representation,
    pub right: Representation,
    pub inclusion: ModuleMap,
    pub surjection: ModuleMap,
}

impl ShortExactSequence {
    /// Vertexwise exactness check.
    pub fn is_exact(&self) -> bool {
        self.inclusion.is_injective()
            && self.surjection.is_surjective()
            && self.inclusion.image() == self.surjection.kernel()
    }
}

/// Vertices of the indecomposable summands of the projective cover, with multiplicity, in
/// vertex order.
pub fn top_multiplicities(m: &Representation) -> Vec<usize> {
    let rad = radical(m);
    (0..m.dims().len())
        .flat_map(|v| core::iter::repeat_n(v, m.dim_at(v) - rad.space(v).dim()))
        .collect()
}

/// The map `P(v) -> m` sending `e_v` to `x ∈ m_v` (a column vector).
pub fn map_from_projective(m: &Representation, v: usize, x: &Matrix) -> Result<ModuleMap> {
    let p = indec_projective(m.algebra(), v, m.side())?;
    let acting = m.acting();
    let maps = (0..acting.num_vertices())
        .map(|w| {
            let cols: Vec<Matrix> = acting.basis_block(v, w).iter().map(|&b| &m.basis_action(b) * x).collect();
            let refs: Vec<&Matrix> = cols.iter().collect();
            Matrix::hstack(m.field(), m.dim_at(w), &refs)
        })
        .collect();
    ModuleMap::unchecked(&p, m, maps)
}

/// The minimal projective cover `0 -> Ωm -> P -> m -> 0`. `P` is the direct sum of the
/// `P(v)` listed by [`top_multiplicities`], in that order.
pub fn projective_cover(m: &Representation) -> Result<ShortExactSequence> {
    let rad = radical(m);
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    for v in 0..m.dims().len() {
        let gens = rad.space(v).quotient_section();
        for j in 0..gens.cols() {
            let f = map_from_projective(m, v, &gens.col(j))?;
            summands.push(f.domain().clone());
            parts.push(f);
        }
    }
    let sum = direct_sum(m.algebra(), m.side(), &summands)?;
    let mut cover = ModuleMap::zero(&sum.module, m);
    for (f, proj) in parts.iter().zip(&sum.projections) {
        cover = cover.add(&f.compose(proj)?)?;
    }
    let (omega, incl) = cover.kernel().to_module();
    Ok(ShortExactSequence { left: omega, middle: sum.module, right: m.clone(), inclusion: incl, surjection: cover })
}

/// The minimal injective envelope `0 -> m -> I -> Σm -> 0`, dual to the projective cover of
/// the vector dual. `I` is the direct sum of the `I(v)` at the socle vertices, in vertex order.
pub fn injective_envelope(m: &Representation) -> Result<ShortExactSequence> {
    let cover = projective_cover(&vector_dual(m))?;
    Ok(ShortExactSequence {
        left: m.clone(),
        middle: vector_dual(&cover.middle),
        right: vector_dual(&cover.left),
        inclusion: vector_dual_map(&cover.surjection),
        surjection: vector_dual_map(&cover.inclusion),
    })
}

/// Projective exactly when the minimal cover has zero kernel.
pub fn is_projective(m: &Representation) -> Result<bool> {
    Ok(projective_cover(m)?.left.is_zero())
}

pub fn is_injective(m: &Representation) -> Result<bool> {
    Ok(injective_envelope(m)?.right.is_zero())
}

pub fn syzygy(m: &Representation) -> Result<Representation> {
    Ok(projective_cover(m)?.left)
}

pub fn cosyzygy(m: &Representation) -> Result<Representation> {
    Ok(injective_envelope(m)?.right)
}

/// `Ext¹(m, n) = coker(Hom(P, n) -> Hom(Ωm, n))` along the projective cover of `m`.
#[derive(Debug, Clone)]
pub struct Ext1 {
    pub cover: ShortExactSequence,
    pub hom_syzygy: HomSpace,
    /// Restrictions of maps out of the cover, in `hom_syzygy` coordinates.
    pub boundaries: Subspace,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.hom_syzygy.dim() - self.boundaries.dim()
    }
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<Ext1> {
    m.check_same_category(n)?;
    let cover = projective_cover(m)?;
    let hom_syzygy = hom_basis(&cover.left, n)?;
    let hom_p = hom_basis(&cover.middle, n)?;
    let restricted: Vec<ModuleMap> =
        hom_p.basis().iter().map(|f| f.compose(&cover.inclusion)).collect::<Result<_>>()?;
    let boundaries = hom_syzygy.span_of(&restricted);
    Ok(Ext1 { cover, hom_syzygy, boundaries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_injective, simple, Algebra, Quiver, Side};
    use crate::exactla::Field;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    #[test]
    fn cover_of_simple() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let c = projective_cover(&s1).unwrap();
        assert!(c.is_exact());
        assert_eq!(c.middle, indec_projective(&alg, 0, Side::Left).unwrap());
        assert_eq!(c.left.dims(), &[0, 1]);
    }

    #[test]
    fn cover_of_projective_splits() {
        let alg = a2();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        assert!(projective_cover(&p1).unwrap().left.is_zero());
    }

    #[test]
    fn envelope_of_simple() {
        let alg = a2();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        let e = injective_envelope(&s2).unwrap();
        assert!(e.is_exact());
        assert_eq!(e.middle, indec_injective(&alg, 1, Side::Left).unwrap());
        assert_eq!(e.right.dims(), &[1, 0]);
    }

    #[test]
    fn a2_ext() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        assert_eq!(ext1(&s1, &s2).unwrap().dim(), 1);
        assert_eq!(ext1(&s1, &s1).unwrap().dim(), 0);
        assert_eq!(ext1(&p1, &s2).unwrap().dim(), 0);
    }
}
