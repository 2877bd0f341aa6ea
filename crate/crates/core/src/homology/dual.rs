use alloc::vec::Vec;

use super::hom::{hom_basis, HomSpace};
use super::resolution::projective_cover;
use crate::algebra::{indec_projective, ModuleMap, Representation};
use crate::error::Result;
use crate::exactla::Matrix;

/// `M* = Hom(M, Λ)` as a module on the other side. The component at `w` is `Hom(M, P(w))`.
#[derive(Debug, Clone)]
pub struct StarDual {
    pub module: Representation,
    /// `homs[w] = Hom(M, P(w))`, whose basis indexes the component at `w`.
    pub homs: Vec<HomSpace>,
}

/// Right multiplication by an arrow `α: s -> t`, as a module map `P(t) -> P(s)`.
fn right_multiplication(m: &Representation, al: usize) -> Result<ModuleMap> {
    let acting = m.acting();
    let (s, t) = (acting.arrow_source(al), acting.arrow_target(al));
    let pt = indec_projective(m.algebra(), t, m.side())?;
    let ps = indec_projective(m.algebra(), s, m.side())?;
    let maps = (0..acting.num_vertices()).map(|v| acting.right_action(al, v).clone()).collect();
    ModuleMap::unchecked(&pt, &ps, maps)
}

pub fn star_dual(m: &Representation) -> Result<StarDual> {
    let acting = m.acting();
    let homs: Vec<HomSpace> = (0..acting.num_vertices())
        .map(|w| hom_basis(m, &indec_projective(m.algebra(), w, m.side())?))
        .collect::<Result<_>>()?;
    let maps = (0..acting.num_arrows())
        .map(|al| {
            let rho = right_multiplication(m, al)?;
            let (s, t) = (acting.arrow_source(al), acting.arrow_target(al));
            Ok(homs[t].matrix_of(&homs[s], |f| rho.compose(f).expect("composable")))
        })
        .collect::<Result<Vec<_>>>()?;
    let dims = homs.iter().map(HomSpace::dim).collect();
    let module = Representation::unchecked(m.algebra(), m.side().flip(), dims, maps)?;
    Ok(StarDual { module, homs })
}

/// `f*: N* -> M*` for `f: M -> N`, by precomposition.
pub fn star_dual_map_with(f: &ModuleMap, target_dual: &StarDual, source_dual: &StarDual) -> ModuleMap {
    let maps = target_dual
        .homs
        .iter()
        .zip(&source_dual.homs)
        .map(|(hn, hm)| hn.matrix_of(hm, |g| g.compose(f).expect("composable")))
        .collect();
    ModuleMap::unchecked(&target_dual.module, &source_dual.module, maps).expect("dual map shapes")
}

pub fn star_dual_map(f: &ModuleMap) -> Result<ModuleMap> {
    let dm = star_dual(f.domain())?;
    let dn = star_dual(f.codomain())?;
    Ok(star_dual_map_with(f, &dn, &dm))
}

/// The evaluation `M -> M**`, `x ↦ (f ↦ f(x))`.
pub fn eval_double_dual(m: &Representation) -> Result<ModuleMap> {
    let first = star_dual(m)?;
    let second = star_dual(&first.module)?;
    let field = m.field();
    let n = m.dims().len();
    let maps = (0..n)
        .map(|v| {
            let cols: Vec<Matrix> = (0..m.dim_at(v))
                .map(|i| {
                    let mut x = Matrix::zeros(field, m.dim_at(v), 1);
                    x.set(i, 0, &field.one());
                    // component w of ev_x: f_j ↦ (f_j)_v x in P(w)_v, which is the
                    // opposite-side projective at v evaluated at w
                    let comps = (0..n)
                        .map(|w| {
                            let c: Vec<Matrix> =
                                first.homs[w].basis().iter().map(|f| f.vertex_map(v) * &x).collect();
                            let refs: Vec<&Matrix> = c.iter().collect();
                            Matrix::hstack(field, second.homs[v].codomain().dim_at(w), &refs)
                        })
                        .collect();
                    let ev = ModuleMap::unchecked(&first.module, second.homs[v].codomain(), comps)?;
                    Ok(second.homs[v].coordinates(&ev).expect("evaluation is a module map").transpose())
                })
                .collect::<Result<_>>()?;
            let refs: Vec<&Matrix> = cols.iter().collect();
            Ok(Matrix::hstack(field, second.module.dim_at(v), &refs))
        })
        .collect::<Result<Vec<_>>>()?;
    ModuleMap::unchecked(m, &second.module, maps)
}

/// The transpose together with its defining data: the minimal presentation
/// `P1 -f-> P0 -π-> a -> 0` and the exact sequence `0 -> a* -> P0* -> P1* -> Tr a -> 0`.
#[derive(Debug, Clone)]
pub struct Transpose {
    pub module: Representation,
    pub presentation: ModuleMap,
    pub cover: ModuleMap,
    pub cover_dual: ModuleMap,
    pub presentation_dual: ModuleMap,
    pub projection: ModuleMap,
}

impl Transpose {
    /// Vertexwise exactness of `0 -> a* -> P0* -> P1* -> Tr a -> 0`.
    pub fn is_exact(&self) -> bool {
        self.cover_dual.is_injective()
            && self.cover_dual.image() == self.presentation_dual.kernel()
            && self.presentation_dual.image() == self.projection.kernel()
            && self.projection.is_surjective()
    }
}

pub fn transpose(a: &Representation) -> Result<Transpose> {
    let c0 = projective_cover(a)?;
    let c1 = projective_cover(&c0.left)?;
    let f = c0.inclusion.compose(&c1.surjection)?;
    let a_dual = star_dual(a)?;
    let p0_dual = star_dual(&c0.middle)?;
    let p1_dual = star_dual(&c1.middle)?;
    let cover_dual = star_dual_map_with(&c0.surjection, &a_dual, &p0_dual);
    let presentation_dual = star_dual_map_with(&f, &p0_dual, &p1_dual);
    let (module, projection) = presentation_dual.cokernel();
    Ok(Transpose { module, presentation: f, cover: c0.surjection, cover_dual, presentation_dual, projection })
}

/// Multiplicity of `P(v)` as a direct summand of `m`: the rank of the pairing
/// `Hom(P(v), m) × Hom(m, P(v)) -> k` read off at the trivial path.
pub fn projective_multiplicity(m: &Representation, v: usize) -> Result<usize> {
    let p = indec_projective(m.algebra(), v, m.side())?;
    let hom = hom_basis(m, &p)?;
    let e = m.acting().idempotent_position(v);
    let rows: Vec<Matrix> = hom.basis().iter().map(|g| g.vertex_map(v).row(e)).collect();
    let refs: Vec<&Matrix> = rows.iter().collect();
    Ok(Matrix::vstack(m.field(), m.dim_at(v), &refs).rank())
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

    #[test]
    fn star_duals() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        assert!(star_dual(&s1).unwrap().module.is_zero());
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        let d = star_dual(&p1).unwrap().module;
        assert_eq!(d.side(), Side::Right);
        assert_eq!(d.total_dim(), 1);
        assert_eq!(d, indec_projective(&alg, 0, Side::Right).unwrap());
    }

    #[test]
    fn evaluation_on_projectives_is_injective() {
        let alg = a2();
        for v in 0..2 {
            for side in [Side::Left, Side::Right] {
                let p = indec_projective(&alg, v, side).unwrap();
                let ev = eval_double_dual(&p).unwrap();
                ModuleMap::new(ev.domain(), ev.codomain(), ev.vertex_maps().to_vec()).unwrap();
                assert!(ev.is_injective());
            }
        }
    }

    #[test]
    fn transposes() {
        let alg = a2();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        assert!(transpose(&p1).unwrap().module.is_zero());
        let sr2 = simple(&alg, 1, Side::Right).unwrap();
        let tr = transpose(&sr2).unwrap();
        assert!(tr.is_exact());
        assert_eq!(tr.module.side(), Side::Left);
        assert_eq!(tr.module.dims(), &[1, 0]);
    }

    #[test]
    fn projective_summands() {
        let f = Field::prime(5).unwrap();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::from_names(&q, &[(f.one(), &["x", "x"])]).unwrap();
        let alg = Algebra::build(q, alloc::vec![r], f, 10).unwrap();
        let p = indec_projective(&alg, 0, Side::Left).unwrap();
        let s = simple(&alg, 0, Side::Left).unwrap();
        assert_eq!(projective_multiplicity(&p, 0).unwrap(), 1);
        assert_eq!(projective_multiplicity(&s, 0).unwrap(), 0);
    }
}
