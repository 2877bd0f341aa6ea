use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{regular_module, vector_dual_map, ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};
use crate::homology::{extend, hom_basis, lift, HomSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

impl Variance {
    pub fn flip(self) -> Variance {
        match self {
            Variance::Covariant => Variance::Contravariant,
            Variance::Contravariant => Variance::Covariant,
        }
    }
}

/// A finitely presented functor given by one module map `f`.
///
/// Covariant, `f: X -> Y`: `(Y,−) -> (X,−) -> F -> 0`, so `F(b) = Hom(X,b) / f^*Hom(Y,b)`.
/// Contravariant, `f: Y -> X`: `(−,Y) -> (−,X) -> F -> 0`, so `F(b) = Hom(b,X) / f_*Hom(b,Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpFunctor {
    pub variance: Variance,
    pub presentation: ModuleMap,
}

/// `F(b)` as a quotient of a Hom space.
#[derive(Debug, Clone)]
pub struct FpValue {
    /// `Hom(X, b)` (covariant) or `Hom(b, X)` (contravariant).
    pub hom: HomSpace,
    /// Image of the presentation, in `hom` coordinates.
    pub relations: Subspace,
    pub projection: Matrix,
    pub section: Matrix,
}

impl FpValue {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The Hom representative of the `i`-th basis vector of `F(b)`.
    pub fn representative(&self, i: usize) -> ModuleMap {
        self.hom.element(&self.section.col(i).transpose())
    }

    /// Class of a representative, as a column in `F(b)` coordinates.
    pub fn class_of(&self, f: &ModuleMap) -> Matrix {
        &self.projection * &self.hom.coordinates(f).expect("map in Hom space").transpose()
    }
}

/// The defect: `w(F) = ker f` (covariant) with its inclusion into `X`, or `v(F) = coker f`
/// (contravariant) with the projection from `X`.
#[derive(Debug, Clone)]
pub struct Defect {
    pub module: Representation,
    pub map: ModuleMap,
}

impl FpFunctor {
    pub fn new(presentation: ModuleMap, variance: Variance) -> FpFunctor {
        FpFunctor { variance, presentation }
    }

    /// The module `X` whose Hom functor is being presented.
    pub fn x(&self) -> &Representation {
        match self.variance {
            Variance::Covariant => self.presentation.domain(),
            Variance::Contravariant => self.presentation.codomain(),
        }
    }

    /// The module `Y` carrying the relations.
    pub fn y(&self) -> &Representation {
        match self.variance {
            Variance::Covariant => self.presentation.codomain(),
            Variance::Contravariant => self.presentation.domain(),
        }
    }

    /// The functor `b ↦ F(D b)` of the opposite variance on the other side, presented by the
    /// vector dual of `f`.
    pub fn dual(&self) -> FpFunctor {
        FpFunctor { variance: self.variance.flip(), presentation: vector_dual_map(&self.presentation) }
    }

    pub fn check_argument(&self, b: &Representation) -> Result<()> {
        self.x().check_same_category(b)
    }
}

pub fn fp_from_map(f: &ModuleMap, variance: Variance) -> FpFunctor {
    FpFunctor::new(f.clone(), variance)
}

pub fn fp_eval(functor: &FpFunctor, b: &Representation) -> Result<FpValue> {
    functor.check_argument(b)?;
    let f = &functor.presentation;
    let (hom, images) = match functor.variance {
        Variance::Covariant => {
            let hom = hom_basis(f.domain(), b)?;
            let rel = hom_basis(f.codomain(), b)?;
            let images: Vec<ModuleMap> = rel.basis().iter().map(|h| h.compose(f)).collect::<Result<_>>()?;
            (hom, images)
        }
        Variance::Contravariant => {
            let hom = hom_basis(b, f.codomain())?;
            let rel = hom_basis(b, f.domain())?;
            let images: Vec<ModuleMap> = rel.basis().iter().map(|h| f.compose(h)).collect::<Result<_>>()?;
            (hom, images)
        }
    };
    let relations = hom.span_of(&images);
    let projection = relations.quotient_projection();
    let section = relations.quotient_section();
    Ok(FpValue { hom, relations, projection, section })
}

/// The defect of `F`. For contravariant `F` also checks `dim F(Λ) = dim v(F)`.
pub fn fp_defect(functor: &FpFunctor) -> Result<Defect> {
    let f = &functor.presentation;
    match functor.variance {
        Variance::Covariant => {
            let (module, map) = f.kernel().to_module();
            Ok(Defect { module, map })
        }
        Variance::Contravariant => {
            let (module, map) = f.cokernel();
            let lam = regular_module(f.codomain().algebra(), f.codomain().side());
            let at_lam = fp_eval(functor, &lam)?.dim();
            if at_lam != module.total_dim() {
                return Err(Error::NotExact(format!("dim F(Λ) = {at_lam} but dim v(F) = {}", module.total_dim())));
            }
            Ok(Defect { module, map })
        }
    }
}

/// A natural transformation between finitely presented functors, given by a commuting square
/// of presentations.
///
/// Covariant (`f: X -> Y` presents the source, `g: X' -> Y'` the target): `u: X' -> X` and
/// `v: Y' -> Y` with `f∘u = v∘g`, acting by `φ ↦ φ∘u`.
/// Contravariant (`f: Y -> X`, `g: Y' -> X'`): `u: X -> X'` and `v: Y -> Y'` with
/// `u∘f = g∘v`, acting by `φ ↦ u∘φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMorphism {
    pub source: FpFunctor,
    pub target: FpFunctor,
    pub u: ModuleMap,
    pub v: ModuleMap,
}

impl FpMorphism {
    pub fn new(source: &FpFunctor, target: &FpFunctor, u: ModuleMap, v: ModuleMap) -> Result<FpMorphism> {
        if source.variance != target.variance {
            return Err(Error::VarianceMismatch);
        }
        let (f, g) = (&source.presentation, &target.presentation);
        let commutes = match source.variance {
            Variance::Covariant => {
                u.domain() == target.x()
                    && u.codomain() == source.x()
                    && v.domain() == target.y()
                    && v.codomain() == source.y()
                    && f.compose(&u)? == v.compose(g)?
            }
            Variance::Contravariant => {
                u.domain() == source.x()
                    && u.codomain() == target.x()
                    && v.domain() == source.y()
                    && v.codomain() == target.y()
                    && u.compose(f)? == g.compose(&v)?
            }
        };
        if !commutes {
            return Err(Error::InvalidMap("square of presentations does not commute".into()));
        }
        Ok(FpMorphism { source: source.clone(), target: target.clone(), u, v })
    }

    pub fn identity(functor: &FpFunctor) -> FpMorphism {
        FpMorphism {
            source: functor.clone(),
            target: functor.clone(),
            u: ModuleMap::identity(functor.x()),
            v: ModuleMap::identity(functor.y()),
        }
    }

    pub fn zero(source: &FpFunctor, target: &FpFunctor) -> Result<FpMorphism> {
        let (u, v) = match source.variance {
            Variance::Covariant => (ModuleMap::zero(target.x(), source.x()), ModuleMap::zero(target.y(), source.y())),
            Variance::Contravariant => {
                (ModuleMap::zero(source.x(), target.x()), ModuleMap::zero(source.y(), target.y()))
            }
        };
        FpMorphism::new(source, target, u, v)
    }

    pub fn variance(&self) -> Variance {
        self.source.variance
    }

    /// The same transformation between the dual functors.
    pub fn dual(&self) -> FpMorphism {
        FpMorphism {
            source: self.source.dual(),
            target: self.target.dual(),
            u: vector_dual_map(&self.u),
            v: vector_dual_map(&self.v),
        }
    }

    /// `F(b) -> G(b)` in the quotient coordinates of the two values.
    pub fn evaluate(&self, src: &FpValue, dst: &FpValue) -> Matrix {
        let field = self.u.domain().field();
        let cols: Vec<Matrix> = (0..src.dim())
            .map(|i| {
                let phi = src.representative(i);
                let image = match self.variance() {
                    Variance::Covariant => phi.compose(&self.u).expect("composable"),
                    Variance::Contravariant => self.u.compose(&phi).expect("composable"),
                };
                dst.class_of(&image)
            })
            .collect();
        let refs: Vec<&Matrix> = cols.iter().collect();
        Matrix::hstack(field, dst.dim(), &refs)
    }

    /// Evaluates source and target at `b` and returns both values with the induced map.
    pub fn evaluate_at(&self, b: &Representation) -> Result<(FpValue, FpValue, Matrix)> {
        let src = fp_eval(&self.source, b)?;
        let dst = fp_eval(&self.target, b)?;
        let m = self.evaluate(&src, &dst);
        Ok((src, dst, m))
    }

    /// Two squares define the same transformation when the difference of their `u`
    /// components factors through the target presentation.
    pub fn homotopic(&self, other: &FpMorphism) -> Result<bool> {
        if self.source != other.source || self.target != other.target {
            return Ok(false);
        }
        let diff = self.u.sub(&other.u)?;
        let g = &self.target.presentation;
        Ok(match self.variance() {
            Variance::Covariant => extend(&diff, g)?.is_some(),
            Variance::Contravariant => lift(&diff, g)?.is_some(),
        })
    }
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

    #[test]
    fn representable_and_zero_functors() {
        let alg = a2();
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let zero = crate::algebra::Representation::zero(&alg, Side::Left);
        let rep = fp_from_map(&ModuleMap::zero(&p1, &zero), Variance::Covariant);
        for b in [&p1, &s1] {
            assert_eq!(fp_eval(&rep, b).unwrap().dim(), hom_basis(&p1, b).unwrap().dim());
        }
        // the representable is presented by p1 -> 0, so its defect is p1 itself
        assert_eq!(fp_defect(&rep).unwrap().module.total_dim(), 2);
        let id = fp_from_map(&ModuleMap::identity(&p1), Variance::Covariant);
        assert_eq!(fp_eval(&id, &s1).unwrap().dim(), 0);
    }

    #[test]
    fn contravariant_underline() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let cover = projective_cover(&s1).unwrap();
        let f = fp_from_map(&cover.surjection, Variance::Contravariant);
        assert_eq!(fp_eval(&f, &s1).unwrap().dim(), 1);
        assert!(fp_defect(&f).unwrap().module.is_zero());
    }

    #[test]
    fn dual_functor_values_agree() {
        let alg = a2();
        let s1 = simple(&alg, 0, Side::Left).unwrap();
        let cover = projective_cover(&s1).unwrap();
        let f = fp_from_map(&cover.surjection, Variance::Contravariant);
        let d = f.dual();
        for b in [&s1, &cover.middle] {
            let db = crate::algebra::vector_dual(b);
            assert_eq!(fp_eval(&f, b).unwrap().dim(), fp_eval(&d, &db).unwrap().dim());
        }
    }

}
