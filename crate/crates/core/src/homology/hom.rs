use alloc::vec::Vec;

use crate::algebra::{ModuleMap, Representation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};

/// `Hom(domain, codomain)` with an echelon basis of flattened vertex-map tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSpace {
    domain: Representation,
    codomain: Representation,
    space: Subspace,
    basis: Vec<ModuleMap>,
}

impl HomSpace {
    pub fn domain(&self) -> &Representation {
        &self.domain
    }

    pub fn codomain(&self) -> &Representation {
        &self.codomain
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ModuleMap] {
        &self.basis
    }

    /// The basis as rows in flattened coordinates.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Coordinates of `f` in the basis, as a `1 x dim` row; `None` if `f` is not in the space.
    pub fn coordinates(&self, f: &ModuleMap) -> Option<Matrix> {
        if f.domain() != &self.domain || f.codomain() != &self.codomain {
            return None;
        }
        self.space.coordinates(&f.flatten())
    }

    /// `Σ c_i f_i` for the basis `f_i`.
    pub fn element(&self, coeffs: &Matrix) -> ModuleMap {
        assert_eq!(coeffs.cols(), self.dim());
        ModuleMap::from_flat(&self.domain, &self.codomain, &(coeffs * self.space.basis()))
    }

    /// Subspace of `Hom` (in basis coordinates) spanned by the given maps.
    pub fn span_of(&self, maps: &[ModuleMap]) -> Subspace {
        let field = self.domain.field();
        let rows: Vec<Matrix> = maps.iter().map(|f| self.coordinates(f).expect("map in Hom space")).collect();
        let refs: Vec<&Matrix> = rows.iter().collect();
        Subspace::from_rows(Matrix::vstack(field, self.dim(), &refs))
    }

    /// Matrix (acting on basis-coordinate columns) of a linear map `Hom(domain, codomain) ->
    /// target`, given the images of the basis.
    pub fn matrix_of(&self, target: &HomSpace, image: impl Fn(&ModuleMap) -> ModuleMap) -> Matrix {
        let field = self.domain.field();
        let cols: Vec<Matrix> = self
            .basis
            .iter()
            .map(|f| target.coordinates(&image(f)).expect("image in target Hom space").transpose())
            .collect();
        let refs: Vec<&Matrix> = cols.iter().collect();
        Matrix::hstack(field, target.dim(), &refs)
    }
}

/// Solves `φ_{t(α)}·a_α = b_α·φ_{s(α)}` for all arrows.
pub fn hom_basis(a: &Representation, b: &Representation) -> Result<HomSpace> {
    a.check_same_category(b)?;
    let field = a.field();
    let acting = a.acting();
    let n = acting.num_vertices();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offsets.push(total);
        total += a.dim_at(v) * b.dim_at(v);
    }
    let eq_rows: usize =
        (0..acting.num_arrows()).map(|al| b.dim_at(acting.arrow_target(al)) * a.dim_at(acting.arrow_source(al))).sum();
    let mut system = Matrix::zeros(field, eq_rows, total);
    let mut r0 = 0;
    for al in 0..acting.num_arrows() {
        let (s, t) = (acting.arrow_source(al), acting.arrow_target(al));
        let rows = b.dim_at(t) * a.dim_at(s);
        if rows == 0 {
            continue;
        }
        // row-major vec: vec(X·A) = (I ⊗ A^T) vec X, vec(B·X) = (B ⊗ I) vec X
        let left = Matrix::identity(field, b.dim_at(t)).kron(&a.arrow_map(al).transpose());
        let right = b.arrow_map(al).kron(&Matrix::identity(field, a.dim_at(s)));
        system.add_block(r0, offsets[t], &left);
        system.add_block(r0, offsets[s], &-&right);
        r0 += rows;
    }
    let space = system.kernel_basis();
    let basis = (0..space.dim()).map(|i| ModuleMap::from_flat(a, b, &space.basis().row(i))).collect();
    Ok(HomSpace { domain: a.clone(), codomain: b.clone(), space, basis })
}

fn solve_combination(field: Field, candidates: &[ModuleMap], target: &ModuleMap) -> Result<Option<Vec<Scalar>>> {
    let t = target.flatten().transpose();
    if candidates.is_empty() {
        return Ok(t.is_zero().then(Vec::new));
    }
    let cols: Vec<Matrix> = candidates.iter().map(|f| f.flatten().transpose()).collect();
    let refs: Vec<&Matrix> = cols.iter().collect();
    let system = Matrix::hstack(field, t.rows(), &refs);
    Ok(system.solve_right(&t)?.map(|x| (0..x.rows()).map(|i| x.get(i, 0)).collect()))
}

fn combine(domain: &Representation, codomain: &Representation, maps: &[ModuleMap], coeffs: &[Scalar]) -> ModuleMap {
    let mut out = ModuleMap::zero(domain, codomain);
    for (f, c) in maps.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&f.scale(c)).expect("parallel maps");
        }
    }
    out
}

/// Some `x: target.domain -> via.domain` with `via ∘ x = target`, if one exists.
pub fn lift(target: &ModuleMap, via: &ModuleMap) -> Result<Option<ModuleMap>> {
    if target.codomain() != via.codomain() {
        return Err(Error::InvalidMap("lift: codomains differ".into()));
    }
    let hom = hom_basis(target.domain(), via.domain())?;
    let images: Vec<ModuleMap> = hom.basis().iter().map(|h| via.compose(h)).collect::<Result<_>>()?;
    let sol = solve_combination(target.domain().field(), &images, target)?;
    Ok(sol.map(|c| combine(target.domain(), via.domain(), hom.basis(), &c)))
}

/// Some `x: via.codomain -> target.codomain` with `x ∘ via = target`, if one exists.
pub fn extend(target: &ModuleMap, via: &ModuleMap) -> Result<Option<ModuleMap>> {
    if target.domain() != via.domain() {
        return Err(Error::InvalidMap("extend: domains differ".into()));
    }
    let hom = hom_basis(via.codomain(), target.codomain())?;
    let images: Vec<ModuleMap> = hom.basis().iter().map(|h| h.compose(via)).collect::<Result<_>>()?;
    let sol = solve_combination(target.domain().field(), &images, target)?;
    Ok(sol.map(|c| combine(via.codomain(), target.codomain(), hom.basis(), &c)))
}
