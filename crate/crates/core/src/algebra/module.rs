use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::bound::Algebra;
use super::quiver::Side;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};

#[derive(Debug, PartialEq, Eq)]
struct RepInner {
    algebra: Algebra,
    side: Side,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A finite-dimensional left or right module, given as a representation of the bound quiver.
///
/// A right module over `Λ` is stored as a left module over `Λ^op`: arrow `a: u -> v` of `Λ`
/// carries a matrix `V_v -> V_u`. [`Representation::acting`] returns the algebra whose arrows
/// the stored matrices follow.
#[derive(Debug, Clone)]
pub struct Representation(Arc<RepInner>);

impl PartialEq for Representation {
    fn eq(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Representation {}

impl Representation {
    /// Validates shapes, the relations and nilpotency of the arrow action.
    pub fn new(algebra: &Algebra, side: Side, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let rep = Representation::unchecked(algebra, side, dims, maps)?;
        rep.validate()?;
        Ok(rep)
    }

    /// Shape-checked constructor that skips the relation check. For modules that satisfy the
    /// relations by construction.
    pub(crate) fn unchecked(algebra: &Algebra, side: Side, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        if algebra.is_opposite() {
            return Err(Error::InvalidRepresentation("modules are declared over the base algebra".into()));
        }
        let rep = Representation(Arc::new(RepInner { algebra: algebra.clone(), side, dims, maps }));
        rep.check_shapes()?;
        Ok(rep)
    }

    fn check_shapes(&self) -> Result<()> {
        let acting = self.acting();
        if self.0.dims.len() != acting.num_vertices() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertex dimensions, got {}",
                acting.num_vertices(),
                self.0.dims.len()
            )));
        }
        if self.0.maps.len() != acting.num_arrows() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} arrow maps, got {}",
                acting.num_arrows(),
                self.0.maps.len()
            )));
        }
        for (a, m) in self.0.maps.iter().enumerate() {
            let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
            if m.field() != acting.field() {
                return Err(Error::FieldMismatch(m.field(), acting.field()));
            }
            if m.rows() != self.0.dims[t] || m.cols() != self.0.dims[s] {
                return Err(Error::InvalidRepresentation(format!(
                    "arrow {} has shape {}x{}, expected {}x{}",
                    acting.arrow_name(a),
                    m.rows(),
                    m.cols(),
                    self.0.dims[t],
                    self.0.dims[s]
                )));
            }
        }
        Ok(())
    }

    fn validate(&self) -> Result<()> {
        let acting = self.acting();
        for rel in acting.relations() {
            let Some((s, t)) = rel.validate(&acting.quiver())? else { continue };
            let mut total = Matrix::zeros(self.field(), self.0.dims[t], self.0.dims[s]);
            for (c, path) in &rel.terms {
                total = &total + &self.path_map(path).scale(c);
            }
            if !total.is_zero() {
                return Err(Error::InvalidRepresentation("a relation does not vanish".into()));
            }
        }
        // the relations may not force nilpotency on their own; paths of radical length must vanish
        let mut layer: Vec<Subspace> = self.0.dims.iter().map(|&d| Subspace::full(self.field(), d)).collect();
        for _ in 0..acting.radical_length() {
            layer = self.arrow_images(&layer);
        }
        if layer.iter().any(|s| !s.is_zero()) {
            return Err(Error::InvalidRepresentation("arrow action is not nilpotent".into()));
        }
        Ok(())
    }

    /// `Σ_α M_α(U_{s(α)})` placed at each target vertex.
    pub(crate) fn arrow_images(&self, spaces: &[Subspace]) -> Vec<Subspace> {
        let acting = self.acting();
        let mut out: Vec<Subspace> = self.0.dims.iter().map(|&d| Subspace::zero(self.field(), d)).collect();
        for (a, m) in self.0.maps.iter().enumerate() {
            let t = acting.arrow_target(a);
            let img = spaces[acting.arrow_source(a)].image_under(m);
            out[t] = out[t].sum(&img).expect("same ambient");
        }
        out
    }

    /// Zero module on the given side.
    pub fn zero(algebra: &Algebra, side: Side) -> Representation {
        let n = algebra.num_vertices();
        let maps = (0..algebra.num_arrows()).map(|_| Matrix::zeros(algebra.field(), 0, 0)).collect();
        Representation::unchecked(algebra, side, alloc::vec![0; n], maps).expect("zero module")
    }

    /// The algebra the module was declared over (never an opposite).
    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    /// The algebra whose arrows the stored matrices follow: `Λ` for left modules, `Λ^op` for
    /// right modules.
    pub fn acting(&self) -> Algebra {
        match self.0.side {
            Side::Left => self.0.algebra.clone(),
            Side::Right => self.0.algebra.opposite(),
        }
    }

    pub fn side(&self) -> Side {
        self.0.side
    }

    pub fn field(&self) -> Field {
        self.0.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Matrix of arrow `a`, from the component at its acting source to its acting target.
    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.0.maps[a]
    }

    pub fn arrow_maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    /// Action of a path (acting orientation, traversal order), from its source component to
    /// its target component.
    pub fn path_map(&self, path: &[usize]) -> Matrix {
        let acting = self.acting();
        let mut out = Matrix::identity(self.field(), self.0.dims[acting.arrow_source(path[0])]);
        for &a in path {
            out = &self.0.maps[a] * &out;
        }
        out
    }

    /// Action of the basis element `idx` of the acting algebra, from the component at its
    /// source to the component at its target.
    pub fn basis_action(&self, idx: usize) -> Matrix {
        let path = self.acting().basis_path(idx);
        if path.is_empty() {
            let (s, _) = self.acting().basis_endpoints(idx);
            Matrix::identity(self.field(), self.0.dims[s])
        } else {
            self.path_map(&path)
        }
    }

    /// Offset of the component at `v` in the concatenation of all components.
    pub fn offset(&self, v: usize) -> usize {
        self.0.dims[..v].iter().sum()
    }

    pub fn check_same_category(&self, other: &Representation) -> Result<()> {
        if !self.0.algebra.same_underlying(&other.0.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.0.side != other.0.side {
            return Err(Error::SideMismatch(String::from("modules on different sides")));
        }
        Ok(())
    }
}

/// A homomorphism of representations: one matrix per vertex, commuting with the arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    domain: Representation,
    codomain: Representation,
    maps: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(domain: &Representation, codomain: &Representation, maps: Vec<Matrix>) -> Result<ModuleMap> {
        let f = ModuleMap::unchecked(domain, codomain, maps)?;
        let acting = domain.acting();
        for a in 0..acting.num_arrows() {
            let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
            if &f.maps[t] * domain.arrow_map(a) != codomain.arrow_map(a) * &f.maps[s] {
                return Err(Error::InvalidMap(format!("does not commute with arrow {}", acting.arrow_name(a))));
            }
        }
        Ok(f)
    }

    pub(crate) fn unchecked(domain: &Representation, codomain: &Representation, maps: Vec<Matrix>) -> Result<ModuleMap> {
        domain.check_same_category(codomain)?;
        if maps.len() != domain.dims().len() {
            return Err(Error::InvalidMap("wrong number of vertex maps".into()));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.rows() != codomain.dim_at(v) || m.cols() != domain.dim_at(v) {
                return Err(Error::InvalidMap(format!("vertex {v} map has the wrong shape")));
            }
        }
        Ok(ModuleMap { domain: domain.clone(), codomain: codomain.clone(), maps })
    }

    pub fn identity(m: &Representation) -> ModuleMap {
        let maps = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModuleMap { domain: m.clone(), codomain: m.clone(), maps }
    }

    pub fn zero(domain: &Representation, codomain: &Representation) -> ModuleMap {
        let maps = domain
            .dims()
            .iter()
            .zip(codomain.dims())
            .map(|(&a, &b)| Matrix::zeros(domain.field(), b, a))
            .collect();
        ModuleMap { domain: domain.clone(), codomain: codomain.clone(), maps }
    }

    pub fn domain(&self) -> &Representation {
        &self.domain
    }

    pub fn codomain(&self) -> &Representation {
        &self.codomain
    }

    pub fn vertex_map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn vertex_maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.codomain != self.domain {
            return Err(Error::InvalidMap("maps are not composable".into()));
        }
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a * b).collect();
        Ok(ModuleMap { domain: other.domain.clone(), codomain: self.codomain.clone(), maps })
    }

    fn check_parallel(&self, other: &ModuleMap) -> Result<()> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::InvalidMap("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a + b).collect();
        Ok(ModuleMap { domain: self.domain.clone(), codomain: self.codomain.clone(), maps })
    }

    pub fn sub(&self, other: &ModuleMap) -> Result<ModuleMap> {
        self.check_parallel(other)?;
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a - b).collect();
        Ok(ModuleMap { domain: self.domain.clone(), codomain: self.codomain.clone(), maps })
    }

    pub fn scale(&self, c: &Scalar) -> ModuleMap {
        let maps = self.maps.iter().map(|m| m.scale(c)).collect();
        ModuleMap { domain: self.domain.clone(), codomain: self.codomain.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The vertex maps concatenated row-major into a `1 x N` row vector.
    pub fn flatten(&self) -> Matrix {
        let entries: Vec<Scalar> = self.maps.iter().flat_map(|m| m.entries()).collect();
        let n = entries.len();
        Matrix::new(self.domain.field(), 1, n, entries).expect("flat shape")
    }

    /// Inverse of [`ModuleMap::flatten`]. Does not check the intertwining equations.
    pub(crate) fn from_flat(domain: &Representation, codomain: &Representation, flat: &Matrix) -> ModuleMap {
        let mut maps = Vec::with_capacity(domain.dims().len());
        let mut at = 0;
        for (&a, &b) in domain.dims().iter().zip(codomain.dims()) {
            maps.push(flat.submatrix(0, 1, at, a * b).reshape(b, a));
            at += a * b;
        }
        ModuleMap { domain: domain.clone(), codomain: codomain.clone(), maps }
    }

    pub fn kernel(&self) -> Submodule {
        let spaces = self.maps.iter().map(Matrix::kernel_basis).collect();
        Submodule { parent: self.domain.clone(), spaces }
    }

    pub fn image(&self) -> Submodule {
        let spaces = self.maps.iter().map(Matrix::column_space).collect();
        Submodule { parent: self.codomain.clone(), spaces }
    }

    /// Cokernel with the canonical surjection.
    pub fn cokernel(&self) -> (Representation, ModuleMap) {
        self.image().quotient()
    }

    /// Corestriction to a submodule of the codomain that contains the image, in the coordinates
    /// of [`Submodule::to_module`].
    pub fn corestrict(&self, sub: &Submodule) -> Result<ModuleMap> {
        if sub.parent != self.codomain {
            return Err(Error::InvalidMap("submodule of a different module".into()));
        }
        let (module, _) = sub.to_module();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (v, m) in self.maps.iter().enumerate() {
            let space = &sub.spaces[v];
            if !space.contains(&m.column_space())? {
                return Err(Error::InvalidMap("image not contained in the submodule".into()));
            }
            maps.push(m.select_rows(space.pivots()));
        }
        Ok(ModuleMap { domain: self.domain.clone(), codomain: module, maps })
    }

    /// The map induced on cokernels: given `q: self.domain -> Q` surjective with kernel
    /// contained in the kernel of `self`, returns `m: Q -> self.codomain` with `m ∘ q = self`.
    pub fn factor_through_quotient(&self, q: &ModuleMap) -> Result<ModuleMap> {
        if q.domain != self.domain {
            return Err(Error::InvalidMap("quotient of a different module".into()));
        }
        let mut maps = Vec::with_capacity(self.maps.len());
        for (v, m) in self.maps.iter().enumerate() {
            let qv = &q.maps[v];
            // x·qv = m  <=>  qv^T x^T = m^T
            let sol = qv
                .transpose()
                .solve_right(&m.transpose())?
                .ok_or_else(|| Error::InvalidMap("map does not factor through the quotient".into()))?;
            maps.push(sol.transpose());
        }
        Ok(ModuleMap { domain: q.codomain.clone(), codomain: self.codomain.clone(), maps })
    }
}

/// A submodule, given by one subspace per vertex of the parent module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    parent: Representation,
    spaces: Vec<Subspace>,
}

impl Submodule {
    /// Checks closure under the arrows.
    pub fn new(parent: &Representation, spaces: Vec<Subspace>) -> Result<Submodule> {
        let sub = Submodule { parent: parent.clone(), spaces };
        if sub.spaces.len() != parent.dims().len()
            || sub.spaces.iter().zip(parent.dims()).any(|(s, &d)| s.ambient_dim() != d)
        {
            return Err(Error::InvalidRepresentation("subspace shapes do not match the module".into()));
        }
        let images = parent.arrow_images(&sub.spaces);
        for (img, s) in images.iter().zip(&sub.spaces) {
            if !s.contains(img)? {
                return Err(Error::InvalidRepresentation("subspaces are not closed under the arrows".into()));
            }
        }
        Ok(sub)
    }

    pub(crate) fn unchecked(parent: &Representation, spaces: Vec<Subspace>) -> Submodule {
        Submodule { parent: parent.clone(), spaces }
    }

    pub fn zero(parent: &Representation) -> Submodule {
        let spaces = parent.dims().iter().map(|&d| Subspace::zero(parent.field(), d)).collect();
        Submodule { parent: parent.clone(), spaces }
    }

    pub fn whole(parent: &Representation) -> Submodule {
        let spaces = parent.dims().iter().map(|&d| Subspace::full(parent.field(), d)).collect();
        Submodule { parent: parent.clone(), spaces }
    }

    pub fn parent(&self) -> &Representation {
        &self.parent
    }

    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v]
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn is_whole(&self) -> bool {
        self.spaces.iter().all(Subspace::is_full)
    }

    fn check(&self, other: &Submodule) -> Result<()> {
        if self.parent != other.parent {
            return Err(Error::InvalidRepresentation("submodules of different modules".into()));
        }
        Ok(())
    }

    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.check(other)?;
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check(other)?;
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect::<Result<_>>()?;
        Ok(Submodule { parent: self.parent.clone(), spaces })
    }

    pub fn intersection(&self, other: &Submodule) -> Result<Submodule> {
        self.check(other)?;
        let spaces = self
            .spaces
            .iter()
            .zip(&other.spaces)
            .map(|(a, b)| a.intersection(b))
            .collect::<Result<_>>()?;
        Ok(Submodule { parent: self.parent.clone(), spaces })
    }

    /// The submodule as a module in its own right, with its inclusion. Coordinates are those of
    /// the echelon basis of each subspace.
    pub fn to_module(&self) -> (Representation, ModuleMap) {
        let p = &self.parent;
        let acting = p.acting();
        let bases: Vec<Matrix> = self.spaces.iter().map(Subspace::basis_columns).collect();
        let maps = (0..acting.num_arrows())
            .map(|a| {
                let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
                (p.arrow_map(a) * &bases[s]).select_rows(self.spaces[t].pivots())
            })
            .collect();
        let m = Representation::unchecked(p.algebra(), p.side(), self.dims(), maps).expect("submodule shapes");
        let incl = ModuleMap { domain: m.clone(), codomain: p.clone(), maps: bases };
        (m, incl)
    }

    /// The quotient module with its canonical projection.
    pub fn quotient(&self) -> (Representation, ModuleMap) {
        let p = &self.parent;
        let acting = p.acting();
        let projs: Vec<Matrix> = self.spaces.iter().map(Subspace::quotient_projection).collect();
        let maps = (0..acting.num_arrows())
            .map(|a| {
                let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
                &(&projs[t] * p.arrow_map(a)) * &self.spaces[s].quotient_section()
            })
            .collect();
        let dims = self.spaces.iter().map(|s| s.ambient_dim() - s.dim()).collect();
        let q = Representation::unchecked(p.algebra(), p.side(), dims, maps).expect("quotient shapes");
        let proj = ModuleMap { domain: p.clone(), codomain: q.clone(), maps: projs };
        (q, proj)
    }

    /// Image of the submodule under a map out of its parent.
    pub fn image_under(&self, f: &ModuleMap) -> Result<Submodule> {
        if f.domain != self.parent {
            return Err(Error::InvalidMap("map out of a different module".into()));
        }
        let spaces = self.spaces.iter().zip(&f.maps).map(|(s, m)| s.image_under(m)).collect();
        Ok(Submodule { parent: f.codomain.clone(), spaces })
    }

    /// Preimage of the submodule under a map into its parent.
    pub fn preimage_under(&self, f: &ModuleMap) -> Result<Submodule> {
        if f.codomain != self.parent {
            return Err(Error::InvalidMap("map into a different module".into()));
        }
        let spaces = self.spaces.iter().zip(&f.maps).map(|(s, m)| s.preimage_under(m)).collect();
        Ok(Submodule { parent: f.domain.clone(), spaces })
    }
}
