use alloc::vec;
use alloc::vec::Vec;

use super::bound::Algebra;
use super::module::{ModuleMap, Representation, Submodule};
use super::quiver::Side;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};

fn acting(algebra: &Algebra, side: Side) -> Algebra {
    match side {
        Side::Left => algebra.clone(),
        Side::Right => algebra.opposite(),
    }
}

fn check_vertex(algebra: &Algebra, v: usize) -> Result<()> {
    if v >= algebra.num_vertices() {
        return Err(Error::UnknownVertex(alloc::format!("#{v}")));
    }
    Ok(())
}

/// The simple module at `v`.
pub fn simple(algebra: &Algebra, v: usize, side: Side) -> Result<Representation> {
    check_vertex(algebra, v)?;
    let act = acting(algebra, side);
    let mut dims = vec![0; algebra.num_vertices()];
    dims[v] = 1;
    let maps = (0..act.num_arrows())
        .map(|a| Matrix::zeros(algebra.field(), dims[act.arrow_target(a)], dims[act.arrow_source(a)]))
        .collect();
    Representation::unchecked(algebra, side, dims, maps)
}

/// `Λe_v` (left) or `e_vΛ` (right) on the path basis: the component at `w` is spanned by the
/// basis paths from `v` to `w` in the acting orientation.
pub fn indec_projective(algebra: &Algebra, v: usize, side: Side) -> Result<Representation> {
    check_vertex(algebra, v)?;
    let act = acting(algebra, side);
    let dims = (0..act.num_vertices()).map(|w| act.basis_block(v, w).len()).collect();
    let maps = (0..act.num_arrows()).map(|a| act.left_action(a, v).clone()).collect();
    Representation::unchecked(algebra, side, dims, maps)
}

/// The vector space dual `Hom_k(M, k)`, a module on the other side.
pub fn vector_dual(m: &Representation) -> Representation {
    let maps = m.arrow_maps().iter().map(Matrix::transpose).collect();
    Representation::unchecked(m.algebra(), m.side().flip(), m.dims().to_vec(), maps).expect("dual shapes")
}

/// Dual of a map, `D f: D N -> D M` for `f: M -> N`.
pub fn vector_dual_map(f: &ModuleMap) -> ModuleMap {
    let maps = f.vertex_maps().iter().map(Matrix::transpose).collect();
    ModuleMap::unchecked(&vector_dual(f.codomain()), &vector_dual(f.domain()), maps).expect("dual shapes")
}

/// The injective envelope of the simple at `v`, realized as the dual of the projective on the
/// other side.
pub fn indec_injective(algebra: &Algebra, v: usize, side: Side) -> Result<Representation> {
    Ok(vector_dual(&indec_projective(algebra, v, side.flip())?))
}

/// A direct sum with its structure maps.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: Representation,
    pub injections: Vec<ModuleMap>,
    pub projections: Vec<ModuleMap>,
}

pub fn direct_sum(algebra: &Algebra, side: Side, summands: &[Representation]) -> Result<DirectSum> {
    for m in summands {
        if !m.algebra().same_underlying(algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if m.side() != side {
            return Err(Error::SideMismatch("summands on different sides".into()));
        }
    }
    let act = acting(algebra, side);
    let field = algebra.field();
    let n = algebra.num_vertices();
    let dims: Vec<usize> = (0..n).map(|v| summands.iter().map(|m| m.dim_at(v)).sum()).collect();
    let maps = (0..act.num_arrows())
        .map(|a| {
            let blocks: Vec<&Matrix> = summands.iter().map(|m| m.arrow_map(a)).collect();
            Matrix::block_diag(field, &blocks)
        })
        .collect();
    let module = Representation::unchecked(algebra, side, dims.clone(), maps)?;
    let mut injections = Vec::with_capacity(summands.len());
    let mut projections = Vec::with_capacity(summands.len());
    let mut offsets = vec![0usize; n];
    for m in summands {
        let mut inj = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for v in 0..n {
            let d = m.dim_at(v);
            let mut i = Matrix::zeros(field, dims[v], d);
            i.paste(offsets[v], 0, &Matrix::identity(field, d));
            proj.push(i.transpose());
            inj.push(i);
            offsets[v] += d;
        }
        injections.push(ModuleMap::unchecked(m, &module, inj)?);
        projections.push(ModuleMap::unchecked(&module, m, proj)?);
    }
    Ok(DirectSum { module, injections, projections })
}

/// `⊕_v P(v)`, the regular module of a basic algebra.
pub fn regular_module(algebra: &Algebra, side: Side) -> Representation {
    let ps: Vec<Representation> = (0..algebra.num_vertices())
        .map(|v| indec_projective(algebra, v, side).expect("vertex in range"))
        .collect();
    direct_sum(algebra, side, &ps).expect("same algebra").module
}

/// `f_1 ⊕ ... ⊕ f_k` between the given direct sums.
pub fn direct_sum_map(source: &DirectSum, target: &DirectSum, parts: &[ModuleMap]) -> Result<ModuleMap> {
    if parts.len() != source.injections.len() || parts.len() != target.injections.len() {
        return Err(Error::InvalidMap("wrong number of components".into()));
    }
    let mut total = ModuleMap::zero(&source.module, &target.module);
    for (k, f) in parts.iter().enumerate() {
        let piece = target.injections[k].compose(&f.compose(&source.projections[k])?)?;
        total = total.add(&piece)?;
    }
    Ok(total)
}

/// Sum of the images of all arrow maps, i.e. `J·M`.
pub fn radical(m: &Representation) -> Submodule {
    let full: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::full(m.field(), d)).collect();
    Submodule::unchecked(m, m.arrow_images(&full))
}

/// Joint kernel of all arrows leaving each vertex.
pub fn socle(m: &Representation) -> Submodule {
    let act = m.acting();
    let mut spaces: Vec<Subspace> = m.dims().iter().map(|&d| Subspace::full(m.field(), d)).collect();
    for a in 0..act.num_arrows() {
        let s = act.arrow_source(a);
        spaces[s] = spaces[s].intersection(&m.arrow_map(a).kernel_basis()).expect("same ambient");
    }
    Submodule::unchecked(m, spaces)
}

/// `M / JM` with its projection.
pub fn top(m: &Representation) -> (Representation, ModuleMap) {
    radical(m).quotient()
}
