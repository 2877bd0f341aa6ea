use alloc::vec::Vec;

use crate::algebra::{ModuleMap, Representation, Side};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Subspace};

/// `a ⊗_Λ b` for a right module `a` and a left module `b`, realized as the quotient of
/// `⊕_v a_v ⊗ b_v` by `(x·α) ⊗ y − x ⊗ (α·y)`.
#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub right: Representation,
    pub left: Representation,
    offsets: Vec<usize>,
    relations: Subspace,
    projection: Matrix,
    section: Matrix,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    /// Relation subspace inside the ambient `⊕_v a_v ⊗ b_v`.
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// Ambient -> tensor product.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// A right inverse of the projection.
    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// Offset of the `a_v ⊗ b_v` block in the ambient; `x_i ⊗ y_j` sits at `offset + i·dim b_v + j`.
    pub fn offset(&self, v: usize) -> usize {
        self.offsets[v]
    }
}

pub fn tensor(a: &Representation, b: &Representation) -> Result<TensorProduct> {
    if a.side() != Side::Right || b.side() != Side::Left {
        return Err(Error::SideMismatch("tensor needs a right module and a left module".into()));
    }
    if !a.algebra().same_underlying(b.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = a.field();
    let alg = b.algebra();
    let n = alg.num_vertices();
    let mut offsets = Vec::with_capacity(n);
    let mut total = 0;
    for v in 0..n {
        offsets.push(total);
        total += a.dim_at(v) * b.dim_at(v);
    }
    let mut gens = Vec::new();
    for al in 0..alg.num_arrows() {
        let (u, w) = (alg.arrow_source(al), alg.arrow_target(al));
        let (aw, bu) = (a.dim_at(w), b.dim_at(u));
        if aw * bu == 0 {
            continue;
        }
        // x ∈ a_w, y ∈ b_u: (x·α) ⊗ y in block u minus x ⊗ (α·y) in block w
        let mut r = Matrix::zeros(field, total, aw * bu);
        r.add_block(offsets[u], 0, &a.arrow_map(al).kron(&Matrix::identity(field, bu)));
        r.add_block(offsets[w], 0, &-&Matrix::identity(field, aw).kron(b.arrow_map(al)));
        gens.push(r);
    }
    let refs: Vec<&Matrix> = gens.iter().collect();
    let relations = Matrix::hstack(field, total, &refs).column_space();
    let projection = relations.quotient_projection();
    let section = relations.quotient_section();
    Ok(TensorProduct { right: a.clone(), left: b.clone(), offsets, relations, projection, section })
}

/// `f ⊗ g: src -> dst` for `f: src.right -> dst.right` and `g: src.left -> dst.left`.
pub fn tensor_map(src: &TensorProduct, dst: &TensorProduct, f: &ModuleMap, g: &ModuleMap) -> Result<Matrix> {
    if f.domain() != &src.right || f.codomain() != &dst.right || g.domain() != &src.left || g.codomain() != &dst.left {
        return Err(Error::InvalidMap("tensor_map: maps do not match the tensor products".into()));
    }
    let field = f.domain().field();
    let blocks: Vec<Matrix> = f.vertex_maps().iter().zip(g.vertex_maps()).map(|(x, y)| x.kron(y)).collect();
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let ambient = Matrix::block_diag(field, &refs);
    Ok(&(&dst.projection * &ambient) * &src.section)
}

/// `a ⊗ g` for a map `g` of left modules.
pub fn tensor_map_right(a: &Representation, g: &ModuleMap) -> Result<(TensorProduct, TensorProduct, Matrix)> {
    let src = tensor(a, g.domain())?;
    let dst = tensor(a, g.codomain())?;
    let m = tensor_map(&src, &dst, &ModuleMap::identity(a), g)?;
    Ok((src, dst, m))
}

/// `f ⊗ b` for a map `f` of right modules.
pub fn tensor_map_left(f: &ModuleMap, b: &Representation) -> Result<(TensorProduct, TensorProduct, Matrix)> {
    let src = tensor(f.domain(), b)?;
    let dst = tensor(f.codomain(), b)?;
    let m = tensor_map(&src, &dst, f, &ModuleMap::identity(b))?;
    Ok((src, dst, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{indec_projective, regular_module, simple, Algebra, Quiver};
    use crate::exactla::Field;

    fn a2() -> Algebra {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        Algebra::build(q, alloc::vec![], Field::prime(5).unwrap(), 10).unwrap()
    }

    #[test]
    fn worked_values() {
        let alg = a2();
        let sr2 = simple(&alg, 1, Side::Right).unwrap();
        let s2 = simple(&alg, 1, Side::Left).unwrap();
        assert_eq!(tensor(&sr2, &s2).unwrap().dim(), 1);
        let p1 = indec_projective(&alg, 0, Side::Left).unwrap();
        for v in 0..2 {
            let e = indec_projective(&alg, v, Side::Right).unwrap();
            assert_eq!(tensor(&e, &p1).unwrap().dim(), p1.dim_at(v));
        }
        let lam = regular_module(&alg, Side::Right);
        assert_eq!(tensor(&lam, &p1).unwrap().dim(), p1.total_dim());
        assert!(tensor(&s2, &sr2).is_err());
    }
}
