use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::quiver::{Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
struct PathClass {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

#[derive(Debug, PartialEq, Eq)]
struct AlgebraData {
    field: Field,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilpotency_bound: usize,
    /// Every path of at least this length is zero in the algebra.
    radical_length: usize,
    basis: Vec<PathClass>,
    /// `blocks[u][w]`: basis paths from `u` to `w`.
    blocks: Vec<Vec<Vec<usize>>>,
    /// `left_action[a][v]`: postcomposition with arrow `a`, from `block[v][s(a)]` to `block[v][t(a)]`.
    left_action: Vec<Vec<Matrix>>,
    /// `right_action[a][v]`: precomposition with arrow `a`, from `block[t(a)][v]` to `block[s(a)][v]`.
    right_action: Vec<Vec<Matrix>>,
    /// Number of paths in the quiver when it is acyclic.
    free_path_count: Option<usize>,
}

/// A finite-dimensional bound quiver algebra `kQ/I`, or its opposite.
///
/// Conventions: the path "first `p`, then `q`" is the product `q·p`, and an arrow `a: u -> v`
/// satisfies `a = e_v·a·e_u`. A left module therefore carries its arrow maps along the arrows,
/// a right module against them. The opposite algebra shares its path basis with the original
/// (paths are read backwards), so right modules over an algebra and left modules over its
/// opposite have literally the same data.
#[derive(Debug, Clone)]
pub struct Algebra {
    data: Arc<AlgebraData>,
    flipped: bool,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.flipped == other.flipped && (Arc::ptr_eq(&self.data, &other.data) || self.data == other.data)
    }
}

impl Eq for Algebra {}

impl Algebra {
    /// Enumerates paths by length, reduces them modulo the two-sided ideal generated by the
    /// relations, and stops at the first length `m <= nilpotency_bound` at which every path of
    /// length `m` lies in the ideal (modulo longer paths).
    pub fn build(quiver: Quiver, relations: Vec<Relation>, field: Field, nilpotency_bound: usize) -> Result<Algebra> {
        for r in &relations {
            r.validate(&quiver)?;
            if r.terms.iter().any(|(c, _)| !field.contains(c)) {
                return Err(Error::MalformedRelation("coefficient outside the field".into()));
            }
        }
        let data = build_data(quiver, relations, field, nilpotency_bound)?;
        Ok(Algebra { data: Arc::new(data), flipped: false })
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { data: self.data.clone(), flipped: !self.flipped }
    }

    /// Whether this is the opposite of the algebra originally built.
    pub fn is_opposite(&self) -> bool {
        self.flipped
    }

    pub fn field(&self) -> Field {
        self.data.field
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.data.nilpotency_bound
    }

    /// Paths of this length or longer vanish.
    pub fn radical_length(&self) -> usize {
        self.data.radical_length
    }

    pub fn num_vertices(&self) -> usize {
        self.data.quiver.num_vertices()
    }

    pub fn num_arrows(&self) -> usize {
        self.data.quiver.arrows().len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.data.quiver.vertices()[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.data.quiver.vertex_index(name)
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.data.quiver.arrow_index(name)
    }

    pub fn arrow_name(&self, a: usize) -> &str {
        &self.data.quiver.arrows()[a].name
    }

    pub fn arrow_source(&self, a: usize) -> usize {
        let arr = &self.data.quiver.arrows()[a];
        if self.flipped {
            arr.target
        } else {
            arr.source
        }
    }

    pub fn arrow_target(&self, a: usize) -> usize {
        let arr = &self.data.quiver.arrows()[a];
        if self.flipped {
            arr.source
        } else {
            arr.target
        }
    }

    /// The quiver in this algebra's orientation.
    pub fn quiver(&self) -> Quiver {
        if self.flipped {
            self.data.quiver.opposite()
        } else {
            self.data.quiver.clone()
        }
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        self.quiver().arrows().to_vec()
    }

    /// Relations in this algebra's orientation.
    pub fn relations(&self) -> Vec<Relation> {
        if self.flipped {
            self.data.relations.iter().map(Relation::reversed).collect()
        } else {
            self.data.relations.clone()
        }
    }

    pub fn dim(&self) -> usize {
        self.data.basis.len()
    }

    /// Dimension of the arrow ideal, which is the Jacobson radical for a bound quiver algebra.
    pub fn jacobson_radical_dim(&self) -> usize {
        self.dim() - self.num_vertices()
    }

    /// Indices of the basis paths from `u` to `w`.
    pub fn basis_block(&self, u: usize, w: usize) -> &[usize] {
        if self.flipped {
            &self.data.blocks[w][u]
        } else {
            &self.data.blocks[u][w]
        }
    }

    /// Basis paths from `u` to `w` as arrow sequences in traversal order.
    pub fn path_basis(&self, u: usize, w: usize) -> Vec<Vec<usize>> {
        self.basis_block(u, w).iter().map(|&i| self.basis_path(i)).collect()
    }

    /// Arrow sequence (traversal order, this orientation) of a basis element.
    pub fn basis_path(&self, idx: usize) -> Vec<usize> {
        let p = &self.data.basis[idx].arrows;
        if self.flipped {
            p.iter().rev().copied().collect()
        } else {
            p.clone()
        }
    }

    /// Source and target (this orientation) of a basis element.
    pub fn basis_endpoints(&self, idx: usize) -> (usize, usize) {
        let b = &self.data.basis[idx];
        if self.flipped {
            (b.target, b.source)
        } else {
            (b.source, b.target)
        }
    }

    /// Position of the trivial path `e_v` inside `basis_block(v, v)`.
    pub fn idempotent_position(&self, v: usize) -> usize {
        self.basis_block(v, v)
            .iter()
            .position(|&i| self.data.basis[i].arrows.is_empty())
            .expect("trivial paths are never reduced away")
    }

    /// Left multiplication by arrow `a`, as a matrix from `basis_block(v, s(a))` to
    /// `basis_block(v, t(a))`. These are the arrow maps of the projective `Λe_v`.
    pub fn left_action(&self, a: usize, v: usize) -> &Matrix {
        if self.flipped {
            &self.data.right_action[a][v]
        } else {
            &self.data.left_action[a][v]
        }
    }

    /// Right multiplication by arrow `a`, from `basis_block(t(a), v)` to `basis_block(s(a), v)`.
    pub fn right_action(&self, a: usize, v: usize) -> &Matrix {
        if self.flipped {
            &self.data.left_action[a][v]
        } else {
            &self.data.right_action[a][v]
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.data.free_path_count.is_some()
    }

    /// Path algebra of an acyclic quiver with no effective relations.
    pub fn is_hereditary(&self) -> bool {
        self.data.free_path_count == Some(self.dim())
    }

    /// The same algebra viewed from `self`'s orientation: `true` if `other` is `self` or its
    /// opposite.
    pub fn same_underlying(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

fn enumerate_next(quiver: &Quiver, prev: &[PathClass]) -> Vec<PathClass> {
    let mut next = Vec::new();
    for p in prev {
        for (ai, a) in quiver.arrows().iter().enumerate() {
            if a.source == p.target {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                next.push(PathClass { source: p.source, target: a.target, arrows });
            }
        }
    }
    next
}

/// Column layout of one `(u, w)` block while reducing modulo the ideal.
struct Block {
    /// Paths ordered longest first, then lexicographically.
    columns: Vec<PathClass>,
    index: BTreeMap<Vec<usize>, usize>,
    ideal: Subspace,
}

fn build_data(quiver: Quiver, relations: Vec<Relation>, field: Field, bound: usize) -> Result<AlgebraData> {
    let n = quiver.num_vertices();
    let mut by_len: Vec<Vec<PathClass>> = vec![(0..n)
        .map(|v| PathClass { source: v, target: v, arrows: Vec::new() })
        .collect()];
    let rel_info: Vec<(usize, usize, usize, &Relation)> = relations
        .iter()
        .filter_map(|r| {
            let (s, t) = r.validate(&quiver).ok().flatten()?;
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min()?;
            Some((s, t, min_len, r))
        })
        .collect();

    for m in 1..=bound.max(1) {
        while by_len.len() <= m {
            let next = enumerate_next(&quiver, by_len.last().unwrap());
            by_len.push(next);
        }
        let blocks = reduce_blocks(&quiver, &by_len, &rel_info, field, m);
        let all_top_in_ideal = by_len[m].iter().all(|p| {
            let b = &blocks[p.source][p.target];
            let mut e = Matrix::zeros(field, 1, b.columns.len());
            e.set(0, b.index[&p.arrows], &field.one());
            b.ideal.contains_vector(&e)
        });
        if all_top_in_ideal {
            return Ok(finalize(quiver, relations, field, bound, m, blocks));
        }
        if m == bound {
            break;
        }
    }
    Err(Error::NotFiniteDimensional(bound))
}

fn reduce_blocks(
    quiver: &Quiver,
    by_len: &[Vec<PathClass>],
    rels: &[(usize, usize, usize, &Relation)],
    field: Field,
    m: usize,
) -> Vec<Vec<Block>> {
    let n = quiver.num_vertices();
    let mut columns: Vec<Vec<Vec<PathClass>>> = vec![vec![Vec::new(); n]; n];
    for len in (0..=m).rev() {
        let mut ps: Vec<&PathClass> = by_len[len].iter().collect();
        ps.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        for p in ps {
            columns[p.source][p.target].push(p.clone());
        }
    }
    let mut generators: Vec<Vec<Vec<Vec<Scalar>>>> = vec![vec![Vec::new(); n]; n];
    let indices: Vec<Vec<BTreeMap<Vec<usize>, usize>>> = columns
        .iter()
        .map(|row| {
            row.iter()
                .map(|cols| cols.iter().enumerate().map(|(i, p)| (p.arrows.clone(), i)).collect())
                .collect()
        })
        .collect();
    for &(rs, rt, min_len, rel) in rels {
        if min_len > m {
            continue;
        }
        let slack = m - min_len;
        // prefix: runs before the relation, ends at rs; suffix: runs after, starts at rt
        for pre_len in 0..=slack {
            for pre in by_len[pre_len].iter().filter(|p| p.target == rs) {
                for suf_len in 0..=slack - pre_len {
                    for suf in by_len[suf_len].iter().filter(|p| p.source == rt) {
                        let (u, w) = (pre.source, suf.target);
                        let width = columns[u][w].len();
                        let mut v = vec![field.zero(); width];
                        for (c, path) in &rel.terms {
                            let total = pre.arrows.len() + path.len() + suf.arrows.len();
                            if total > m {
                                continue;
                            }
                            let mut full = pre.arrows.clone();
                            full.extend_from_slice(path);
                            full.extend_from_slice(&suf.arrows);
                            let col = indices[u][w][&full];
                            v[col] = field.add(&v[col], c);
                        }
                        if v.iter().any(|x| !x.is_zero()) {
                            generators[u][w].push(v);
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::with_capacity(n);
    for (u, (col_row, gen_row)) in columns.into_iter().zip(generators).enumerate() {
        let mut row = Vec::with_capacity(n);
        for (w, (cols, gens)) in col_row.into_iter().zip(gen_row).enumerate() {
            let width = cols.len();
            let rows = gens.len();
            let flat: Vec<Scalar> = gens.into_iter().flatten().collect();
            let ideal = Subspace::from_rows(Matrix::new(field, rows, width, flat).expect("generator shape"));
            row.push(Block { columns: cols, index: indices[u][w].clone(), ideal });
        }
        out.push(row);
    }
    out
}

fn finalize(
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    bound: usize,
    m: usize,
    blocks: Vec<Vec<Block>>,
) -> AlgebraData {
    let n = quiver.num_vertices();
    let mut basis = Vec::new();
    let mut basis_blocks = vec![vec![Vec::new(); n]; n];
    // position of each column inside the block basis, None for pivot (reducible) columns
    let mut local: Vec<Vec<Vec<Option<usize>>>> = vec![vec![Vec::new(); n]; n];
    for u in 0..n {
        for w in 0..n {
            let b = &blocks[u][w];
            let mut is_pivot = vec![false; b.columns.len()];
            for &p in b.ideal.pivots() {
                is_pivot[p] = true;
            }
            let mut pos = Vec::with_capacity(b.columns.len());
            // basis listed shortest first
            let mut order: Vec<usize> = (0..b.columns.len()).filter(|c| !is_pivot[*c]).collect();
            order.reverse();
            pos.resize(b.columns.len(), None);
            for (k, &c) in order.iter().enumerate() {
                pos[c] = Some(k);
                basis_blocks[u][w].push(basis.len());
                basis.push(b.columns[c].clone());
            }
            local[u][w] = pos;
        }
    }
    let normal_form = |u: usize, w: usize, path: &[usize]| -> Vec<Scalar> {
        let width = basis_blocks[u][w].len();
        let mut out = vec![field.zero(); width];
        if path.len() >= m {
            return out;
        }
        let b = &blocks[u][w];
        let col = b.index[path];
        if let Some(k) = local[u][w][col] {
            out[k] = field.one();
            return out;
        }
        let row = b.ideal.pivots().iter().position(|&p| p == col).expect("reducible column is a pivot");
        for (c, pos) in local[u][w].iter().enumerate() {
            if let Some(k) = pos {
                let coeff = b.ideal.basis().get(row, c);
                out[*k] = field.neg(&coeff);
            }
        }
        out
    };
    let action = |from: (usize, usize), to: (usize, usize), f: &dyn Fn(&[usize]) -> Vec<usize>| -> Matrix {
        let src = &basis_blocks[from.0][from.1];
        let mut mat = Matrix::zeros(field, basis_blocks[to.0][to.1].len(), src.len());
        for (j, &bi) in src.iter().enumerate() {
            let prod = f(&basis[bi].arrows);
            let nf = normal_form(to.0, to.1, &prod);
            for (i, s) in nf.iter().enumerate() {
                mat.set(i, j, s);
            }
        }
        mat
    };
    let arrows = quiver.arrows().to_vec();
    let mut left_action = Vec::with_capacity(arrows.len());
    let mut right_action = Vec::with_capacity(arrows.len());
    for (ai, a) in arrows.iter().enumerate() {
        let mut la = Vec::with_capacity(n);
        let mut ra = Vec::with_capacity(n);
        for v in 0..n {
            let append = |p: &[usize]| {
                let mut q = p.to_vec();
                q.push(ai);
                q
            };
            la.push(action((v, a.source), (v, a.target), &append));
            let prepend = |p: &[usize]| {
                let mut q = vec![ai];
                q.extend_from_slice(p);
                q
            };
            ra.push(action((a.target, v), (a.source, v), &prepend));
        }
        left_action.push(la);
        right_action.push(ra);
    }
    let free_path_count = quiver.topological_order().map(|order| count_paths(&quiver, &order));
    AlgebraData {
        field,
        quiver,
        relations,
        nilpotency_bound: bound,
        radical_length: m,
        basis,
        blocks: basis_blocks,
        left_action,
        right_action,
        free_path_count,
    }
}

fn count_paths(quiver: &Quiver, order: &[usize]) -> usize {
    // paths starting at v = 1 + sum over arrows out of v of paths starting at the target
    let n = quiver.num_vertices();
    let mut from = vec![0usize; n];
    for &v in order.iter().rev() {
        from[v] = 1 + quiver.arrows().iter().filter(|a| a.source == v).map(|a| from[a.target]).sum::<usize>();
    }
    from.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn a2_path_basis() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = Algebra::build(q, vec![], f5(), 10).unwrap();
        assert_eq!(alg.dim(), 3);
        assert_eq!(alg.path_basis(0, 1), vec![vec![0]]);
        assert_eq!(alg.path_basis(1, 0), Vec::<Vec<usize>>::new());
        assert!(alg.is_hereditary());
        assert_eq!(alg.jacobson_radical_dim(), 1);
    }

    #[test]
    fn dual_numbers() {
        let f = f5();
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let r = Relation::from_names(&q, &[(f.one(), &["x", "x"])]).unwrap();
        let alg = Algebra::build(q, vec![r], f, 10).unwrap();
        assert_eq!(alg.dim(), 2);
        assert_eq!(alg.radical_length(), 2);
        assert!(!alg.is_acyclic());
        assert!(!alg.is_hereditary());
    }

    #[test]
    fn free_loop_is_infinite() {
        let q = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        assert_eq!(Algebra::build(q, vec![], f5(), 10), Err(Error::NotFiniteDimensional(10)));
    }

    #[test]
    fn commutativity_relation() {
        let f = f5();
        let q = Quiver::new(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")])
            .unwrap();
        let r = Relation::from_names(&q, &[(f.one(), &["a", "b"]), (f.from_i64(-1), &["c", "d"])]).unwrap();
        let alg = Algebra::build(q, vec![r], f, 10).unwrap();
        // 4 idempotents, 4 arrows, one surviving length-2 class
        assert_eq!(alg.dim(), 9);
        assert!(!alg.is_hereditary());
        // cd reduces to ab: right multiplying e_4-paths...
        let la = alg.left_action(3, 0); // d acting on paths 1 -> 3
        assert_eq!(la.rows(), 1);
        assert_eq!(la.get(0, 0), f.one());
    }

    #[test]
    fn malformed_relations() {
        let f = f5();
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap();
        let short = Relation::from_names(&q, &[(f.one(), &["a"])]).unwrap();
        assert!(matches!(Algebra::build(q.clone(), vec![short], f, 5), Err(Error::MalformedRelation(_))));
        let broken = Relation::from_names(&q, &[(f.one(), &["a", "b"])]).unwrap();
        assert!(matches!(Algebra::build(q, vec![broken], f, 5), Err(Error::MalformedRelation(_))));
    }

    #[test]
    fn opposite_is_involution() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let alg = Algebra::build(q, vec![], f5(), 10).unwrap();
        let op = alg.opposite();
        assert_eq!(op.arrow_source(0), 1);
        assert_eq!(op.arrow_target(0), 0);
        assert_eq!(op.opposite(), alg);
        assert_ne!(op, alg);
        assert_eq!(op.path_basis(1, 0), vec![vec![0]]);
    }
}
