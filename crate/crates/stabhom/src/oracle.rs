//! Independent oracles used by the laws.

use stabhom_core::algebra::Representation;
use stabhom_core::exactla::{Field, Matrix, Scalar, Subspace};

/// `dim Ext¹(m, n)` from extensions `0 -> n -> E -> m -> 0` with `E_v = n_v ⊕ m_v` and arrow
/// maps `[[n_α, d_α], [0, m_α]]`. The relations on `E` are linear in `d`, so this is cocycles
/// modulo coboundaries `d_α = n_α h_s − h_t m_α`; no projective cover is involved.
pub fn cocycle_ext_dim(m: &Representation, n: &Representation) -> usize {
    let f = m.field();
    let acting = m.acting();
    let shapes: Vec<(usize, usize)> = (0..acting.num_arrows())
        .map(|a| (n.dim_at(acting.arrow_target(a)), m.dim_at(acting.arrow_source(a))))
        .collect();
    let vars: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let unflatten = |x: &[Scalar]| -> Vec<Matrix> {
        let mut pos = 0;
        shapes
            .iter()
            .map(|&(r, c)| {
                let block = Matrix::new(f, r, c, x[pos..pos + r * c].to_vec()).expect("shape");
                pos += r * c;
                block
            })
            .collect()
    };
    let zero = vec![f.zero(); vars];
    let eqs = relation_values(m, n, &unflatten(&zero)).len();
    let cols: Vec<Matrix> = (0..vars)
        .map(|i| {
            let mut x = zero.clone();
            x[i] = f.one();
            Matrix::new(f, eqs, 1, relation_values(m, n, &unflatten(&x))).expect("shape")
        })
        .collect();
    let refs: Vec<&Matrix> = cols.iter().collect();
    let cocycles = Matrix::hstack(f, eqs, &refs).kernel_basis();

    let mut rows = Vec::new();
    for v in 0..acting.num_vertices() {
        for i in 0..n.dim_at(v) * m.dim_at(v) {
            let mut h = Matrix::zeros(f, n.dim_at(v), m.dim_at(v));
            h.set(i / m.dim_at(v), i % m.dim_at(v), &f.one());
            let mut row = Vec::with_capacity(vars);
            for a in 0..acting.num_arrows() {
                let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
                let hs = if s == v { h.clone() } else { Matrix::zeros(f, n.dim_at(s), m.dim_at(s)) };
                let ht = if t == v { h.clone() } else { Matrix::zeros(f, n.dim_at(t), m.dim_at(t)) };
                row.extend((&(n.arrow_map(a) * &hs) - &(&ht * m.arrow_map(a))).entries());
            }
            rows.push(Matrix::new(f, 1, vars, row).expect("shape"));
        }
    }
    let refs: Vec<&Matrix> = rows.iter().collect();
    let boundaries = Subspace::from_rows(Matrix::vstack(f, vars, &refs));
    cocycles.dim() - boundaries.dim()
}

fn relation_values(m: &Representation, n: &Representation, d: &[Matrix]) -> Vec<Scalar> {
    let acting = m.acting();
    let f: Field = m.field();
    let dims: Vec<usize> = (0..acting.num_vertices()).map(|v| n.dim_at(v) + m.dim_at(v)).collect();
    let maps: Vec<Matrix> = (0..acting.num_arrows())
        .map(|a| {
            let (s, t) = (acting.arrow_source(a), acting.arrow_target(a));
            let mut e = Matrix::zeros(f, dims[t], dims[s]);
            e.paste(0, 0, n.arrow_map(a));
            e.paste(0, n.dim_at(s), &d[a]);
            e.paste(n.dim_at(t), n.dim_at(s), m.arrow_map(a));
            e
        })
        .collect();
    let mut out = Vec::new();
    for rel in acting.relations() {
        let s = acting.arrow_source(rel.terms[0].1[0]);
        let t = acting.arrow_target(*rel.terms[0].1.last().expect("relations have length at least two"));
        let mut total = Matrix::zeros(f, dims[t], dims[s]);
        for (c, path) in &rel.terms {
            let mut p = Matrix::identity(f, dims[s]);
            for &a in path {
                p = &maps[a] * &p;
            }
            total = &total + &p.scale(c);
        }
        out.extend(total.submatrix(0, n.dim_at(t), n.dim_at(s), m.dim_at(s)).entries());
    }
    out
}
