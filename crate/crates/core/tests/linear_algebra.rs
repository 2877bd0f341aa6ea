use proptest::prelude::*;
use stabhom_core::exactla::{Field, Matrix, Subspace};

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::prime(2).unwrap()),
        Just(Field::prime(5).unwrap()),
        Just(Field::Rational),
    ]
}

fn matrix_in(f: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Matrix::from_ints(f, rows, cols, &v))
}

fn matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..6, 0usize..6).prop_flat_map(|(f, r, c)| matrix_in(f, r, c))
}

fn two_subspaces() -> impl Strategy<Value = (Subspace, Subspace)> {
    (field(), 1usize..6, 0usize..5, 0usize..5).prop_flat_map(|(f, n, a, b)| {
        (matrix_in(f, a, n), matrix_in(f, b, n)).prop_map(|(x, y)| (Subspace::from_rows(x), Subspace::from_rows(y)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rank_nullity(m in matrix()) {
        prop_assert_eq!(m.kernel_basis().dim() + m.rank(), m.cols());
    }

    #[test]
    fn kernel_vectors_are_killed(m in matrix()) {
        let k = m.kernel_basis();
        let prod = &m * &k.basis_columns();
        prop_assert!(prod.entries().iter().all(|s| s.is_zero()));
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let (r, p) = m.rref_with_pivots();
        let (rr, pp) = r.rref_with_pivots();
        prop_assert_eq!(r, rr);
        prop_assert_eq!(p, pp);
    }

    #[test]
    fn dimension_formula((u, v) in two_subspaces()) {
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&v).unwrap());
        prop_assert!(u.contains(&i).unwrap() && v.contains(&i).unwrap());
    }

    #[test]
    fn solve_right_is_exact(
        (m, b) in (field(), 0usize..5, 0usize..5, 1usize..3)
            .prop_flat_map(|(f, r, c, k)| (matrix_in(f, r, c), matrix_in(f, r, k)))
    ) {
        match m.solve_right(&b).unwrap() {
            Some(x) => prop_assert_eq!(&m * &x, b),
            None => {
                // some column of b leaves the column space
                let cs = m.column_space();
                let bs = Subspace::from_columns(&b);
                prop_assert!(!cs.contains(&bs).unwrap());
            }
        }
    }

    #[test]
    fn inverse_when_full_rank(m in (field(), 1usize..5).prop_flat_map(|(f, n)| matrix_in(f, n, n))) {
        match m.inverse() {
            Some(inv) => prop_assert_eq!(&m * &inv, Matrix::identity(m.field(), m.rows())),
            None => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn quotient_section_splits(
        (u, n) in (field(), 1usize..6, 0usize..5)
            .prop_flat_map(|(f, n, a)| (matrix_in(f, a, n), Just(n)))
    ) {
        let s = Subspace::from_rows(u);
        let q = s.quotient_projection();
        let sec = s.quotient_section();
        prop_assert_eq!(q.rows() + s.dim(), n);
        prop_assert_eq!(&q * &sec, Matrix::identity(s.field(), n - s.dim()));
        prop_assert!((&q * &s.basis_columns()).entries().iter().all(|x| x.is_zero()));
    }
}

#[test]
fn rational_arithmetic_does_not_overflow() {
    // Hilbert matrix; the corner entry of its inverse is checked against sympy.
    let n = 8;
    let f = Field::Rational;
    let mut h = Matrix::zeros(f, n, n);
    for i in 0..n {
        for j in 0..n {
            h.set(i, j, &f.parse(&format!("1/{}", i + j + 1)).unwrap());
        }
    }
    let inv = h.inverse().unwrap();
    assert_eq!(&h * &inv, Matrix::identity(f, n));
    assert_eq!(f.format(&inv.get(n - 1, n - 1)), "176679360");
}
