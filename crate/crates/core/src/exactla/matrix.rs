use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::field::{Arith, Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Entries {
    Prime(Vec<u64>),
    Rational(Vec<BigRational>),
}

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Entries,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|s| !field.contains(s)) {
            return Err(Error::DimensionMismatch(format!("entry {bad:?} does not lie in {field}")));
        }
        let entries = arith!(&field, ar => ar.wrap(entries.iter().map(|s| ar.unwrap_scalar(s)).collect()));
        Ok(Matrix { field, rows, cols, entries })
    }

    /// Builds a matrix from small integers (reduced into the field).
    pub fn from_ints(field: Field, rows: usize, cols: usize, values: &[i64]) -> Matrix {
        assert_eq!(values.len(), rows * cols, "from_ints: wrong entry count");
        let entries = values.iter().map(|v| field.from_i64(*v)).collect();
        Matrix::new(field, rows, cols, entries).expect("entries are reduced")
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        let entries = arith!(&field, ar => ar.wrap(vec![ar.zero(); rows * cols]));
        Matrix { field, rows, cols, entries }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        arith!(&field, ar => {
            let d = ar.slice_mut(&mut m.entries);
            for i in 0..n {
                d[i * n + i] = ar.one();
            }
        });
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows && c < self.cols);
        arith!(&self.field, ar => ar.wrap_scalar(ar.slice(&self.entries)[r * self.cols + c].clone()))
    }

    pub fn set(&mut self, r: usize, c: usize, s: &Scalar) {
        assert!(r < self.rows && c < self.cols);
        let cols = self.cols;
        arith!(&self.field, ar => {
            let v = ar.unwrap_scalar(s);
            ar.slice_mut(&mut self.entries)[r * cols + c] = v;
        });
    }

    /// All entries in row-major order.
    pub fn entries(&self) -> Vec<Scalar> {
        arith!(&self.field, ar => ar.slice(&self.entries).iter().map(|e| ar.wrap_scalar(e.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        arith!(&self.field, ar => ar.slice(&self.entries).iter().all(|e| ar.is_zero(e)))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn transpose(&self) -> Matrix {
        let (r, c) = (self.rows, self.cols);
        let entries = arith!(&self.field, ar => {
            let d = ar.slice(&self.entries);
            let mut out = Vec::with_capacity(r * c);
            for j in 0..c {
                for i in 0..r {
                    out.push(d[i * c + j].clone());
                }
            }
            ar.wrap(out)
        });
        Matrix { field: self.field, rows: c, cols: r, entries }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let entries = arith!(&self.field, ar => {
            let a = ar.slice(&self.entries);
            let b = ar.slice(&other.entries);
            let mut out = vec![ar.zero(); n * m];
            for i in 0..n {
                for l in 0..k {
                    let x = &a[i * k + l];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for j in 0..m {
                        let y = &b[l * m + j];
                        if !ar.is_zero(y) {
                            out[i * m + j] = ar.add(&out[i * m + j], &ar.mul(x, y));
                        }
                    }
                }
            }
            ar.wrap(out)
        });
        Ok(Matrix { field: self.field, rows: n, cols: m, entries })
    }

    fn zip_with(&self, other: &Matrix, sub: bool) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot combine {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = arith!(&self.field, ar => {
            let a = ar.slice(&self.entries);
            let b = ar.slice(&other.entries);
            ar.wrap(a.iter().zip(b).map(|(x, y)| if sub { ar.sub(x, y) } else { ar.add(x, y) }).collect())
        });
        Ok(Matrix { field: self.field, rows: self.rows, cols: self.cols, entries })
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, false)
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, true)
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let entries = arith!(&self.field, ar => {
            let f = ar.unwrap_scalar(s);
            ar.wrap(ar.slice(&self.entries).iter().map(|x| ar.mul(&f, x)).collect())
        });
        Matrix { field: self.field, rows: self.rows, cols: self.cols, entries }
    }

    /// Places the blocks side by side. All blocks need the same row count.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack: row count mismatch");
            out.paste(0, c0, b);
            c0 += b.cols;
        }
        out
    }

    /// Stacks the blocks vertically. All blocks need the same column count.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut entries = arith!(&field, ar => ar.wrap(Vec::with_capacity(rows * cols)));
        arith!(&field, ar => {
            let out = ar.slice_mut(&mut entries);
            for b in blocks {
                assert_eq!(b.cols, cols, "vstack: column count mismatch");
                assert_eq!(b.field, field, "vstack: field mismatch");
                out.extend_from_slice(ar.slice(&b.entries));
            }
        });
        Matrix { field, rows, cols, entries }
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "paste out of range");
        assert_eq!(self.field, block.field);
        let cols = self.cols;
        arith!(&self.field, ar => {
            let src = ar.slice(&block.entries).to_vec();
            let dst = ar.slice_mut(&mut self.entries);
            for i in 0..block.rows {
                for j in 0..block.cols {
                    dst[(r0 + i) * cols + c0 + j] = src[i * block.cols + j].clone();
                }
            }
        });
    }

    /// Adds `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols, "add_block out of range");
        assert_eq!(self.field, block.field);
        let cols = self.cols;
        arith!(&self.field, ar => {
            let src = ar.slice(&block.entries).to_vec();
            let dst = ar.slice_mut(&mut self.entries);
            for i in 0..block.rows {
                for j in 0..block.cols {
                    let at = (r0 + i) * cols + c0 + j;
                    dst[at] = ar.add(&dst[at], &src[i * block.cols + j]);
                }
            }
        });
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "submatrix out of range");
        let entries = arith!(&self.field, ar => {
            let d = ar.slice(&self.entries);
            let mut out = Vec::with_capacity(rows * cols);
            for i in r0..r0 + rows {
                out.extend_from_slice(&d[i * self.cols + c0..i * self.cols + c0 + cols]);
            }
            ar.wrap(out)
        });
        Matrix { field: self.field, rows, cols, entries }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let entries = arith!(&self.field, ar => {
            let d = ar.slice(&self.entries);
            let mut out = Vec::with_capacity(idx.len() * self.cols);
            for &i in idx {
                out.extend_from_slice(&d[i * self.cols..(i + 1) * self.cols]);
            }
            ar.wrap(out)
        });
        Matrix { field: self.field, rows: idx.len(), cols: self.cols, entries }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        self.transpose().select_rows(idx).transpose()
    }

    pub fn row(&self, i: usize) -> Matrix {
        self.submatrix(i, 1, 0, self.cols)
    }

    pub fn col(&self, j: usize) -> Matrix {
        self.submatrix(0, self.rows, j, 1)
    }

    /// Reinterprets the entries with a new shape (row-major order preserved).
    pub fn reshape(&self, rows: usize, cols: usize) -> Matrix {
        assert_eq!(rows * cols, self.rows * self.cols, "reshape: size mismatch");
        Matrix { field: self.field, rows, cols, entries: self.entries.clone() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.field, other.field);
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let entries = arith!(&self.field, ar => {
            let a = ar.slice(&self.entries);
            let b = ar.slice(&other.entries);
            let mut out = vec![ar.zero(); r * c];
            for i in 0..self.rows {
                for j in 0..self.cols {
                    let x = &a[i * self.cols + j];
                    if ar.is_zero(x) {
                        continue;
                    }
                    for k in 0..other.rows {
                        for l in 0..other.cols {
                            out[(i * other.rows + k) * c + j * other.cols + l] =
                                ar.mul(x, &b[k * other.cols + l]);
                        }
                    }
                }
            }
            ar.wrap(out)
        });
        Matrix { field: self.field, rows: r, cols: c, entries }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = arith!(&self.field, ar => rref_in_place(ar, ar.slice_mut(&mut m.entries), self.rows, self.cols));
        (m, pivots)
    }

    /// Reduced row echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let (m, p) = self.rref_with_pivots();
        (m, p.len())
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let (r, pivots) = self.rref_with_pivots();
        let n = self.cols;
        let mut is_pivot = vec![None; n];
        for (i, &p) in pivots.iter().enumerate() {
            is_pivot[p] = Some(i);
        }
        let free: Vec<usize> = (0..n).filter(|c| is_pivot[*c].is_none()).collect();
        let mut basis = Matrix::zeros(self.field, free.len(), n);
        arith!(&self.field, ar => {
            let rd = ar.slice(&r.entries).to_vec();
            let bd = ar.slice_mut(&mut basis.entries);
            for (k, &f) in free.iter().enumerate() {
                bd[k * n + f] = ar.one();
                for (i, &p) in pivots.iter().enumerate() {
                    bd[k * n + p] = ar.neg(&rd[i * n + f]);
                }
            }
        });
        Subspace::from_rows(basis)
    }

    /// Some `x` with `self * x = b` (`b` may have several columns), or `None` if unsolvable.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.check_field(b)?;
        if b.rows != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, system has {}",
                b.rows, self.rows
            )));
        }
        let n = self.cols;
        let k = b.cols;
        let aug = Matrix::hstack(self.field, self.rows, &[self, b]);
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, k);
        arith!(&self.field, ar => {
            let rd = ar.slice(&r.entries).to_vec();
            let xd = ar.slice_mut(&mut x.entries);
            for (i, &p) in pivots.iter().enumerate() {
                for j in 0..k {
                    xd[p * k + j] = rd[i * (n + k) + n + j].clone();
                }
            }
        });
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        if self.rank() != self.rows {
            return None;
        }
        self.solve_right(&Matrix::identity(self.field, self.rows)).ok().flatten()
    }

    /// Span of the rows.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_rows(self.clone())
    }

    /// Span of the columns.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_rows(self.transpose())
    }
}

pub(crate) fn rref_in_place<A: Arith>(ar: &A, d: &mut [A::E], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !ar.is_zero(&d[i * cols + c])) else {
            continue;
        };
        if piv != r {
            for j in 0..cols {
                d.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = ar.inv(&d[r * cols + c]);
        for j in c..cols {
            d[r * cols + j] = ar.mul(&inv, &d[r * cols + j]);
        }
        let pivot_row: Vec<A::E> = d[r * cols + c..(r + 1) * cols].to_vec();
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = d[i * cols + c].clone();
            if ar.is_zero(&f) {
                continue;
            }
            for (off, pv) in pivot_row.iter().enumerate() {
                if !ar.is_zero(pv) {
                    let idx = i * cols + c + off;
                    d[idx] = ar.sub_mul(&d[idx], &f, pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix product shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.try_add(rhs).expect("matrix sum shape mismatch")
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.try_sub(rhs).expect("matrix difference shape mismatch")
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    #[test]
    fn rref_duplicate_rows_f2() {
        let m = Matrix::from_ints(f2(), 2, 2, &[1, 1, 1, 1]);
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::from_ints(f2(), 2, 2, &[1, 1, 0, 0]));
    }

    #[test]
    fn rref_identity_rational() {
        let id = Matrix::identity(Field::Rational, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn rref_scales_pivot() {
        let m = Matrix::from_ints(Field::Rational, 1, 2, &[2, 4]);
        assert_eq!(m.rref(), (Matrix::from_ints(Field::Rational, 1, 2, &[1, 2]), 1));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Field::Rational, 2).kernel_basis().dim(), 0);
        let k = Matrix::from_ints(Field::Rational, 1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k, Matrix::from_ints(Field::Rational, 1, 2, &[1, -1]).row_space());
        let z = Matrix::zeros(Field::Rational, 2, 3).kernel_basis();
        assert_eq!(z.dim(), 3);
    }

    #[test]
    fn solve_examples() {
        let f = f2();
        let id = Matrix::identity(f, 2);
        let b = Matrix::from_ints(f, 2, 1, &[1, 0]);
        assert_eq!(id.solve_right(&b).unwrap(), Some(b.clone()));
        let a = Matrix::from_ints(f, 1, 2, &[1, 1]);
        let x = a.solve_right(&Matrix::from_ints(f, 1, 1, &[1])).unwrap().unwrap();
        assert_eq!(&a * &x, Matrix::from_ints(f, 1, 1, &[1]));
        let z = Matrix::zeros(f, 2, 2);
        assert_eq!(z.solve_right(&b).unwrap(), None);
        assert!(z.solve_right(&Matrix::zeros(f, 3, 1)).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Matrix::identity(f2(), 2);
        let b = Matrix::identity(Field::Rational, 2);
        assert!(matches!(a.try_mul(&b), Err(Error::FieldMismatch(..))));
        assert!(a.solve_right(&b).is_err());
    }

    #[test]
    fn inverse_and_kron() {
        let q = Field::Rational;
        let m = Matrix::from_ints(q, 2, 2, &[1, 2, 3, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(q, 2));
        let k = Matrix::identity(q, 2).kron(&m);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.submatrix(2, 2, 2, 2), m);
        assert!(k.submatrix(0, 2, 2, 2).is_zero());
    }
}
