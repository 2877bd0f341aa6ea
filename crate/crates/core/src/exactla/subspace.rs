use alloc::format;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A linear subspace of `k^n`, stored as the reduced row echelon basis (so equality is
/// structural equality).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Row space of `spanning` (rows need not be independent).
    pub fn from_rows(spanning: Matrix) -> Subspace {
        let (r, pivots) = spanning.rref_with_pivots();
        let basis = r.submatrix(0, pivots.len(), 0, r.cols());
        Subspace { basis, pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &Matrix) -> Subspace {
        Subspace::from_rows(m.transpose())
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Basis vectors as the rows of a `dim x ambient` matrix (reduced echelon form).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient x dim` matrix.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch(self.field(), other.field()));
        }
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        Ok(Subspace::from_rows(Matrix::vstack(
            self.field(),
            self.ambient_dim(),
            &[&self.basis, &other.basis],
        )))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field(), self.ambient_dim()));
        }
        // a·U = b·V  <=>  (a, -b) in the left kernel of [U; V]
        let stacked = Matrix::vstack(self.field(), self.ambient_dim(), &[&self.basis, &other.basis]);
        let left_kernel = stacked.transpose().kernel_basis();
        let coeffs = left_kernel.basis().submatrix(0, left_kernel.dim(), 0, self.dim());
        Ok(Subspace::from_rows(&coeffs * &self.basis))
    }

    /// Coordinates of `v` (a `1 x ambient` row) in the echelon basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coordinates(&self, v: &Matrix) -> Option<Matrix> {
        assert_eq!(v.rows(), 1);
        assert_eq!(v.cols(), self.ambient_dim());
        let c = v.select_cols(&self.pivots);
        if &(&c * &self.basis) == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains_vector(&self, v: &Matrix) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(&other.basis.row(i))))
    }

    /// A surjection `k^n -> k^(n - dim)` (as a matrix acting on columns) whose kernel is this
    /// subspace. Coordinates of the quotient are the non-pivot coordinates.
    pub fn quotient_projection(&self) -> Matrix {
        let n = self.ambient_dim();
        let complement = self.complement_coordinates();
        let mut proj = Matrix::zeros(self.field(), complement.len(), n);
        let one = self.field().one();
        for (r, &c) in complement.iter().enumerate() {
            proj.set(r, c, &one);
            for (i, &p) in self.pivots.iter().enumerate() {
                let u = self.basis.get(i, c);
                if !u.is_zero() {
                    proj.set(r, p, &self.field().neg(&u));
                }
            }
        }
        proj
    }

    /// A right inverse of [`Subspace::quotient_projection`]: the unit vectors on the complement
    /// coordinates.
    pub fn quotient_section(&self) -> Matrix {
        let complement = self.complement_coordinates();
        let n = self.ambient_dim();
        let mut s = Matrix::zeros(self.field(), n, complement.len());
        let one = self.field().one();
        for (j, &c) in complement.iter().enumerate() {
            s.set(c, j, &one);
        }
        s
    }

    fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = alloc::vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|c| !is_pivot[*c]).collect()
    }

    /// Image of the subspace under the linear map `m` (acting on columns).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim());
        Subspace::from_rows(&self.basis * &m.transpose())
    }

    /// `{x : m x ∈ self}`.
    pub fn preimage_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.rows(), self.ambient_dim());
        let proj = self.quotient_projection();
        (&proj * m).kernel_basis()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn complementary_lines() {
        let x = Matrix::from_ints(q(), 1, 2, &[1, 0]).row_space();
        let y = Matrix::from_ints(q(), 1, 2, &[0, 1]).row_space();
        assert!(x.intersection(&y).unwrap().is_zero());
        assert!(x.sum(&y).unwrap().is_full());
    }

    #[test]
    fn quotient_by_diagonal() {
        let d = Matrix::from_ints(q(), 1, 2, &[1, 1]).row_space();
        let p = d.quotient_projection();
        assert_eq!(p.rank(), 1);
        assert_eq!(p.kernel_basis(), d);
        assert_eq!(&p * &d.quotient_section(), Matrix::identity(q(), 1));
    }

    #[test]
    fn ambient_mismatch_rejected() {
        let a = Subspace::full(q(), 2);
        let b = Subspace::full(q(), 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersection(&b).is_err());
    }

    #[test]
    fn preimage_and_image() {
        let m = Matrix::from_ints(q(), 2, 2, &[0, 1, 0, 0]);
        let target = Subspace::zero(q(), 2);
        assert_eq!(target.preimage_under(&m), m.kernel_basis());
        let img = Subspace::full(q(), 2).image_under(&m);
        assert_eq!(img, Matrix::from_ints(q(), 1, 2, &[1, 0]).row_space());
    }
}
