//! Exact dense matrices, subspaces, polynomials, and the elimination engine
//! every other module is built on.

pub mod bareiss;
pub mod factor;
pub mod poly;
mod subspace;

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use bareiss::{echelon, Echelon};
pub use poly::Poly;
pub use subspace::Subspace;

/// A column vector of exact scalars.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// `k`-th standard basis vector (0-based `k`).
pub fn unit_vector(n: usize, k: usize) -> Vector {
    let mut v = zero_vector(n);
    v[k] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(c * x);
        }
    }
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Dense row-major matrix. Square instances double as operators on K^n,
/// with column `j` holding the image of the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Linear operator in a fixed basis.
pub type OperatorMatrix = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
    }

    /// Matrix whose `j`-th column is `cols[j]`; `nrows` fixes the shape when `cols` is empty.
    pub fn from_columns(nrows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), nrows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, k: u32) -> Matrix {
        assert!(self.is_square());
        (0..k).fold(Matrix::identity(self.rows), |acc, _| acc.mul(self))
    }

    /// `AB - BA`.
    pub fn commutator(&self, o: &Matrix) -> Matrix {
        self.mul(o).sub(&o.mul(self))
    }

    /// Kronecker product, `(i, a) ↦ i * o.rows + a` row layout.
    pub fn kron(&self, o: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * o.rows, self.cols * o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out[(i * o.rows + k, j * o.cols + l)] = a * &o[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Column-major flattening, so `vec(f)[j * n + r]` is the coefficient of
    /// `e_r` in `f(e_j)`.
    pub fn vectorize(&self) -> Vector {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self[(i, j)].clone());
            }
        }
        v
    }

    pub fn unvectorize(n: usize, v: &[Scalar]) -> Matrix {
        assert_eq!(v.len(), n * n);
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                m[(i, j)] = v[j * n + i].clone();
            }
        }
        m
    }

    pub fn echelon(&self) -> Echelon {
        echelon(&self.row_vecs(), self.cols)
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    pub fn kernel(&self) -> Subspace {
        linear_kernel(self)
    }

    /// Some solution of `self · x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vector> {
        solve(self, b)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let rows: Vec<Vector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend(unit_vector(n, i));
                r
            })
            .collect();
        let e = echelon(&rows, 2 * n);
        if e.rank() < n || e.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_rows(e.rows.iter().map(|r| r[n..].to_vec()).collect()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Echelon basis of `{x : M x = 0}`.
pub fn linear_kernel(m: &Matrix) -> Subspace {
    let e = m.echelon();
    kernel_from_echelon(&e)
}

pub(crate) fn kernel_from_echelon(e: &Echelon) -> Subspace {
    let n = e.cols;
    let mut is_pivot = vec![false; n];
    for &p in &e.pivots {
        is_pivot[p] = true;
    }
    let vecs: Vec<Vector> = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = zero_vector(n);
            v[free] = Scalar::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -&row[free];
            }
            v
        })
        .collect();
    Subspace::span(n, &vecs)
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn solve(m: &Matrix, b: &[Scalar]) -> Option<Vector> {
    assert_eq!(b.len(), m.nrows());
    let n = m.ncols();
    let rows: Vec<Vector> = (0..m.nrows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let e = echelon(&rows, n + 1);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = zero_vector(n);
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Minimal polynomial, nilpotency and semisimplicity of a square operator.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorAnalysis {
    pub min_poly: Poly,
    pub is_nilpotent: bool,
    pub is_semisimple: bool,
}

/// Monic minimal polynomial, found as the first linear dependency among
/// `I, M, M², …`.
pub fn min_poly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return Poly::one();
    }
    let mut powers = vec![Matrix::identity(n).vectorize()];
    let mut cur = Matrix::identity(n);
    loop {
        cur = cur.mul(m);
        let target = cur.vectorize();
        let basis = Matrix::from_columns(n * n, &powers);
        if let Some(c) = basis.solve(&target) {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}

pub fn operator_analysis(op: &Matrix) -> OperatorAnalysis {
    let min_poly = min_poly(op);
    let is_nilpotent = min_poly.is_monomial();
    let is_semisimple = min_poly.gcd(&min_poly.derivative()).degree() == Some(0);
    OperatorAnalysis { min_poly, is_nilpotent, is_semisimple }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_examples() {
        let k = linear_kernel(&Matrix::from_int_rows(&[&[1, 1], &[2, 2]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k, Subspace::span(2, &[vec![Scalar::from_int(1), Scalar::from_int(-1)]]));
        assert_eq!(linear_kernel(&Matrix::identity(3)).dim(), 0);
    }

    #[test]
    fn inverse_round_trip_and_singular() {
        let m = Matrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert_eq!(Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[1, -1]]);
        let x = m.solve(&[Scalar::from_int(3), Scalar::from_int(1)]).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);
        let s = Matrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[Scalar::from_int(1), Scalar::from_int(3)]).is_none());
    }

    #[test]
    fn operator_analysis_examples() {
        let n = operator_analysis(&Matrix::from_int_rows(&[&[0, 1], &[0, 0]]));
        assert_eq!(n.min_poly, Poly::from_ints(&[0, 0, 1]));
        assert!(n.is_nilpotent && !n.is_semisimple);

        let p = operator_analysis(&Matrix::from_int_rows(&[&[1, 0], &[0, 0]]));
        assert_eq!(p.min_poly, Poly::from_ints(&[0, -1, 1]));
        assert!(!p.is_nilpotent && p.is_semisimple);

        // f(X1) = -X2, f(X2) = X1
        let rot = operator_analysis(&Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]));
        assert_eq!(rot.min_poly, Poly::from_ints(&[1, 0, 1]));
        assert!(rot.is_semisimple && !rot.is_nilpotent);
        assert!(factor::irreducible_factors(&rot.min_poly, crate::Field::Q).len() == 1);
    }

    #[test]
    fn kron_layout() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let b = Matrix::identity(2);
        let k = a.kron(&b);
        assert_eq!(k[(0, 2)], Scalar::from_int(2));
        assert_eq!(k[(3, 1)], Scalar::from_int(3));
    }

    #[test]
    fn vectorize_is_column_major() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let v = m.vectorize();
        assert_eq!(v[1], Scalar::from_int(3));
        assert_eq!(Matrix::unvectorize(2, &v), m);
    }
}
