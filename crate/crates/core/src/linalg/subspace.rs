use std::fmt;

use super::{echelon, unit_vector, zero_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// A subspace of K^n held by its reduced echelon basis, so two subspaces
/// are equal exactly when their bases are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|k| unit_vector(ambient, k)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector outside the ambient space");
        }
        let e = echelon(vectors, ambient);
        Subspace { ambient, basis: e.rows, pivots: e.pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Basis vectors as the columns of an `ambient × dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        // the echelon basis has a 1 at each pivot and 0 in the other pivots,
        // so the coordinates are read off at the pivot columns
        let coords: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = zero_vector(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            super::add_scaled(&mut recon, c, b);
        }
        (recon.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // x = U a = W b  ⇔  [U | -W] (a, b) = 0
        let (du, dw) = (self.dim(), other.dim());
        let mut m = Matrix::zeros(self.ambient, du + dw);
        for (j, b) in self.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, j)] = b[i].clone();
            }
        }
        for (j, b) in other.basis.iter().enumerate() {
            for i in 0..self.ambient {
                m[(i, du + j)] = -&b[i];
            }
        }
        let k = m.kernel();
        let vecs: Vec<Vector> = k
            .basis()
            .iter()
            .map(|ab| {
                let mut x = zero_vector(self.ambient);
                for (c, b) in ab[..du].iter().zip(&self.basis) {
                    super::add_scaled(&mut x, c, b);
                }
                x
            })
            .collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// Basis of a complement, made of standard basis vectors.
    pub fn complement_basis(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn is_direct_sum_with(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient && self.sum(other).is_full()
    }

    /// Image of `f` restricted to this subspace.
    pub fn image_under(&self, f: &Matrix) -> Subspace {
        let vecs: Vec<Vector> = self.basis.iter().map(|b| f.apply(b)).collect();
        Subspace::span(f.nrows(), &vecs)
    }

    pub fn is_invariant_under(&self, f: &Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&f.apply(b)))
    }

    /// Matrix of `f` restricted to this (invariant) subspace, in the echelon basis.
    pub fn restrict(&self, f: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = self.basis.iter().map(|b| self.coordinates(&f.apply(b))).collect();
        cols.map(|c| Matrix::from_columns(self.dim(), &c))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?} ⊆ K^{}", self.basis, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_zero_vector;
    use num_traits::{One, Zero};

    fn is_normalized(v: &[Scalar]) -> bool {
        !is_zero_vector(v) && v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_one())
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        for b in a.basis() {
            assert!(is_normalized(b));
        }
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(a.sum(&b).is_full());
        assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert!(a.intersection(&Subspace::zero(3)).is_zero());
    }

    #[test]
    fn coordinates_and_restriction() {
        let w = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(w.coordinates(&v(&[2, 2, 5])), Some(v(&[2, 5])));
        assert!(w.coordinates(&v(&[1, 0, 0])).is_none());
        let swap = Matrix::from_int_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]);
        assert!(w.is_invariant_under(&swap));
        assert_eq!(w.restrict(&swap).unwrap(), Matrix::from_int_rows(&[&[1, 0], &[0, 2]]));
    }
}
