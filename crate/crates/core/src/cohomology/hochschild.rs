//! Hochschild coboundaries of a commutative associative algebra with
//! coefficients in itself, and Harrison `H²` as symmetric 2-cocycles modulo
//! coboundaries.

use num_traits::{One, Zero};

use super::chevalley::CohomologyDims;
use super::cochain::{symmetric_pairs, HochschildCochain};
use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, unit_vector, zero_vector, Matrix, Subspace};
use crate::scalar::Scalar;

/// `δ¹f(a, b) = a f(b) − f(ab) + f(a) b`, from vectorized `f` (column-major)
/// to ordered-pair coordinates `(i·n + j)·n + s`.
pub fn hochschild_delta1_matrix(a: &Algebra) -> Matrix {
    let n = a.dim();
    let var = |r: usize, j: usize| j * n + r;
    let mut m = Matrix::zeros(n * n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul_basis(i, j);
            for s in 0..n {
                let row = (i * n + j) * n + s;
                for r in 0..n {
                    m[(row, var(r, j))] += &a.constant(i, r, s);
                    m[(row, var(r, i))] += &a.constant(r, j, s);
                }
                for (mm, c) in ij.iter().enumerate() {
                    if !c.is_zero() {
                        m[(row, var(s, mm))] -= c;
                    }
                }
            }
        }
    }
    m
}

/// `δ²ψ(a, b, c) = a ψ(b, c) − ψ(ab, c) + ψ(a, bc) − ψ(a, b) c` on ordered
/// tuples, from ordered-pair coordinates to ordered-triple coordinates.
pub fn hochschild_delta2_matrix(a: &Algebra) -> Matrix {
    let n = a.dim();
    let col = |u: usize, v: usize, r: usize| (u * n + v) * n + r;
    let mut m = Matrix::zeros(n * n * n * n, n * n * n);
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul_basis(i, j);
            for k in 0..n {
                let jk = a.mul_basis(j, k);
                for s in 0..n {
                    let row = ((i * n + j) * n + k) * n + s;
                    for r in 0..n {
                        let x = a.constant(i, r, s);
                        if !x.is_zero() {
                            m[(row, col(j, k, r))] += &x;
                        }
                        let y = a.constant(r, k, s);
                        if !y.is_zero() {
                            m[(row, col(i, j, r))] -= &y;
                        }
                    }
                    for mm in 0..n {
                        if !ij[mm].is_zero() {
                            m[(row, col(mm, k, s))] -= &ij[mm];
                        }
                        if !jk[mm].is_zero() {
                            m[(row, col(i, mm, s))] += &jk[mm];
                        }
                    }
                }
            }
        }
    }
    m
}

/// `δ¹f` evaluated directly.
pub fn hochschild_delta1(a: &Algebra, f: &Matrix) -> HochschildCochain {
    let n = a.dim();
    HochschildCochain::from_fn(n, 2, |t| {
        let (x, y) = (unit_vector(n, t[0]), unit_vector(n, t[1]));
        let mut out = a.mul(&x, &f.column(t[1]));
        add_scaled(&mut out, &-Scalar::one(), &f.apply(&a.mul_basis(t[0], t[1])));
        add_scaled(&mut out, &Scalar::one(), &a.mul(&f.column(t[0]), &y));
        out
    })
}

/// `δ²ψ` evaluated directly.
pub fn hochschild_delta2(a: &Algebra, psi: &HochschildCochain) -> Result<HochschildCochain> {
    if psi.degree() != 2 {
        return Err(Error::UnsupportedDegree(psi.degree()));
    }
    if psi.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: psi.dim() });
    }
    let n = a.dim();
    Ok(HochschildCochain::from_fn(n, 3, |t| {
        let (i, j, k) = (t[0], t[1], t[2]);
        let mut out = zero_vector(n);
        add_scaled(&mut out, &Scalar::one(), &a.mul(&unit_vector(n, i), psi.eval_basis(&[j, k])));
        add_scaled(&mut out, &-Scalar::one(), &psi.eval_first(&a.mul_basis(i, j), &[k]));
        add_scaled(&mut out, &Scalar::one(), &psi.eval_at(1, &a.mul_basis(j, k), &[i]));
        add_scaled(&mut out, &-Scalar::one(), &a.mul(psi.eval_basis(&[i, j]), &unit_vector(n, k)));
        out
    }))
}

/// Embedding of symmetric 2-cochains (pairs `i ≤ j`) into ordered ones.
pub fn symmetric_embedding(n: usize) -> Matrix {
    let pairs = symmetric_pairs(n);
    let mut m = Matrix::zeros(n * n * n, pairs.len() * n);
    for (p, &(i, j)) in pairs.iter().enumerate() {
        for s in 0..n {
            m[((i * n + j) * n + s, p * n + s)] = Scalar::one();
            m[((j * n + i) * n + s, p * n + s)] = Scalar::one();
        }
    }
    m
}

/// Harrison 2-cocycles as a subspace of symmetric-cochain coordinates.
pub fn harrison_cocycles(a: &Algebra) -> Result<Subspace> {
    a.require_kind(Kind::AssocComm)?;
    let e = symmetric_embedding(a.dim());
    Ok(hochschild_delta2_matrix(a).mul(&e).kernel())
}

/// `H²_Harr(A, A)`: symmetric Hochschild 2-cocycles modulo `δ¹` of all
/// 1-cochains.
pub fn harrison_h2(a: &Algebra) -> Result<CohomologyDims> {
    a.require_kind(Kind::AssocComm)?;
    let n = a.dim();
    let e = symmetric_embedding(n);
    let z = hochschild_delta2_matrix(a).mul(&e).kernel().dim();
    let d1 = hochschild_delta1_matrix(a);
    let image = Subspace::span(d1.nrows(), &d1.columns());
    let sym = Subspace::span(e.nrows(), &e.columns());
    let b = image.intersection(&sym).dim();
    Ok(CohomologyDims::new(z, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    fn m1(q: usize) -> Algebra {
        let e: Vec<_> = (1..=q).map(|i| (i, i, i, Scalar::one())).collect();
        Algebra::new("m1", Kind::AssocComm, Field::Q, q, &e).unwrap()
    }

    #[test]
    fn harrison_examples() {
        assert_eq!(harrison_h2(&m1(1)).unwrap(), CohomologyDims { dim_z: 1, dim_b: 1, dim_h: 0 });
        assert_eq!(harrison_h2(&m1(3)).unwrap().dim_h, 0);
        let null = Algebra::zero_product("null(1)", Kind::AssocComm, Field::Q, 1);
        assert_eq!(harrison_h2(&null).unwrap(), CohomologyDims { dim_z: 1, dim_b: 0, dim_h: 1 });
    }

    #[test]
    fn matrices_match_direct_evaluation() {
        let a = m1(2);
        let d1 = hochschild_delta1_matrix(&a);
        for c in 0..d1.ncols() {
            let f = Matrix::unvectorize(2, &unit_vector(4, c));
            assert_eq!(hochschild_delta1(&a, &f).to_flat(), d1.column(c));
        }
        let d2 = hochschild_delta2_matrix(&a);
        for c in 0..d2.ncols() {
            let psi = HochschildCochain::from_flat(2, 2, &unit_vector(8, c)).unwrap();
            assert_eq!(hochschild_delta2(&a, &psi).unwrap().to_flat(), d2.column(c));
        }
        assert!(d2.mul(&d1).is_zero());
    }
}
