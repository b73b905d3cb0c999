use num_traits::Zero;

use crate::algebra::{Algebra, Kind};
use crate::error::Result;
use crate::linalg::{Matrix, Subspace};

/// Column-major index of the coefficient of `e_r` in `f(e_j)`.
fn var(n: usize, r: usize, j: usize) -> usize {
    j * n + r
}

/// Derivations as a subspace of vectorized `n × n` operators (column-major),
/// solved from `f(e_i e_j) = f(e_i) e_j + e_i f(e_j)` on all ordered pairs.
pub fn derivation_space(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let mut m = Matrix::zeros(n * n * n, n * n);
    let table: Vec<Vec<_>> = (0..n).map(|i| (0..n).map(|j| alg.mul_basis(i, j)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            for s in 0..n {
                let row = (i * n + j) * n + s;
                for (mm, c) in table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        m[(row, var(n, s, mm))] += c;
                    }
                }
                for r in 0..n {
                    let a = &table[r][j][s];
                    if !a.is_zero() {
                        m[(row, var(n, r, i))] -= a;
                    }
                    let b = &table[i][r][s];
                    if !b.is_zero() {
                        m[(row, var(n, r, j))] -= b;
                    }
                }
            }
        }
    }
    m.kernel()
}

/// Echelon basis of `Der(alg)` as operator matrices.
pub fn derivations(alg: &Algebra) -> Vec<Matrix> {
    let n = alg.dim();
    derivation_space(alg).basis().iter().map(|v| Matrix::unvectorize(n, v)).collect()
}

/// `span{ad e_i}` as a subspace of vectorized operators.
pub fn inner_derivations(g: &Algebra) -> Result<Subspace> {
    g.require_kind(Kind::Lie)?;
    let n = g.dim();
    let ads: Vec<_> = (0..n).map(|i| g.left_mult_basis(i).vectorize()).collect();
    Ok(Subspace::span(n * n, &ads))
}

/// `span{L_{e_i}}` as a subspace of vectorized operators.
pub fn multiplication_operators(a: &Algebra) -> Subspace {
    let n = a.dim();
    let ls: Vec<_> = (0..n).map(|i| a.left_mult_basis(i).vectorize()).collect();
    Subspace::span(n * n, &ls)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Field, Scalar};
    use num_traits::One;

    #[test]
    fn small_cases() {
        let r2 = Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, Scalar::one())]).unwrap();
        assert_eq!(derivations(&r2).len(), 2);
        for d in derivations(&r2) {
            assert!(r2.is_derivation(&d));
        }
        assert_eq!(inner_derivations(&r2).unwrap().dim(), 2);

        let m1 =
            Algebra::new("m1(2)", Kind::AssocComm, Field::Q, 2, &[(1, 1, 1, Scalar::one()), (2, 2, 2, Scalar::one())])
                .unwrap();
        assert!(derivations(&m1).is_empty());

        let ab = Algebra::zero_product("abelian(2)", Kind::Lie, Field::Q, 2);
        assert_eq!(derivations(&ab).len(), 4);
        assert_eq!(inner_derivations(&ab).unwrap().dim(), 0);
    }
}
