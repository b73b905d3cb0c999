//! Current Lie algebras `g ⊗ A` with bracket `[X⊗a, Y⊗b] = [X,Y]⊗ab`.
//!
//! The flat basis puts `X_i ⊗ e_a` at 1-based position `(i−1)·q + a`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::scalar::Scalar;

/// Basis element `X_i ⊗ e_a` of `g ⊗ A`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurrentBasisIndex {
    pub i: usize,
    pub a: usize,
}

impl CurrentBasisIndex {
    /// 1-based flat index `(i−1)·q + a`.
    pub fn encode(self, q: usize) -> usize {
        (self.i - 1) * q + self.a
    }

    pub fn decode(flat: usize, q: usize) -> Self {
        CurrentBasisIndex { i: (flat - 1) / q + 1, a: (flat - 1) % q + 1 }
    }
}

/// `u ⊗ v` in the flat layout `i·q + a` (0-based).
pub fn tensor(u: &[Scalar], v: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for x in u {
        for y in v {
            out.push(if x.is_zero() || y.is_zero() { Scalar::zero() } else { x * y });
        }
    }
    out
}

fn check_pair(g: &Algebra, a: &Algebra) -> Result<()> {
    g.require_kind(Kind::Lie)?;
    a.require_kind(Kind::AssocComm)?;
    if g.field() != a.field() {
        return Err(Error::FieldMismatch { left: g.field(), right: a.field() });
    }
    Ok(())
}

fn current_unchecked(g: &Algebra, a: &Algebra) -> Algebra {
    let q = a.dim();
    Algebra::from_products(format!("{}*{}", g.name(), a.name()), Kind::Lie, g.field(), g.dim() * q, |x, y| {
        tensor(&g.mul_basis(x / q, y / q), &a.mul_basis(x % q, y % q))
    })
}

/// The current algebra `g ⊗ A`, with constants `C_ij^k D_ab^c`.
pub fn current_algebra(g: &Algebra, a: &Algebra) -> Result<Algebra> {
    check_pair(g, a)?;
    g.require_identities()?;
    a.require_identities()?;
    Ok(current_unchecked(g, a))
}

/// One nonzero `(s, t)` entry of the Jacobi relation of `g ⊗ A` written in
/// the constants of `g` and `A`. All indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PqResidual {
    pub ijk: [usize; 3],
    pub abc: [usize; 3],
    pub s: usize,
    pub t: usize,
    pub value: Scalar,
}

impl PqResidual {
    /// Flat basis triple of `g ⊗ A` this residual lives on (1-based, unsorted).
    pub fn flat_triple(&self, q: usize) -> [usize; 3] {
        [0, 1, 2].map(|k| CurrentBasisIndex { i: self.ijk[k], a: self.abc[k] }.encode(q))
    }
}

/// All nonzero residuals
/// `Σ_{l,r} C_ij^l C_lk^s D_ab^r D_rc^t + C_jk^l C_li^s D_bc^r D_ra^t + C_ki^l C_lj^s D_ca^r D_rb^t`
/// over basis tuples. Inputs need not satisfy their own identities.
pub fn jacobi_pq_residuals(g: &Algebra, a: &Algebra) -> Result<Vec<PqResidual>> {
    check_pair(g, a)?;
    let (p, q) = (g.dim(), a.dim());
    let lie3 = |i: usize, j: usize, k: usize| g.mul(&g.mul_basis(i, j), &unit_vector(p, k));
    let com3 = |a_: usize, b: usize, c: usize| a.mul(&a.mul_basis(a_, b), &unit_vector(q, c));
    let mut out = Vec::new();
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                let terms_g = [lie3(i, j, k), lie3(j, k, i), lie3(k, i, j)];
                for x in 0..q {
                    for y in 0..q {
                        for z in 0..q {
                            let terms_a = [com3(x, y, z), com3(y, z, x), com3(z, x, y)];
                            for s in 0..p {
                                for t in 0..q {
                                    let v: Scalar = (0..3).map(|m| &terms_g[m][s] * &terms_a[m][t]).sum();
                                    if !v.is_zero() {
                                        out.push(PqResidual {
                                            ijk: [i + 1, j + 1, k + 1],
                                            abc: [x + 1, y + 1, z + 1],
                                            s: s + 1,
                                            t: t + 1,
                                            value: v,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Whether `f₁ ⊗ f₂` is a derivation of `g ⊗ A`, from
/// `μ₁(f₁X, Y)⊗μ₂(f₂a, b) + μ₁(X, f₁Y)⊗μ₂(f₂b, a) − f₁μ₁(X, Y)⊗f₂μ₂(a, b) = 0`
/// on basis tuples. The flat Leibniz rule for the Kronecker product is
/// evaluated as well and must agree.
pub fn is_tensor_derivation(g: &Algebra, a: &Algebra, f1: &Matrix, f2: &Matrix) -> Result<bool> {
    check_pair(g, a)?;
    let (p, q) = (g.dim(), a.dim());
    for (m, n) in [(f1, p), (f2, q)] {
        if !m.is_square() || m.nrows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.nrows() });
        }
    }
    let mut formula = true;
    'outer: for i in 0..p {
        for j in 0..p {
            let (x, y) = (unit_vector(p, i), unit_vector(p, j));
            let t1 = g.mul(&f1.column(i), &y);
            let t2 = g.mul(&x, &f1.column(j));
            let t3 = f1.apply(&g.mul_basis(i, j));
            for aa in 0..q {
                for bb in 0..q {
                    let (ea, eb) = (unit_vector(q, aa), unit_vector(q, bb));
                    let u1 = a.mul(&f2.column(aa), &eb);
                    let u2 = a.mul(&f2.column(bb), &ea);
                    let u3 = f2.apply(&a.mul_basis(aa, bb));
                    let lhs: Vector = tensor(&t1, &u1)
                        .into_iter()
                        .zip(tensor(&t2, &u2))
                        .zip(tensor(&t3, &u3))
                        .map(|((x, y), z)| x + y - z)
                        .collect();
                    if lhs.iter().any(|c| !c.is_zero()) {
                        formula = false;
                        break 'outer;
                    }
                }
            }
        }
    }
    let leibniz = current_unchecked(g, a).is_derivation(&f1.kron(f2));
    if formula != leibniz {
        return Err(Error::Inconsistent(format!(
            "tensor-derivation formula gives {formula}, flat Leibniz rule gives {leibniz}"
        )));
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;
    use num_traits::One;

    fn r2() -> Algebra {
        Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, Scalar::one())]).unwrap()
    }

    fn m1(q: usize) -> Algebra {
        let e: Vec<_> = (1..=q).map(|i| (i, i, i, Scalar::one())).collect();
        Algebra::new("m1", Kind::AssocComm, Field::Q, q, &e).unwrap()
    }

    #[test]
    fn index_round_trip() {
        for k in 1..=6 {
            assert_eq!(CurrentBasisIndex::decode(k, 3).encode(3), k);
        }
        assert_eq!(CurrentBasisIndex { i: 2, a: 1 }.encode(3), 4);
    }

    #[test]
    fn one_dimensional_coefficients() {
        assert_eq!(current_algebra(&r2(), &m1(1)).unwrap(), r2());
    }

    #[test]
    fn r2_times_m1_2_is_r2_squared() {
        let c = current_algebra(&r2(), &m1(2)).unwrap();
        let s = r2().direct_sum(&r2()).unwrap();
        assert_eq!(c.permute(&[0, 2, 1, 3]).unwrap(), s);
        assert!(jacobi_pq_residuals(&r2(), &m1(2)).unwrap().is_empty());
    }

    #[test]
    fn tensor_derivations() {
        let (g, a) = (r2(), m1(1));
        assert!(is_tensor_derivation(&g, &a, &g.left_mult_basis(0), &Matrix::identity(1)).unwrap());
        assert!(!is_tensor_derivation(&g, &a, &Matrix::identity(2), &Matrix::identity(1)).unwrap());
        let ab = Algebra::zero_product("abelian(2)", Kind::Lie, Field::Q, 2);
        let f = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        assert!(is_tensor_derivation(&ab, &m1(2), &f, &f).unwrap());
    }
}
