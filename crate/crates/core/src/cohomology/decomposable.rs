//! Cochains of `g ⊗ A` of the form `ψ₁⊗φ₂ + φ₃⊗ψ₄` and the first-order
//! Jacobi expression they must satisfy, evaluated block by block.

use num_traits::{One, Zero};

use super::cochain::{Bilinear, ChevalleyCochain, SymmetricCochain};
use crate::algebra::{Algebra, Kind};
use crate::current::tensor;
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, unit_vector, zero_vector, Vector};
use crate::scalar::Scalar;

/// `ψ₁ ∈ C²(g, g)`, `φ₂ ∈ S²(A, A)`, `φ₃ ∈ S²(g, g)`, `ψ₄ ∈ S²(A, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposableCochain {
    pub psi1: ChevalleyCochain,
    pub phi2: SymmetricCochain,
    pub phi3: SymmetricCochain,
    pub psi4: SymmetricCochain,
}

impl DecomposableCochain {
    pub fn zero(p: usize, q: usize) -> Self {
        DecomposableCochain {
            psi1: ChevalleyCochain::zero(p, 2),
            phi2: SymmetricCochain::zero(q),
            phi3: SymmetricCochain::zero(p),
            psi4: SymmetricCochain::zero(q),
        }
    }

    /// The cochain as a bilinear map on `g ⊗ A` in the flat basis
    /// `(i, a) ↦ i·q + a`.
    pub fn flatten(&self) -> Bilinear {
        let (p, q) = (self.psi1.dim(), self.phi2.dim());
        let b1 = self.psi1.to_bilinear();
        Bilinear::from_fn(p * q, |x, y| {
            let (i, a) = (x / q, x % q);
            let (j, b) = (y / q, y % q);
            let mut out = tensor(b1.eval_basis(i, j), self.phi2.eval_basis(a, b));
            add_scaled(&mut out, &Scalar::one(), &tensor(self.phi3.eval_basis(i, j), self.psi4.eval_basis(a, b)));
            out
        })
    }
}

/// Evaluator of the four cyclic-sum blocks
/// `Σ μ₁(ψ₁(X₁,X₂),X₃)⊗μ₂(φ₂(a₁,a₂),a₃) + Σ μ₁(φ₃(X₁,X₂),X₃)⊗μ₂(ψ₄(a₁,a₂),a₃)
///  + Σ ψ₁(μ₁(X₁,X₂),X₃)⊗φ₂(μ₂(a₁,a₂),a₃) + Σ φ₃(μ₁(X₁,X₂),X₃)⊗ψ₄(μ₂(a₁,a₂),a₃)`,
/// each sum over the cyclic permutations of `(1, 2, 3)`.
pub struct DecomposableDelta<'a> {
    g: &'a Algebra,
    a: &'a Algebra,
    c: &'a DecomposableCochain,
}

/// A basis tuple `(X_i, X_j, X_k; e_a, e_b, e_c)` (1-based) with a nonzero value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposableWitness {
    pub x: [usize; 3],
    pub a: [usize; 3],
    pub value: Vector,
}

pub fn delta_on_decomposable<'a>(
    g: &'a Algebra,
    a: &'a Algebra,
    c: &'a DecomposableCochain,
) -> Result<DecomposableDelta<'a>> {
    g.require_kind(Kind::Lie)?;
    a.require_kind(Kind::AssocComm)?;
    let (p, q) = (g.dim(), a.dim());
    for (expected, found) in [(p, c.psi1.dim()), (q, c.phi2.dim()), (p, c.phi3.dim()), (q, c.psi4.dim())] {
        if expected != found {
            return Err(Error::DimensionMismatch { expected, found });
        }
    }
    if c.psi1.degree() != 2 {
        return Err(Error::UnsupportedDegree(c.psi1.degree()));
    }
    Ok(DecomposableDelta { g, a, c })
}

impl DecomposableDelta<'_> {
    /// Value on arbitrary vectors `X₁, X₂, X₃ ∈ g`, `a₁, a₂, a₃ ∈ A`, in the
    /// flat basis of `g ⊗ A`.
    pub fn eval(&self, x: [&[Scalar]; 3], a: [&[Scalar]; 3]) -> Vector {
        let (g, alg, c) = (self.g, self.a, self.c);
        let mut out = zero_vector(g.dim() * alg.dim());
        for (u, v, w) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let psi1 = c.psi1.eval(&[x[u], x[v]]);
            let phi3 = c.phi3.eval(x[u], x[v]);
            let phi2 = c.phi2.eval(a[u], a[v]);
            let psi4 = c.psi4.eval(a[u], a[v]);
            let mu1 = g.mul(x[u], x[v]);
            let mu2 = alg.mul(a[u], a[v]);
            let blocks = [
                tensor(&g.mul(&psi1, x[w]), &alg.mul(&phi2, a[w])),
                tensor(&g.mul(&phi3, x[w]), &alg.mul(&psi4, a[w])),
                tensor(&c.psi1.eval(&[&mu1, x[w]]), &c.phi2.eval(&mu2, a[w])),
                tensor(&c.phi3.eval(&mu1, x[w]), &c.psi4.eval(&mu2, a[w])),
            ];
            for b in &blocks {
                add_scaled(&mut out, &Scalar::one(), b);
            }
        }
        out
    }

    /// Value on 0-based basis indices.
    pub fn eval_basis(&self, x: [usize; 3], a: [usize; 3]) -> Vector {
        let (p, q) = (self.g.dim(), self.a.dim());
        let xs = x.map(|i| unit_vector(p, i));
        let as_ = a.map(|i| unit_vector(q, i));
        self.eval([&xs[0], &xs[1], &xs[2]], [&as_[0], &as_[1], &as_[2]])
    }

    /// First basis tuple where the expression is nonzero, if any.
    pub fn first_nonzero(&self) -> Option<DecomposableWitness> {
        let (p, q) = (self.g.dim(), self.a.dim());
        for i in 0..p {
            for j in 0..p {
                for k in 0..p {
                    for a in 0..q {
                        for b in 0..q {
                            for c in 0..q {
                                let v = self.eval_basis([i, j, k], [a, b, c]);
                                if v.iter().any(|s| !s.is_zero()) {
                                    return Some(DecomposableWitness {
                                        x: [i + 1, j + 1, k + 1],
                                        a: [a + 1, b + 1, c + 1],
                                        value: v,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_identically_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }
}

/// `μ₂•ψ₄(a₁, a₂, a₃) = Σ μ₂(ψ₄(a₁, a₂), a₃)` over cyclic permutations.
pub struct Bullet<'a> {
    a: &'a Algebra,
    psi4: &'a SymmetricCochain,
}

pub fn bullet<'a>(a: &'a Algebra, psi4: &'a SymmetricCochain) -> Result<Bullet<'a>> {
    a.require_kind(Kind::AssocComm)?;
    if psi4.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: psi4.dim() });
    }
    Ok(Bullet { a, psi4 })
}

impl Bullet<'_> {
    pub fn eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let args = [x, y, z];
        let mut out = zero_vector(self.a.dim());
        for (u, v, w) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            add_scaled(&mut out, &Scalar::one(), &self.a.mul(&self.psi4.eval(args[u], args[v]), args[w]));
        }
        out
    }

    pub fn eval_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.a.dim();
        self.eval(&unit_vector(n, i), &unit_vector(n, j), &unit_vector(n, k))
    }

    pub fn is_zero(&self) -> bool {
        let n = self.a.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.eval_basis(i, j, k).iter().all(Zero::is_zero))))
    }
}

/// Linear part in `t` of the Jacobiator of `μ + tφ` for a general bilinear
/// `φ`: `Σ μ(φ(x,y),z) + φ(μ(x,y),z)` over cyclic permutations.
pub fn linearized_jacobiator(alg: &Algebra, phi: &Bilinear, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let args = [x, y, z];
    let mut out = zero_vector(alg.dim());
    for (u, v, w) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        add_scaled(&mut out, &Scalar::one(), &alg.mul(&phi.eval(args[u], args[v]), args[w]));
        add_scaled(&mut out, &Scalar::one(), &phi.eval(&alg.mul(args[u], args[v]), args[w]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;

    fn r2() -> Algebra {
        Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, Scalar::one())]).unwrap()
    }

    fn m1(q: usize) -> Algebra {
        let e: Vec<_> = (1..=q).map(|i| (i, i, i, Scalar::one())).collect();
        Algebra::new("m1", Kind::AssocComm, Field::Q, q, &e).unwrap()
    }

    #[test]
    fn product_cochain_is_jacobi() {
        let (g, a) = (r2(), m1(1));
        let c = DecomposableCochain {
            psi1: ChevalleyCochain::from_algebra(&g),
            phi2: SymmetricCochain::from_algebra(&a),
            phi3: SymmetricCochain::zero(2),
            psi4: SymmetricCochain::zero(1),
        };
        assert!(delta_on_decomposable(&g, &a, &c).unwrap().is_identically_zero());
    }

    #[test]
    fn bullet_examples() {
        let a = m1(1);
        let mu = SymmetricCochain::from_algebra(&a);
        assert_eq!(bullet(&a, &mu).unwrap().eval_basis(0, 0, 0), vec![Scalar::from_int(3)]);
        let zero = SymmetricCochain::zero(1);
        assert!(bullet(&a, &zero).unwrap().is_zero());

        let a2 = m1(2);
        let mut psi = SymmetricCochain::zero(2);
        psi.set(0, 0, vec![Scalar::zero(), Scalar::one()]);
        assert_eq!(bullet(&a2, &psi).unwrap().eval_basis(0, 0, 0), vec![Scalar::zero(), Scalar::zero()]);
    }
}
