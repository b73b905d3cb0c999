//! Random cochain sampling shared by the acceptance and property suites.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use currentalg::cohomology::{delta_on_decomposable, ChevalleyCochain, DecomposableCochain, SymmetricCochain};
use currentalg::linalg::{unit_vector, zero_vector, Matrix, Vector};
use currentalg::{Algebra, Scalar};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::from_int(rng.gen_range(-3..=3))
}

pub fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| small(rng)).collect()
}

pub fn eval_all(g: &Algebra, a: &Algebra, c: &DecomposableCochain) -> Vector {
    let d = delta_on_decomposable(g, a, c).unwrap();
    let (p, q) = (g.dim(), a.dim());
    let mut out = Vec::new();
    for i in 0..p {
        for j in 0..p {
            for k in 0..p {
                for x in 0..q {
                    for y in 0..q {
                        for z in 0..q {
                            out.extend(d.eval_basis([i, j, k], [x, y, z]));
                        }
                    }
                }
            }
        }
    }
    out
}

pub struct Blocks {
    pub psi1: Vector,
    pub phi2: Vector,
    pub phi3: Vector,
    pub psi4: Vector,
}

impl Blocks {
    pub fn cochain(&self, p: usize, q: usize) -> DecomposableCochain {
        DecomposableCochain {
            psi1: ChevalleyCochain::from_flat(p, 2, &self.psi1).unwrap(),
            phi2: SymmetricCochain::from_flat(q, &self.phi2).unwrap(),
            phi3: SymmetricCochain::from_flat(p, &self.phi3).unwrap(),
            psi4: SymmetricCochain::from_flat(q, &self.psi4).unwrap(),
        }
    }
}

/// Samples a random point of `{E ≡ 0}` with one factor of each tensor
/// product fixed: either `(φ₂, ψ₄)` or `(ψ₁, φ₃)` is random and the other
/// pair is a random element of the kernel of the resulting linear map.
pub fn vanishing_instance(rng: &mut ChaCha8Rng, g: &Algebra, a: &Algebra, vary_lie_side: bool) -> DecomposableCochain {
    let (p, q) = (g.dim(), a.dim());
    let (l1, l2, l3, l4) = (p * (p - 1) / 2 * p, q * (q + 1) / 2 * q, p * (p + 1) / 2 * p, q * (q + 1) / 2 * q);
    let fixed = Blocks {
        psi1: random_vector(rng, l1),
        phi2: random_vector(rng, l2),
        phi3: random_vector(rng, l3),
        psi4: random_vector(rng, l4),
    };
    let (first, second) = if vary_lie_side { (l1, l3) } else { (l2, l4) };
    let build = |v: &[Scalar]| -> DecomposableCochain {
        let (x, y) = v.split_at(first);
        let b = if vary_lie_side {
            Blocks { psi1: x.to_vec(), phi3: y.to_vec(), phi2: fixed.phi2.clone(), psi4: fixed.psi4.clone() }
        } else {
            Blocks { phi2: x.to_vec(), psi4: y.to_vec(), psi1: fixed.psi1.clone(), phi3: fixed.phi3.clone() }
        };
        b.cochain(p, q)
    };
    let columns: Vec<Vector> =
        (0..first + second).map(|k| eval_all(g, a, &build(&unit_vector(first + second, k)))).collect();
    let kernel = Matrix::from_columns(columns[0].len(), &columns).kernel();
    let mut v = zero_vector(first + second);
    for b in kernel.basis() {
        let c = small(rng);
        for (x, y) in v.iter_mut().zip(b) {
            *x += &(&c * y);
        }
    }
    build(&v)
}
