//! Rigidity certificates and deformation checks over truncated polynomial
//! coefficients `K[t]/(t^{N+1})`.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::cohomology::{
    chevalley_delta, chevalley_dims, derivation_space, harrison_h2, Bilinear, ChevalleyCochain, CohomologyDims,
};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Vector};
use crate::scalar::Scalar;

/// `H² = 0` proves rigidity; `H² ≠ 0` proves nothing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    RigidByH2Zero,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::RigidByH2Zero => "RigidByH2Zero",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityCertificate {
    pub verdict: Verdict,
    pub h2_dims: CohomologyDims,
    /// `n² − dim Der g`, the dimension of the `GL(n)` orbit.
    pub orbit_dim: usize,
}

pub fn rigidity_certificate(g: &Algebra) -> Result<RigidityCertificate> {
    g.require_kind(Kind::Lie)?;
    g.require_identities()?;
    let h2_dims = chevalley_dims(g, 2)?;
    let n = g.dim();
    let verdict = if h2_dims.dim_h == 0 { Verdict::RigidByH2Zero } else { Verdict::Inconclusive };
    Ok(RigidityCertificate { verdict, h2_dims, orbit_dim: n * n - derivation_space(g).dim() })
}

/// Rigidity of `g ⊗ A` among current algebras of the same shape `(p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LpqCertificate {
    pub verdict: Verdict,
    pub h2_lie: CohomologyDims,
    pub h2_harrison: CohomologyDims,
}

pub fn rigid_in_lpq(g: &Algebra, a: &Algebra) -> Result<LpqCertificate> {
    g.require_kind(Kind::Lie)?;
    a.require_kind(Kind::AssocComm)?;
    g.require_identities()?;
    a.require_identities()?;
    let h2_lie = chevalley_dims(g, 2)?;
    let h2_harrison = harrison_h2(a)?;
    let verdict =
        if h2_lie.dim_h == 0 && h2_harrison.dim_h == 0 { Verdict::RigidByH2Zero } else { Verdict::Inconclusive };
    Ok(LpqCertificate { verdict, h2_lie, h2_harrison })
}

fn check_cochain(g: &Algebra, phi: &ChevalleyCochain) -> Result<()> {
    if phi.degree() != 2 {
        return Err(Error::UnsupportedDegree(phi.degree()));
    }
    if phi.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: phi.dim() });
    }
    Ok(())
}

/// `Σ_{a+b=m} Σ_cyc φ_a(φ_b(x, y), z)` on basis vectors, with `φ_0 = μ`.
fn jacobiator_coefficient(maps: &[Bilinear], m: usize, t: [usize; 3]) -> Vector {
    let n = maps[0].dim();
    let mut out = zero_vector(n);
    for a in 0..=m {
        let b = m - a;
        let (Some(fa), Some(fb)) = (maps.get(a), maps.get(b)) else {
            continue;
        };
        for (u, v, w) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            let inner = fb.eval_basis(t[u], t[v]);
            if is_zero_vector(inner) {
                continue;
            }
            add_scaled(&mut out, &Scalar::from_int(1), &fa.eval(inner, &unit_vector(n, t[w])));
        }
    }
    out
}

fn triples(n: usize) -> impl Iterator<Item = [usize; 3]> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

/// Whether `φ` is a 2-cocycle. `δφ = 0` and the vanishing of the `t¹`
/// coefficient of the Jacobiator of `μ + tφ` are both evaluated and must
/// agree.
pub fn infinitesimal_check(g: &Algebra, phi: &ChevalleyCochain) -> Result<bool> {
    g.require_kind(Kind::Lie)?;
    check_cochain(g, phi)?;
    let by_delta = chevalley_delta(g, phi)?.is_zero();
    let maps = [ChevalleyCochain::from_algebra(g).to_bilinear(), phi.to_bilinear()];
    let by_jacobiator = triples(g.dim()).all(|t| is_zero_vector(&jacobiator_coefficient(&maps, 1, t)));
    if by_delta != by_jacobiator {
        return Err(Error::Inconsistent(format!(
            "cocycle test gives {by_delta}, first-order Jacobiator gives {by_jacobiator}"
        )));
    }
    Ok(by_delta)
}

/// `μ + Σ_{i=1}^{k} t^i φ_i` with coefficients in `K[t]/(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedDeformation {
    base: Algebra,
    cochains: Vec<ChevalleyCochain>,
    order: usize,
}

impl TruncatedDeformation {
    pub fn new(base: Algebra, cochains: Vec<ChevalleyCochain>, order: usize) -> Result<Self> {
        base.require_kind(Kind::Lie)?;
        if order == 0 {
            return Err(Error::InvalidParameter("truncation order must be at least 1".into()));
        }
        for c in &cochains {
            check_cochain(&base, c)?;
        }
        Ok(TruncatedDeformation { base, cochains, order })
    }

    pub fn base(&self) -> &Algebra {
        &self.base
    }

    pub fn cochains(&self) -> &[ChevalleyCochain] {
        &self.cochains
    }

    pub fn order(&self) -> usize {
        self.order
    }
}

/// Earliest nonzero Jacobiator coefficient: its order, the basis triple
/// (1-based, increasing) and the value there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub order: usize,
    pub triple: [usize; 3],
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationReport {
    /// Highest order through which the Jacobiator vanishes; `None` if the
    /// base bracket itself fails Jacobi.
    pub ok_up_to: Option<usize>,
    pub first_obstruction: Option<Obstruction>,
}

pub fn truncated_deformation_check(d: &TruncatedDeformation) -> DeformationReport {
    let mut maps = vec![ChevalleyCochain::from_algebra(&d.base).to_bilinear()];
    maps.extend(d.cochains.iter().map(ChevalleyCochain::to_bilinear));
    for m in 0..=d.order {
        for t in triples(d.base.dim()) {
            let v = jacobiator_coefficient(&maps, m, t);
            if !is_zero_vector(&v) {
                return DeformationReport {
                    ok_up_to: m.checked_sub(1),
                    first_obstruction: Some(Obstruction { order: m, triple: t.map(|x| x + 1), residual: v }),
                };
            }
        }
    }
    DeformationReport { ok_up_to: Some(d.order), first_obstruction: None }
}
