use serde::{Deserialize, Serialize};

use super::chevalley::chevalley_dims;
use super::derivations::{derivation_space, multiplication_operators};
use crate::algebra::{Algebra, Kind};
use crate::current::current_algebra;
use crate::error::Result;
use crate::structure::{center, derived_algebra};

/// Both sides of the `H¹(g ⊗ A)` decomposition.
///
/// The embedded copy of `A` (in the first summand and in the quotient
/// `Hom(A, A) / (A + Der A)`) is read as the span of the multiplication
/// operators `L_a`, which for unital `A` has dimension `dim A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H1Formula {
    /// `dim H¹(g ⊗ A)` computed directly.
    pub lhs_dim: usize,
    /// `dim H¹(g)·dim A`, `dim Hom(g, g)·dim Der A`,
    /// `dim Hom(g/[g,g], Z(g))·dim Hom(A, A)/(A + Der A)`.
    pub summand_dims: [usize; 3],
    pub rhs_dim: usize,
    /// `lhs − rhs`.
    pub difference: i64,
}

impl H1Formula {
    pub fn holds(&self) -> bool {
        self.difference == 0
    }
}

pub fn h1_current_formula(g: &Algebra, a: &Algebra) -> Result<H1Formula> {
    g.require_kind(Kind::Lie)?;
    a.require_kind(Kind::AssocComm)?;
    g.require_identities()?;
    a.require_identities()?;
    let (p, q) = (g.dim(), a.dim());
    let lhs_dim = chevalley_dims(&current_algebra(g, a)?, 1)?.dim_h;

    let mult = multiplication_operators(a);
    let der_a = derivation_space(a);
    let s1 = chevalley_dims(g, 1)?.dim_h * mult.dim();
    let s2 = p * p * der_a.dim();
    let hom = (p - derived_algebra(g)?.dim()) * center(g)?.dim();
    let s3 = hom * (q * q - mult.sum(&der_a).dim());
    let rhs_dim = s1 + s2 + s3;
    Ok(H1Formula { lhs_dim, summand_dims: [s1, s2, s3], rhs_dim, difference: lhs_dim as i64 - rhs_dim as i64 })
}
