//! Named algebras, torus generators of `a_n`, and invariant fingerprints.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::cohomology::{chevalley_dims, derivation_space, harrison_h2};
use crate::error::{Error, Result};
use crate::linalg::{operator_analysis, Matrix, Subspace};
use crate::scalar::{Field, Scalar};
use crate::structure::{center, find_unit, is_nilalgebra, primitive_idempotents, series};

/// One constructor family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub kind: Kind,
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "r2", params: &[], kind: Kind::Lie, description: "[X1,X2] = X2" },
    CatalogEntry { name: "abelian", params: &["n"], kind: Kind::Lie, description: "abelian Lie algebra a_n" },
    CatalogEntry {
        name: "heisenberg",
        params: &["n"],
        kind: Kind::Lie,
        description: "[X_i, X_{m+i}] = X_n for n = 2m+1",
    },
    CatalogEntry { name: "sl2", params: &[], kind: Kind::Lie, description: "[H,E] = 2E, [H,F] = -2F, [E,F] = H" },
    CatalogEntry {
        name: "t-oplus-a",
        params: &["n", "s"],
        kind: Kind::Lie,
        description: "t_n + a_n with s rotation pairs (Y1..Yn, X1..Xn)",
    },
    CatalogEntry { name: "m1", params: &["q"], kind: Kind::AssocComm, description: "q orthogonal idempotents" },
    CatalogEntry { name: "null", params: &["n"], kind: Kind::AssocComm, description: "zero product" },
    CatalogEntry {
        name: "real-rigid",
        params: &["n", "s"],
        kind: Kind::AssocComm,
        description: "s complex-type blocks e_{2i}^2 = -e_{2i-1}, then idempotents",
    },
    CatalogEntry {
        name: "poly",
        params: &["n"],
        kind: Kind::AssocComm,
        description: "K[x]/(x^n), basis 1, x, ..., x^{n-1}",
    },
];

pub fn entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}

fn one() -> Scalar {
    Scalar::one()
}

fn int(c: i64) -> Scalar {
    Scalar::from_int(c)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub fn r2() -> Algebra {
    Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, one())]).expect("valid table")
}

pub fn abelian(n: usize) -> Algebra {
    Algebra::zero_product(format!("abelian({n})"), Kind::Lie, Field::Q, n)
}

pub fn heisenberg(n: usize) -> Result<Algebra> {
    if n < 3 || n % 2 == 0 {
        return Err(invalid(format!("heisenberg needs odd n >= 3, got {n}")));
    }
    let m = n / 2;
    let e: Vec<_> = (1..=m).map(|i| (i, m + i, n, one())).collect();
    Algebra::new(format!("heisenberg({n})"), Kind::Lie, Field::Q, n, &e)
}

pub fn sl2() -> Algebra {
    Algebra::new("sl2", Kind::Lie, Field::Q, 3, &[(1, 2, 2, int(2)), (1, 3, 3, int(-2)), (2, 3, 1, one())])
        .and_then(|a| a.with_basis_labels(Some(vec!["H".into(), "E".into(), "F".into()])))
        .expect("valid table")
}

pub fn m1(q: usize) -> Result<Algebra> {
    if q == 0 {
        return Err(invalid("m1 needs q >= 1"));
    }
    let e: Vec<_> = (1..=q).map(|i| (i, i, i, one())).collect();
    Algebra::new(format!("m1({q})"), Kind::AssocComm, Field::Q, q, &e)
}

pub fn null(n: usize) -> Algebra {
    Algebra::zero_product(format!("null({n})"), Kind::AssocComm, Field::Q, n)
}

pub fn real_rigid(n: usize, s: usize) -> Result<Algebra> {
    if n == 0 || 2 * s > n {
        return Err(invalid(format!("real-rigid needs n >= 1 and 2s <= n, got n = {n}, s = {s}")));
    }
    let mut e = Vec::new();
    for i in 1..=s {
        let (a, b) = (2 * i - 1, 2 * i);
        e.push((a, a, a, one()));
        e.push((a, b, b, one()));
        e.push((b, b, a, int(-1)));
    }
    for j in 2 * s + 1..=n {
        e.push((j, j, j, one()));
    }
    Algebra::new(format!("real-rigid({n},{s})"), Kind::AssocComm, Field::Q, n, &e)
}

pub fn poly(n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(invalid("poly needs n >= 1"));
    }
    // e_k = x^{k-1}
    let mut e = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            if i + j - 1 <= n {
                e.push((i, j, i + j - 1, one()));
            }
        }
    }
    Algebra::new(format!("poly({n})"), Kind::AssocComm, Field::Q, n, &e)
}

/// The `2n`-dimensional Lie algebra `t_n ⊕ a_n` with basis
/// `Y_1..Y_n, X_1..X_n`: `s` pairs acting by rotation and scaling, then
/// `[Y_i, X_i] = X_i`.
pub fn t_oplus_a(n: usize, s: usize) -> Result<Algebra> {
    if n == 0 || 2 * s > n {
        return Err(invalid(format!("t-oplus-a needs n >= 1 and 2s <= n, got n = {n}, s = {s}")));
    }
    let y = |i: usize| i;
    let x = |i: usize| n + i;
    let mut e = Vec::new();
    for i in 1..=s {
        let (a, b) = (2 * i - 1, 2 * i);
        e.push((y(a), x(a), x(b), int(-1)));
        e.push((y(a), x(b), x(a), one()));
        e.push((y(b), x(a), x(a), one()));
        e.push((y(b), x(b), x(b), one()));
    }
    for j in 2 * s + 1..=n {
        e.push((y(j), x(j), x(j), one()));
    }
    let labels = (1..=n).map(|i| format!("Y{i}")).chain((1..=n).map(|i| format!("X{i}"))).collect();
    Algebra::new(format!("t-oplus-a({n},{s})"), Kind::Lie, Field::Q, 2 * n, &e)?.with_basis_labels(Some(labels))
}

/// Builds a catalog algebra from its name and parameters.
pub fn make(name: &str, params: &[usize]) -> Result<Algebra> {
    let e = entry(name).ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
    if params.len() != e.params.len() {
        return Err(invalid(format!(
            "{name} takes {} parameter(s) ({}), got {}",
            e.params.len(),
            e.params.join(", "),
            params.len()
        )));
    }
    match (name, params) {
        ("r2", []) => Ok(r2()),
        ("abelian", &[n]) => Ok(abelian(n)),
        ("heisenberg", &[n]) => heisenberg(n),
        ("sl2", []) => Ok(sl2()),
        ("t-oplus-a", &[n, s]) => t_oplus_a(n, s),
        ("m1", &[q]) => m1(q),
        ("null", &[n]) => Ok(null(n)),
        ("real-rigid", &[n, s]) => real_rigid(n, s),
        ("poly", &[n]) => poly(n),
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}

/// Parses `name` or `name(p1,p2,…)`.
pub fn parse_spec(spec: &str) -> Result<(String, Vec<usize>)> {
    let spec = spec.trim();
    let Some(open) = spec.find('(') else {
        return Ok((spec.to_string(), Vec::new()));
    };
    let inner = spec[open + 1..].strip_suffix(')').ok_or_else(|| invalid(format!("missing ')' in {spec:?}")))?;
    let params = inner
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| invalid(format!("bad parameter {p:?} in {spec:?}"))))
        .collect::<Result<Vec<_>>>()?;
    Ok((spec[..open].trim().to_string(), params))
}

pub fn make_from_spec(spec: &str) -> Result<Algebra> {
    let (name, params) = parse_spec(spec)?;
    make(&name, &params)
}

/// Which sign `f_{1,2p}(X_{2p})` carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TorusVariant {
    /// `f(X_{2p−1}) = X_{2p}`, `f(X_{2p}) = X_{2p−1}`.
    AsPrinted,
    /// `f(X_{2p−1}) = X_{2p}`, `f(X_{2p}) = −X_{2p−1}`.
    Rotation,
}

/// `f_i`, the projection onto `X_i` (1-based).
fn f_diag(n: usize, idx: &[usize]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &i in idx {
        m[(i - 1, i - 1)] = one();
    }
    m
}

/// Generators of the torus `t_k` of derivations of `a_n`: `k − 1` pairs
/// `f_{1,2p}, f_{2p−1} + f_{2p}`, then `f_j` on the remaining coordinates.
/// Valid for `1 ≤ k ≤ ⌊n/2⌋ + 1`.
pub fn torus_generators(n: usize, k: usize, variant: TorusVariant) -> Result<Vec<Matrix>> {
    if n == 0 || k == 0 || k > n / 2 + 1 {
        return Err(invalid(format!("torus t_{k} of a_{n} needs 1 <= k <= {}", n / 2 + 1)));
    }
    let mut out = Vec::new();
    for p in 1..k {
        let (a, b) = (2 * p - 2, 2 * p - 1);
        let mut f = Matrix::zeros(n, n);
        f[(b, a)] = one();
        f[(a, b)] = match variant {
            TorusVariant::AsPrinted => one(),
            TorusVariant::Rotation => int(-1),
        };
        out.push(f);
        out.push(f_diag(n, &[a + 1, b + 1]));
    }
    for j in 2 * (k - 1) + 1..=n {
        out.push(f_diag(n, &[j]));
    }
    Ok(out)
}

/// Outcome of the torus property checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusCheck {
    pub derivations: bool,
    pub commuting: bool,
    pub semisimple: bool,
    pub span_dim: usize,
}

impl TorusCheck {
    pub fn holds(&self, n: usize) -> bool {
        self.derivations && self.commuting && self.semisimple && self.span_dim == n
    }
}

pub fn check_torus(n: usize, gens: &[Matrix]) -> TorusCheck {
    let a = abelian(n);
    TorusCheck {
        derivations: gens.iter().all(|g| a.is_derivation(g)),
        commuting: gens.iter().all(|x| gens.iter().all(|y| x.commutator(y).is_zero())),
        semisimple: gens.iter().all(|g| operator_analysis(g).is_semisimple),
        span_dim: Subspace::span(n * n, &gens.iter().map(Matrix::vectorize).collect::<Vec<_>>()).dim(),
    }
}

/// How `t_n ⊕ a_n` is matched with `r2 ⊗ real-rigid(n, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Identification {
    /// `Y_i = U_1⊗e_i`, `X_{2i} = U_2⊗e_{2i−1}`, `X_{2i−1} = U_2⊗e_{2i}`,
    /// `X_j = U_2⊗e_j`.
    AsPrinted,
    /// As printed, with `Y_{2i−1}` and `Y_{2i}` exchanged as well.
    Consistent,
}

/// Permutation `perm` with `current_algebra(r2, real_rigid(n, s)).permute(perm)`
/// expressed in the basis `Y_1..Y_n, X_1..X_n` (0-based flat indices).
pub fn identification(n: usize, s: usize, kind: Identification) -> Result<Vec<usize>> {
    if n == 0 || 2 * s > n {
        return Err(invalid(format!("identification needs n >= 1 and 2s <= n, got n = {n}, s = {s}")));
    }
    let swap = |m: usize| -> usize {
        if m <= 2 * s {
            if m % 2 == 1 {
                m + 1
            } else {
                m - 1
            }
        } else {
            m
        }
    };
    let ys = (1..=n).map(|m| match kind {
        Identification::AsPrinted => m - 1,
        Identification::Consistent => swap(m) - 1,
    });
    let xs = (1..=n).map(|m| n + swap(m) - 1);
    Ok(ys.chain(xs).collect())
}

/// Columns `u = (e_{2i−1} + i·e_{2i})/2`, `v = (e_{2i−1} − i·e_{2i})/2` for
/// each complex-type block, then `e_j`.
pub fn complex_block_basis(n: usize, s: usize) -> Result<Matrix> {
    if 2 * s > n {
        return Err(invalid(format!("2s <= n required, got n = {n}, s = {s}")));
    }
    let half = Scalar::frac(1, 2);
    let ihalf = &Scalar::i() * &half;
    let mut m = Matrix::zeros(n, n);
    for p in 0..s {
        let (a, b) = (2 * p, 2 * p + 1);
        m[(a, a)] = half.clone();
        m[(b, a)] = ihalf.clone();
        m[(a, b)] = half.clone();
        m[(b, b)] = -ihalf.clone();
    }
    for j in 2 * s..n {
        m[(j, j)] = one();
    }
    Ok(m)
}

/// Basis-independent invariants; equal fingerprints are necessary for
/// isomorphism. `name` does not take part in comparisons.
#[derive(Clone, Debug, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub name: String,
    pub dim: usize,
    pub kind: Kind,
    pub center_dim: Option<usize>,
    pub is_solvable: Option<bool>,
    /// Nilpotent Lie algebra, or nilalgebra.
    pub is_nilpotent: bool,
    pub der_dim: usize,
    pub h1_dim: Option<usize>,
    /// Chevalley `H²` for Lie algebras, Harrison `H²` otherwise.
    pub h2_dim: usize,
    pub unit_exists: Option<bool>,
    /// Number of nonzero idempotents; `None` when the search could not be
    /// certified complete.
    pub idempotent_count: Option<u64>,
}

impl PartialEq for Fingerprint {
    fn eq(&self, o: &Self) -> bool {
        (
            self.dim,
            self.kind,
            self.center_dim,
            self.is_solvable,
            self.is_nilpotent,
            self.der_dim,
            self.h1_dim,
            self.h2_dim,
            self.unit_exists,
            self.idempotent_count,
        ) == (
            o.dim,
            o.kind,
            o.center_dim,
            o.is_solvable,
            o.is_nilpotent,
            o.der_dim,
            o.h1_dim,
            o.h2_dim,
            o.unit_exists,
            o.idempotent_count,
        )
    }
}

pub fn fingerprint(alg: &Algebra) -> Result<Fingerprint> {
    alg.require_identities()?;
    let der_dim = derivation_space(alg).dim();
    let base = Fingerprint {
        name: alg.name().to_string(),
        dim: alg.dim(),
        kind: alg.kind(),
        center_dim: None,
        is_solvable: None,
        is_nilpotent: false,
        der_dim,
        h1_dim: None,
        h2_dim: 0,
        unit_exists: None,
        idempotent_count: None,
    };
    match alg.kind() {
        Kind::Lie => {
            let s = series(alg)?;
            Ok(Fingerprint {
                center_dim: Some(center(alg)?.dim()),
                is_solvable: Some(s.is_solvable),
                is_nilpotent: s.is_nilpotent,
                h1_dim: Some(chevalley_dims(alg, 1)?.dim_h),
                h2_dim: chevalley_dims(alg, 2)?.dim_h,
                ..base
            })
        }
        Kind::AssocComm => {
            let count = match primitive_idempotents(alg) {
                Ok(p) => Some((1u64 << p.len()) - 1),
                Err(Error::SearchBound(_)) => None,
                Err(e) => return Err(e),
            };
            Ok(Fingerprint {
                is_nilpotent: is_nilalgebra(alg)?,
                h2_dim: harrison_h2(alg)?.dim_h,
                unit_exists: Some(find_unit(alg)?.is_some()),
                idempotent_count: count,
                ..base
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::current::current_algebra;

    #[test]
    fn catalog_algebras_pass_identities() {
        for spec in [
            "r2",
            "abelian(3)",
            "heisenberg(3)",
            "heisenberg(5)",
            "sl2",
            "t-oplus-a(3,1)",
            "m1(3)",
            "null(2)",
            "real-rigid(5,2)",
            "poly(4)",
        ] {
            assert!(make_from_spec(spec).unwrap().check_identities().pass, "{spec}");
        }
        assert!(matches!(make("nope", &[]), Err(Error::UnknownAlgebra(_))));
        assert!(make("real-rigid", &[2, 2]).is_err());
        assert!(make("m1", &[]).is_err());
    }

    #[test]
    fn real_rigid_tables() {
        let a = real_rigid(2, 1).unwrap();
        let e = |i, j, k, c| (i, j, k, int(c));
        assert_eq!(a.entries(), vec![e(1, 1, 1, 1), e(1, 2, 2, 1), e(2, 2, 1, -1)]);
        assert_eq!(real_rigid(3, 0).unwrap(), m1(3).unwrap());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(parse_spec("real-rigid(3, 1)").unwrap(), ("real-rigid".into(), vec![3, 1]));
        assert_eq!(parse_spec("sl2").unwrap(), ("sl2".into(), vec![]));
        assert!(parse_spec("m1(2").is_err());
        assert!(parse_spec("m1(x)").is_err());
    }

    #[test]
    fn torus_examples() {
        let g = torus_generators(2, 1, TorusVariant::AsPrinted).unwrap();
        assert_eq!(g, vec![f_diag(2, &[1]), f_diag(2, &[2])]);
        let g = torus_generators(2, 2, TorusVariant::AsPrinted).unwrap();
        assert_eq!(g, vec![Matrix::from_int_rows(&[&[0, 1], &[1, 0]]), Matrix::identity(2)]);
        let g = torus_generators(3, 2, TorusVariant::Rotation).unwrap();
        assert_eq!(g[0], Matrix::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]));
        assert!(check_torus(3, &g).holds(3));
        assert!(torus_generators(3, 3, TorusVariant::Rotation).is_err());
    }

    #[test]
    fn identifications() {
        for (n, s) in [(2, 1), (3, 1)] {
            let c = current_algebra(&r2(), &real_rigid(n, s).unwrap()).unwrap();
            let t = t_oplus_a(n, s).unwrap();
            assert_eq!(c.permute(&identification(n, s, Identification::Consistent).unwrap()).unwrap(), t);
            assert_ne!(c.permute(&identification(n, s, Identification::AsPrinted).unwrap()).unwrap(), t);
        }
        let c = current_algebra(&r2(), &real_rigid(2, 0).unwrap()).unwrap();
        let p = identification(2, 0, Identification::AsPrinted).unwrap();
        assert_eq!(c.permute(&p).unwrap(), t_oplus_a(2, 0).unwrap());
    }

    #[test]
    fn fingerprints() {
        let f = fingerprint(&r2()).unwrap();
        assert_eq!(
            (f.dim, f.center_dim, f.is_solvable, f.is_nilpotent, f.der_dim, f.h1_dim, f.h2_dim),
            (2, Some(0), Some(true), false, 2, Some(0), 0)
        );
        let f = fingerprint(&m1(2).unwrap()).unwrap();
        assert_eq!((f.unit_exists, f.idempotent_count, f.der_dim, f.h2_dim), (Some(true), Some(3), 0, 0));
        let f = fingerprint(&abelian(2)).unwrap();
        assert_eq!((f.center_dim, f.der_dim, f.h1_dim, f.h2_dim), (Some(2), 4, Some(4), 2));
        assert_eq!(fingerprint(&r2().with_name("other")).unwrap(), fingerprint(&r2()).unwrap());
    }
}
