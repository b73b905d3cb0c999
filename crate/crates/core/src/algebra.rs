//! The [`Algebra`] value: a finite-dimensional algebra given by a sparse,
//! symmetry-reduced table of structure constants.
//!
//! Basis vectors and vector coordinates are 0-based in the Rust API. Every
//! user-facing surface (files, reports, witness tuples) is 1-based.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// Symmetry class of the multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// Skew-symmetric bracket; only `i < j` products are stored.
    #[serde(rename = "lie")]
    Lie,
    /// Commutative product; only `i ≤ j` products are stored.
    #[serde(rename = "assoc-comm")]
    AssocComm,
}

impl Kind {
    pub fn tag(self) -> &'static str {
        match self {
            Kind::Lie => "lie",
            Kind::AssocComm => "assoc-comm",
        }
    }

    /// Whether `(i, j)` is a stored key for this kind.
    pub fn is_stored_pair(self, i: usize, j: usize) -> bool {
        match self {
            Kind::Lie => i < j,
            Kind::AssocComm => i <= j,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "lie" => Ok(Kind::Lie),
            "assoc-comm" => Ok(Kind::AssocComm),
            other => Err(format!("unknown kind `{other}` (expected lie or assoc-comm)")),
        }
    }
}

/// A finite-dimensional algebra over Q or Q(i).
///
/// Equality compares kind, field, dimension and the constant table; the name
/// and basis labels are presentation only.
#[derive(Clone)]
pub struct Algebra {
    name: String,
    kind: Kind,
    field: Field,
    dim: usize,
    basis: Option<Vec<String>>,
    products: BTreeMap<(usize, usize), Vector>,
}

impl PartialEq for Algebra {
    fn eq(&self, o: &Self) -> bool {
        self.kind == o.kind && self.field == o.field && self.dim == o.dim && self.products == o.products
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{} over {}, dim {}]", self.name, self.kind, self.field, self.dim)?;
        for (&(i, j), v) in &self.products {
            write!(f, " e{}·e{}=(", i + 1, j + 1)?;
            for (k, c) in v.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// One violated identity: for Lie algebras the Jacobi residual at the basis
/// triple `(i, j, k)`, for commutative algebras the associator
/// `(e_i e_j) e_k − e_i (e_j e_k)`. Indices are 1-based; `s` is the output
/// coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub s: usize,
    pub residual: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub pass: bool,
    pub violations: Vec<Violation>,
}

impl Algebra {
    /// Builds an algebra from 1-based entries `(i, j, k, c)`, meaning that
    /// `e_i e_j` has coefficient `c` on `e_k`. Only symmetry-reduced keys are
    /// accepted (`i < j` for Lie, `i ≤ j` for commutative algebras), and each
    /// `(i, j, k)` may appear once.
    pub fn new(
        name: impl Into<String>,
        kind: Kind,
        field: Field,
        dim: usize,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be positive".into()));
        }
        let mut products: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, c) in entries {
            let (i, j, k) = (*i, *j, *k);
            for x in [i, j, k] {
                if x == 0 || x > dim {
                    return Err(Error::InvalidParameter(format!("index {x} out of range 1..{dim}")));
                }
            }
            if !kind.is_stored_pair(i - 1, j - 1) {
                return Err(Error::InvalidParameter(format!("lower-triangular entry ({i},{j},{k}) for kind {kind}")));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::InvalidParameter(format!("duplicate entry ({i},{j},{k})")));
            }
            if !field.contains(c) {
                return Err(Error::FieldMismatch { left: field, right: Field::Qi });
            }
            let v = products.entry((i - 1, j - 1)).or_insert_with(|| zero_vector(dim));
            v[k - 1] = c.clone();
        }
        products.retain(|_, v| !is_zero_vector(v));
        Ok(Algebra { name: name.into(), kind, field, dim, basis: None, products })
    }

    /// Builds an algebra from a product function on 0-based basis pairs,
    /// sampled on the stored keys only.
    pub fn from_products(
        name: impl Into<String>,
        kind: Kind,
        field: Field,
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vector,
    ) -> Algebra {
        let mut products = BTreeMap::new();
        for i in 0..dim {
            for j in i..dim {
                if !kind.is_stored_pair(i, j) {
                    continue;
                }
                let v = product(i, j);
                assert_eq!(v.len(), dim);
                debug_assert!(v.iter().all(|c| field.contains(c)));
                if !is_zero_vector(&v) {
                    products.insert((i, j), v);
                }
            }
        }
        Algebra { name: name.into(), kind, field, dim, basis: None, products }
    }

    /// The algebra with all products zero.
    pub fn zero_product(name: impl Into<String>, kind: Kind, field: Field, dim: usize) -> Algebra {
        Algebra { name: name.into(), kind, field, dim, basis: None, products: BTreeMap::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> Option<&[String]> {
        self.basis.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Algebra {
        self.name = name.into();
        self
    }

    pub fn with_basis_labels(mut self, labels: Option<Vec<String>>) -> Result<Algebra> {
        if let Some(l) = &labels {
            if l.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, found: l.len() });
            }
        }
        self.basis = labels;
        Ok(self)
    }

    /// Stored products `((i, j), e_i e_j)` with 0-based keys, in key order.
    pub fn stored_products(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.products.iter()
    }

    /// 1-based nonzero entries `(i, j, k, c)` of the stored table, sorted.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (&(i, j), v) in &self.products {
            for (k, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    out.push((i + 1, j + 1, k + 1, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero_product(&self) -> bool {
        self.products.is_empty()
    }

    /// `e_i e_j` for 0-based basis indices, with the symmetry class applied.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        if let Some(v) = self.products.get(&(i, j)) {
            return v.clone();
        }
        if i != j {
            if let Some(v) = self.products.get(&(j, i)) {
                return match self.kind {
                    Kind::Lie => v.iter().map(|c| -c).collect(),
                    Kind::AssocComm => v.clone(),
                };
            }
        }
        zero_vector(self.dim)
    }

    /// Coefficient of `e_k` in `e_i e_j`, all 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        let sign_swap = |v: &Vector| match self.kind {
            Kind::Lie => -&v[k],
            Kind::AssocComm => v[k].clone(),
        };
        match (self.products.get(&(i, j)), self.products.get(&(j, i))) {
            (Some(v), _) => v[k].clone(),
            (None, Some(v)) if i != j => sign_swap(v),
            _ => Scalar::zero(),
        }
    }

    fn check_vector(&self, x: &[Scalar]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        if !x.iter().all(|c| self.field.contains(c)) {
            return Err(Error::FieldMismatch { left: self.field, right: Field::Qi });
        }
        Ok(())
    }

    /// Bilinear product `x·y` (the bracket for Lie algebras).
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        self.check_vector(x)?;
        self.check_vector(y)?;
        Ok(self.mul(x, y))
    }

    /// Unchecked bilinear product; panics on length mismatch.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "vector length differs from dimension");
        let mut out = zero_vector(self.dim);
        for (&(i, j), v) in &self.products {
            let xy = &x[i] * &y[j];
            let coeff = if i == j {
                xy
            } else {
                let yx = &x[j] * &y[i];
                match self.kind {
                    Kind::Lie => xy - yx,
                    Kind::AssocComm => xy + yx,
                }
            };
            add_scaled(&mut out, &coeff, v);
        }
        out
    }

    /// Left multiplication `L_x` (`ad x` for Lie algebras): column `j` is `x·e_j`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(x, &unit_vector(self.dim, j))).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// `L_{e_i}` for a 0-based basis index.
    pub fn left_mult_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul_basis(i, j)).collect();
        Matrix::from_columns(self.dim, &cols)
    }

    /// Exact identity check: Jacobi on basis triples `i < j < k` for Lie
    /// algebras, associativity on all basis triples for commutative ones.
    pub fn check_identities(&self) -> IdentityReport {
        let n = self.dim;
        let mut violations = Vec::new();
        let mut record = |i: usize, j: usize, k: usize, r: Vector| {
            for (s, c) in r.into_iter().enumerate() {
                if !c.is_zero() {
                    violations.push(Violation { i: i + 1, j: j + 1, k: k + 1, s: s + 1, residual: c });
                }
            }
        };
        match self.kind {
            Kind::Lie => {
                for i in 0..n {
                    for j in i + 1..n {
                        for k in j + 1..n {
                            record(i, j, k, self.jacobiator_basis(i, j, k));
                        }
                    }
                }
            }
            Kind::AssocComm => {
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let left = self.mul(&self.mul_basis(i, j), &unit_vector(n, k));
                            let right = self.mul(&unit_vector(n, i), &self.mul_basis(j, k));
                            let r: Vector = left.iter().zip(&right).map(|(a, b)| a - b).collect();
                            record(i, j, k, r);
                        }
                    }
                }
            }
        }
        IdentityReport { pass: violations.is_empty(), violations }
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator_basis(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim;
        let mut out = zero_vector(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let t = self.mul(&self.mul_basis(a, b), &unit_vector(n, c));
            add_scaled(&mut out, &Scalar::one(), &t);
        }
        out
    }

    /// Whether `f` satisfies `f(xy) = f(x)y + x f(y)` on all basis pairs.
    pub fn is_derivation(&self, f: &Matrix) -> bool {
        assert_eq!(f.nrows(), self.dim);
        let n = self.dim;
        let images: Vec<Vector> = f.columns();
        for i in 0..n {
            for j in 0..n {
                let lhs = f.apply(&self.mul_basis(i, j));
                let mut rhs = self.mul(&images[i], &unit_vector(n, j));
                add_scaled(&mut rhs, &Scalar::one(), &self.mul(&unit_vector(n, i), &images[j]));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The transported product `μ_f(x, y) = f⁻¹(μ(f x, f y))`.
    pub fn change_basis(&self, f: &Matrix) -> Result<Algebra> {
        if !f.is_square() || f.nrows() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: f.nrows() });
        }
        if !f.entries().all(|c| self.field.contains(c)) {
            return Err(Error::FieldMismatch { left: self.field, right: Field::Qi });
        }
        let inv = f.inverse()?;
        let cols = f.columns();
        let out = Algebra::from_products(self.name.clone(), self.kind, self.field, self.dim, |i, j| {
            inv.apply(&self.mul(&cols[i], &cols[j]))
        });
        Ok(Algebra { basis: None, ..out })
    }

    /// Product algebra with zero cross products; `b`'s basis follows `a`'s.
    pub fn direct_sum(&self, b: &Algebra) -> Result<Algebra> {
        if self.kind != b.kind {
            return Err(Error::KindMismatch { expected: self.kind.to_string(), found: b.kind.to_string() });
        }
        if self.field != b.field {
            return Err(Error::FieldMismatch { left: self.field, right: b.field });
        }
        let (n, m) = (self.dim, b.dim);
        let mut products = BTreeMap::new();
        for (&(i, j), v) in &self.products {
            let mut w = v.clone();
            w.resize(n + m, Scalar::zero());
            products.insert((i, j), w);
        }
        for (&(i, j), v) in &b.products {
            let mut w = zero_vector(n);
            w.extend(v.iter().cloned());
            products.insert((i + n, j + n), w);
        }
        Ok(Algebra {
            name: format!("{}+{}", self.name, b.name),
            kind: self.kind,
            field: self.field,
            dim: n + m,
            basis: None,
            products,
        })
    }

    /// Direct sum of `k ≥ 1` copies.
    pub fn power(&self, k: usize) -> Result<Algebra> {
        if k == 0 {
            return Err(Error::InvalidParameter("direct power needs at least one factor".into()));
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.direct_sum(self)?;
        }
        Ok(out.with_name(format!("{}^{k}", self.name)))
    }

    /// Scalar extension from Q to Q(i); the table is unchanged.
    pub fn complexify(&self) -> Result<Algebra> {
        if self.field != Field::Q {
            return Err(Error::FieldMismatch { left: Field::Q, right: self.field });
        }
        Ok(Algebra { field: Field::Qi, ..self.clone() })
    }

    /// Re-tags an algebra over Q(i) as one over Q when all constants are real.
    pub fn to_rational(&self) -> Result<Algebra> {
        if self.field == Field::Q {
            return Ok(self.clone());
        }
        if self.products.values().flatten().all(Scalar::is_real) {
            Ok(Algebra { field: Field::Q, ..self.clone() })
        } else {
            Err(Error::FieldMismatch { left: Field::Q, right: Field::Qi })
        }
    }

    /// Re-tags to `field`, widening or narrowing as needed.
    pub fn over_field(&self, field: Field) -> Result<Algebra> {
        match (self.field, field) {
            (a, b) if a == b => Ok(self.clone()),
            (Field::Q, Field::Qi) => self.complexify(),
            _ => self.to_rational(),
        }
    }

    /// Reorders the basis: new basis vector `k` is old basis vector `perm[k]`
    /// (0-based).
    pub fn permute(&self, perm: &[usize]) -> Result<Algebra> {
        let n = self.dim;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: perm.len() });
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidParameter(format!("not a permutation of 0..{n}")));
            }
            seen[p] = true;
        }
        let mut f = Matrix::zeros(n, n);
        for (k, &p) in perm.iter().enumerate() {
            f[(p, k)] = Scalar::one();
        }
        let mut out = self.change_basis(&f)?;
        if let Some(labels) = &self.basis {
            out.basis = Some(perm.iter().map(|&p| labels[p].clone()).collect());
        }
        Ok(out)
    }

    /// The subalgebra on `w` in the echelon basis of `w`, if `w` is closed
    /// under the product.
    pub fn restrict(&self, w: &Subspace) -> Option<Algebra> {
        assert_eq!(w.ambient(), self.dim);
        if w.is_zero() {
            return None;
        }
        let basis = w.basis();
        let mut coords = BTreeMap::new();
        for i in 0..basis.len() {
            for j in i..basis.len() {
                if !self.kind.is_stored_pair(i, j) {
                    continue;
                }
                let c = w.coordinates(&self.mul(&basis[i], &basis[j]))?;
                coords.insert((i, j), c);
            }
        }
        Some(Algebra::from_products(self.name.clone(), self.kind, self.field, w.dim(), |i, j| coords[&(i, j)].clone()))
    }

    /// Whether `x·x = x` and `x ≠ 0`.
    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        x.len() == self.dim && !is_zero_vector(x) && self.mul(x, x) == x
    }

    pub fn require_kind(&self, kind: Kind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch { expected: kind.to_string(), found: self.kind.to_string() })
        }
    }

    pub fn require_identities(&self) -> Result<()> {
        let r = self.check_identities();
        match r.violations.first() {
            None => Ok(()),
            Some(v) => Err(Error::IdentityFailure(format!(
                "{}: residual {} at ({},{},{}) coordinate {}",
                self.name, v.residual, v.i, v.j, v.k, v.s
            ))),
        }
    }
}
