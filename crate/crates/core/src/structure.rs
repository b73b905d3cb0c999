//! Structural analysis: center, derived and lower central series, nil
//! algebras, units, idempotents, Pierce decompositions, and nilpotency of
//! operator spaces.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Kind};
use crate::cohomology::derivations;
use crate::error::{Error, Result};
use crate::linalg::factor::irreducible_factors;
use crate::linalg::{add_scaled, is_zero_vector, min_poly, unit_vector, zero_vector, Matrix, Poly, Subspace, Vector};
use crate::scalar::{Field, Scalar};

/// `Z(g) = {x : [x, e_j] = 0 for all j}`.
pub fn center(g: &Algebra) -> Result<Subspace> {
    g.require_kind(Kind::Lie)?;
    let n = g.dim();
    // column i stacks [e_i, e_j] over j
    let cols: Vec<Vector> = (0..n).map(|i| (0..n).flat_map(|j| g.mul_basis(i, j)).collect()).collect();
    Ok(Matrix::from_columns(n * n, &cols).kernel())
}

/// `span{u·w : u ∈ U, w ∈ W}`.
pub fn product_span(alg: &Algebra, u: &Subspace, w: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for x in u.basis() {
        for y in w.basis() {
            let v = alg.mul(x, y);
            if !is_zero_vector(&v) {
                vecs.push(v);
            }
        }
    }
    Subspace::span(alg.dim(), &vecs)
}

/// `[g, g]`.
pub fn derived_algebra(g: &Algebra) -> Result<Subspace> {
    g.require_kind(Kind::Lie)?;
    let full = Subspace::full(g.dim());
    Ok(product_span(g, &full, &full))
}

/// Derived and lower central series, each listed until it stabilizes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub derived: Vec<Subspace>,
    pub lower_central: Vec<Subspace>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    /// Least `k` with `C^{k+1} g = 0`, where `C^1 g = g`.
    pub nil_index: Option<usize>,
}

fn chain(start: Subspace, mut next: impl FnMut(&Subspace) -> Subspace) -> Vec<Subspace> {
    let mut out = vec![start];
    loop {
        let last = out.last().expect("nonempty chain");
        if last.is_zero() {
            return out;
        }
        let n = next(last);
        if &n == last {
            return out;
        }
        out.push(n);
    }
}

pub fn series(g: &Algebra) -> Result<SeriesReport> {
    g.require_kind(Kind::Lie)?;
    let full = Subspace::full(g.dim());
    let derived = chain(full.clone(), |d| product_span(g, d, d));
    let lower_central = chain(full.clone(), |c| product_span(g, &full, c));
    let is_solvable = derived.last().is_some_and(Subspace::is_zero);
    let is_nilpotent = lower_central.last().is_some_and(Subspace::is_zero);
    let nil_index = is_nilpotent.then(|| lower_central.len() - 1);
    Ok(SeriesReport { derived, lower_central, is_solvable, is_nilpotent, nil_index })
}

/// Powers `A ⊇ A² ⊇ A³ ⊇ …` until they stabilize.
pub fn powers(a: &Algebra) -> Result<Vec<Subspace>> {
    a.require_kind(Kind::AssocComm)?;
    let full = Subspace::full(a.dim());
    Ok(chain(full.clone(), |p| product_span(a, &full, p)))
}

/// Whether the powers of `A` reach zero.
pub fn is_nilalgebra(a: &Algebra) -> Result<bool> {
    Ok(powers(a)?.last().is_some_and(Subspace::is_zero))
}

/// The unit element, if `A` has one.
pub fn find_unit(a: &Algebra) -> Result<Option<Vector>> {
    a.require_kind(Kind::AssocComm)?;
    let n = a.dim();
    // Σ_i u_i e_i e_j = e_j for every j
    let cols: Vec<Vector> = (0..n).map(|i| (0..n).flat_map(|j| a.mul_basis(i, j)).collect()).collect();
    let rhs: Vector = (0..n).flat_map(|j| unit_vector(n, j)).collect();
    let Some(u) = Matrix::from_columns(n * n, &cols).solve(&rhs) else {
        return Ok(None);
    };
    Ok((0..n).all(|j| a.mul(&u, &unit_vector(n, j)) == unit_vector(n, j)).then_some(u))
}

/// How idempotents are searched for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdempotentStrategy {
    /// `Exhaustive` up to [`EXHAUSTIVE_DIM_BOUND`], `Eigen` above.
    #[default]
    Auto,
    /// Every idempotent, via a certified primary decomposition.
    Exhaustive,
    /// Idempotents from the eigenspace splitting of `L_a` for basis
    /// elements and the unit only.
    Eigen,
}

/// Largest dimension accepted by [`IdempotentStrategy::Exhaustive`] when no
/// candidates are supplied.
pub const EXHAUSTIVE_DIM_BOUND: usize = 4;

/// How many points of the moment curve are tried when splitting.
const CURVE_POINTS: i64 = 64;

/// `A⁺ = K·1 ⊕ A`, with `1` at index 0.
fn unitalization(a: &Algebra) -> Algebra {
    let n = a.dim();
    Algebra::from_products(format!("{}+1", a.name()), Kind::AssocComm, a.field(), n + 1, |i, j| match (i, j) {
        (0, 0) => unit_vector(n + 1, 0),
        (0, k) | (k, 0) => unit_vector(n + 1, k),
        (x, y) => {
            let mut v = vec![Scalar::zero()];
            v.extend(a.mul_basis(x - 1, y - 1));
            v
        }
    })
}

/// Elements used to split `A⁺`: basis elements (and a unit), then
/// small combinations, then points of the moment curve.
fn splitting_elements(plus: &Algebra, unit: Option<&Vector>, complete: bool) -> Vec<Vector> {
    let m = plus.dim();
    let mut out: Vec<Vector> = (1..m).map(|k| unit_vector(m, k)).collect();
    if let Some(u) = unit {
        let mut v = vec![Scalar::zero()];
        v.extend(u.iter().cloned());
        out.push(v);
    }
    if !complete {
        return out;
    }
    for i in 1..m {
        for j in i + 1..m {
            for c in [1, -1, 2] {
                let mut v = unit_vector(m, i);
                v[j] = Scalar::from_int(c);
                out.push(v);
            }
        }
    }
    for c in 2..=CURVE_POINTS {
        let mut v = zero_vector(m);
        let mut pw = Scalar::one();
        for k in 1..m {
            pw = &pw * &Scalar::from_int(c);
            v[k] = pw.clone();
        }
        out.push(v);
    }
    out
}

/// Rank of the trace form `(x, y) ↦ tr(L_{xy}|W)` on an ideal `W`, which is
/// `dim W / rad W` in characteristic 0.
fn semisimple_rank(plus: &Algebra, w: &Subspace) -> usize {
    let b = w.basis();
    let k = b.len();
    let mut t = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let xy = plus.mul(&b[i], &b[j]);
            let l = w.restrict(&plus.left_mult(&xy)).expect("ideal is invariant");
            let tr = l.trace();
            t[(i, j)] = tr.clone();
            t[(j, i)] = tr;
        }
    }
    t.rank()
}

fn multiplicity(m: &Poly, p: &Poly) -> usize {
    let mut k = 0;
    let mut cur = m.clone();
    while let Some(q) = cur.exact_div(p) {
        k += 1;
        cur = q;
    }
    k
}

/// Splits `A⁺` into ideals. With `complete`, every returned ideal is
/// certified local (its semisimple quotient is a field).
fn primary_components(a: &Algebra, complete: bool) -> Result<(Algebra, Vec<Subspace>)> {
    let plus = unitalization(a);
    let unit = find_unit(a)?;
    let elements = splitting_elements(&plus, unit.as_ref(), complete);
    let field: Field = a.field();
    let mut pending = vec![Subspace::full(plus.dim())];
    let mut done = Vec::new();
    'component: while let Some(w) = pending.pop() {
        let rad_rank = if complete { semisimple_rank(&plus, &w) } else { 0 };
        for b in &elements {
            let l = w.restrict(&plus.left_mult(b)).expect("ideal is invariant");
            let m = min_poly(&l);
            let factors = irreducible_factors(&m, field);
            if factors.len() > 1 {
                let basis = w.basis_matrix();
                for p in &factors {
                    let k = multiplicity(&m, p);
                    let ker = p.pow(k).eval_matrix(&l).kernel();
                    let vecs: Vec<Vector> = ker.basis().iter().map(|c| basis.apply(c)).collect();
                    pending.push(Subspace::span(plus.dim(), &vecs));
                }
                continue 'component;
            }
            if complete && factors.first().and_then(Poly::degree) == Some(rad_rank) {
                done.push(w);
                continue 'component;
            }
        }
        if complete {
            return Err(Error::SearchBound(format!(
                "could not split or certify a component of dimension {} in {}",
                w.dim(),
                a.name()
            )));
        }
        done.push(w);
    }
    Ok((plus, done))
}

/// Pairwise orthogonal idempotents `ε_k` of `A⁺` with `Σ ε_k = 1`, one per
/// component, as vectors of `A⁺`.
fn component_idempotents(plus: &Algebra, comps: &[Subspace]) -> Result<Vec<Vector>> {
    let m = plus.dim();
    let mut all = Vec::new();
    for c in comps {
        all.extend(c.basis().iter().cloned());
    }
    let coords = Matrix::from_columns(m, &all)
        .solve(&unit_vector(m, 0))
        .ok_or_else(|| Error::Inconsistent("components do not span the unitalization".into()))?;
    let mut out = Vec::new();
    let mut offset = 0;
    for c in comps {
        let mut e = zero_vector(m);
        for (x, b) in coords[offset..offset + c.dim()].iter().zip(c.basis()) {
            add_scaled(&mut e, x, b);
        }
        offset += c.dim();
        if !plus.is_idempotent(&e) {
            return Err(Error::Inconsistent("component projection is not idempotent".into()));
        }
        out.push(e);
    }
    Ok(out)
}

fn sort_key(v: &[Scalar]) -> (usize, Vec<usize>, String) {
    let support: Vec<usize> = (0..v.len()).filter(|&k| !v[k].is_zero()).collect();
    let txt = v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    (support.len(), support, txt)
}

fn sort_vectors(vs: &mut Vec<Vector>) {
    vs.sort_by_key(|v| sort_key(v));
    vs.dedup();
}

/// Primitive idempotents of `A`: the minimal nonzero idempotents, pairwise
/// orthogonal. Every idempotent of `A` is a sum of a subset of them.
pub fn primitive_idempotents(a: &Algebra) -> Result<Vec<Vector>> {
    a.require_kind(Kind::AssocComm)?;
    let (plus, comps) = primary_components(a, true)?;
    idempotents_of_a(&plus, &comps)
}

/// Splits component idempotents of `A⁺` into those lying in `A`.
fn idempotents_of_a(plus: &Algebra, comps: &[Subspace]) -> Result<Vec<Vector>> {
    let eps = component_idempotents(plus, comps)?;
    let mut prim: Vec<Vector> = eps.iter().filter(|e| e[0].is_zero()).map(|e| e[1..].to_vec()).collect();
    let with_one = eps.len() - prim.len();
    if with_one != 1 {
        return Err(Error::Inconsistent(format!("{with_one} components carry the adjoined unit")));
    }
    sort_vectors(&mut prim);
    Ok(prim)
}

/// All nonzero idempotents, using [`IdempotentStrategy::Auto`].
pub fn find_idempotents(a: &Algebra) -> Result<Vec<Vector>> {
    find_idempotents_with(a, IdempotentStrategy::Auto, &[])
}

/// Nonzero idempotents found by `strategy`, together with every supplied
/// candidate (each must be a nonzero idempotent). Sorted by support.
pub fn find_idempotents_with(a: &Algebra, strategy: IdempotentStrategy, candidates: &[Vector]) -> Result<Vec<Vector>> {
    a.require_kind(Kind::AssocComm)?;
    for c in candidates {
        if c.len() != a.dim() {
            return Err(Error::DimensionMismatch { expected: a.dim(), found: c.len() });
        }
        if !a.is_idempotent(c) {
            return Err(Error::NotIdempotent(fmt_vector(c)));
        }
    }
    let complete = match strategy {
        IdempotentStrategy::Auto => a.dim() <= EXHAUSTIVE_DIM_BOUND,
        IdempotentStrategy::Exhaustive => {
            if a.dim() > EXHAUSTIVE_DIM_BOUND && candidates.is_empty() {
                return Err(Error::SearchBound(format!(
                    "exhaustive idempotent search is limited to dimension {EXHAUSTIVE_DIM_BOUND}; supply candidates"
                )));
            }
            true
        }
        IdempotentStrategy::Eigen => false,
    };
    let mut out: Vec<Vector> = candidates.to_vec();
    if !(strategy == IdempotentStrategy::Exhaustive && a.dim() > EXHAUSTIVE_DIM_BOUND) {
        let (plus, comps) = primary_components(a, complete)?;
        let prim = idempotents_of_a(&plus, &comps)?;
        let m = prim.len();
        for mask in 1u64..(1u64 << m) {
            let mut e = zero_vector(a.dim());
            for (k, p) in prim.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    add_scaled(&mut e, &Scalar::one(), p);
                }
            }
            out.push(e);
        }
    }
    for e in &out {
        if !a.is_idempotent(e) {
            return Err(Error::Inconsistent(format!("search produced a non-idempotent {}", fmt_vector(e))));
        }
    }
    sort_vectors(&mut out);
    Ok(out)
}

pub(crate) fn fmt_vector(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

/// Pierce decomposition `A = A¹¹ ⊕ A⁰⁰` at an idempotent `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PierceSplit {
    pub e: Vector,
    pub a11: Subspace,
    pub a00: Subspace,
}

impl PierceSplit {
    /// Direct sum, eigenvalue conditions and `A¹¹·A⁰⁰ = 0`.
    pub fn invariants_hold(&self, a: &Algebra) -> bool {
        let le = a.left_mult(&self.e);
        self.a11.is_direct_sum_with(&self.a00)
            && self.a11.basis().iter().all(|x| le.apply(x) == *x)
            && self.a00.basis().iter().all(|x| is_zero_vector(&le.apply(x)))
            && product_span(a, &self.a11, &self.a00).is_zero()
    }
}

pub fn pierce(a: &Algebra, e: &[Scalar]) -> Result<PierceSplit> {
    a.require_kind(Kind::AssocComm)?;
    if e.len() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: e.len() });
    }
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent(fmt_vector(e)));
    }
    let le = a.left_mult(e);
    let n = a.dim();
    let split = PierceSplit { e: e.to_vec(), a11: le.sub(&Matrix::identity(n)).kernel(), a00: le.kernel() };
    if !split.invariants_hold(a) {
        return Err(Error::IdentityFailure(format!(
            "Pierce invariants fail at {} (is the algebra associative?)",
            fmt_vector(e)
        )));
    }
    Ok(split)
}

/// `A = A¹ ⊕ … ⊕ A^p ⊕ N` with unital components `A^k = A·e_k` and a nil
/// residual `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalDecomposition {
    pub components: Vec<Subspace>,
    pub idempotents: Vec<Vector>,
    pub nil_residual: Subspace,
}

/// Splits off one primitive idempotent at a time by Pierce decomposition of
/// the remaining `A⁰⁰`.
pub fn orthogonal_decomposition(a: &Algebra) -> Result<OrthogonalDecomposition> {
    a.require_kind(Kind::AssocComm)?;
    if is_nilalgebra(a)? {
        return Err(Error::Nilalgebra);
    }
    let prims = primitive_idempotents(a)?;
    let mut residual = Subspace::full(a.dim());
    let mut components = Vec::new();
    for e in &prims {
        if !residual.contains(e) {
            return Err(Error::Inconsistent("primitive idempotents are not orthogonal".into()));
        }
        let split = pierce(a, e)?;
        components.push(split.a11.intersection(&residual));
        residual = residual.intersection(&split.a00);
    }
    if let Some(r) = a.restrict(&residual) {
        if !is_nilalgebra(&r)? {
            return Err(Error::Inconsistent("residual after splitting is not nil".into()));
        }
    }
    Ok(OrthogonalDecomposition { components, idempotents: prims, nil_residual: residual })
}

fn common_kernel(ops: &[Matrix], n: usize) -> Subspace {
    let rows: Vec<Vector> = ops.iter().flat_map(|m| m.row_vecs()).collect();
    if rows.is_empty() {
        return Subspace::full(n);
    }
    Matrix::from_rows(rows).kernel()
}

/// Operators induced on `K^n / V`, in the coordinates of the standard basis
/// vectors complementary to the echelon pivots of `V`.
fn quotient_ops(ops: &[Matrix], v: &Subspace) -> Vec<Matrix> {
    let comp = v.complement_basis();
    let n = v.ambient();
    let reduce = |x: &Vector| -> Vector {
        let mut y = x.clone();
        for b in v.basis() {
            let p = (0..n).find(|&k| !b[k].is_zero()).expect("nonzero basis vector");
            if !y[p].is_zero() {
                let c = -y[p].clone();
                add_scaled(&mut y, &c, b);
            }
        }
        comp.iter().map(|&k| y[k].clone()).collect()
    };
    ops.iter()
        .map(|m| {
            let cols: Vec<Vector> = comp.iter().map(|&j| reduce(&m.column(j))).collect();
            Matrix::from_columns(comp.len(), &cols)
        })
        .collect()
}

/// Exact test that `tr((Σ t_i A_i)^d)` vanishes identically for
/// `d = 1..n`: the symmetrized products `P_α` over every multiset `α`
/// must be traceless.
fn trace_power_test(ops: &[Matrix], n: usize) -> bool {
    let m = ops.len();
    let mut layer: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
    layer.insert(vec![0; m], Matrix::identity(n));
    for _ in 1..=n {
        let mut next: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
        for (alpha, p) in &layer {
            for (i, op) in ops.iter().enumerate() {
                let mut beta = alpha.clone();
                beta[i] += 1;
                let term = p.mul(op);
                next.entry(beta).and_modify(|acc| *acc = acc.add(&term)).or_insert(term);
            }
        }
        if next.values().any(|p| !p.trace().is_zero()) {
            return false;
        }
        layer = next;
    }
    true
}

/// Whether every element of `span(ops)` is nilpotent. Common kernels are
/// split off and quotiented out until the space is exhausted; if that
/// stalls, an exact trace-power test decides the rest.
pub fn all_nilpotent_space(ops: &[Matrix]) -> Result<bool> {
    let Some(first) = ops.first() else {
        return Ok(true);
    };
    let n = first.nrows();
    for m in ops {
        if !m.is_square() || m.nrows() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.nrows() });
        }
    }
    let span = Subspace::span(n * n, &ops.iter().map(Matrix::vectorize).collect::<Vec<_>>());
    let mut cur: Vec<Matrix> = span.basis().iter().map(|v| Matrix::unvectorize(n, v)).collect();
    let mut dim = n;
    loop {
        if dim == 0 || cur.iter().all(Matrix::is_zero) {
            return Ok(true);
        }
        let k = common_kernel(&cur, dim);
        if k.is_zero() {
            return Ok(trace_power_test(&cur, dim));
        }
        dim -= k.dim();
        cur = quotient_ops(&cur, &k);
    }
}

/// Whether every derivation of `g` is nilpotent.
pub fn is_characteristically_nilpotent(g: &Algebra) -> Result<bool> {
    g.require_kind(Kind::Lie)?;
    all_nilpotent_space(&derivations(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn m1(q: usize) -> Algebra {
        let e: Vec<_> = (1..=q).map(|i| (i, i, i, Scalar::one())).collect();
        Algebra::new("m1", Kind::AssocComm, Field::Q, q, &e).unwrap()
    }

    fn real_rigid_2_1() -> Algebra {
        Algebra::new(
            "rr",
            Kind::AssocComm,
            Field::Q,
            2,
            &[(1, 1, 1, Scalar::one()), (1, 2, 2, Scalar::one()), (2, 2, 1, Scalar::from_int(-1))],
        )
        .unwrap()
    }

    #[test]
    fn idempotents_of_small_algebras() {
        assert_eq!(find_idempotents(&m1(2)).unwrap(), vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]);
        assert_eq!(find_idempotents(&real_rigid_2_1()).unwrap(), vec![v(&[1, 0])]);
        let c = real_rigid_2_1().complexify().unwrap();
        let found = find_idempotents(&c).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.contains(&v(&[1, 0])));
        assert!(found.iter().all(|e| e[0] == Scalar::frac(1, 2) || e == &v(&[1, 0])));
        let null = Algebra::zero_product("null", Kind::AssocComm, Field::Q, 2);
        assert!(find_idempotents(&null).unwrap().is_empty());
    }

    #[test]
    fn strategies_and_candidates() {
        let a = m1(5);
        assert_eq!(find_idempotents_with(&a, IdempotentStrategy::Eigen, &[]).unwrap().len(), 31);
        assert!(matches!(find_idempotents_with(&a, IdempotentStrategy::Exhaustive, &[]), Err(Error::SearchBound(_))));
        let e = v(&[1, 0, 0, 0, 0]);
        assert_eq!(find_idempotents_with(&a, IdempotentStrategy::Exhaustive, &[e.clone()]).unwrap(), vec![e]);
        assert!(matches!(
            find_idempotents_with(&m1(2), IdempotentStrategy::Auto, &[v(&[2, 0])]),
            Err(Error::NotIdempotent(_))
        ));
    }

    #[test]
    fn units_and_pierce() {
        assert_eq!(find_unit(&m1(3)).unwrap(), Some(v(&[1, 1, 1])));
        assert_eq!(find_unit(&real_rigid_2_1()).unwrap(), Some(v(&[1, 0])));
        assert_eq!(find_unit(&Algebra::zero_product("n", Kind::AssocComm, Field::Q, 2)).unwrap(), None);
        let s = pierce(&m1(2), &v(&[1, 0])).unwrap();
        assert_eq!(s.a11, Subspace::span(2, &[v(&[1, 0])]));
        assert_eq!(s.a00, Subspace::span(2, &[v(&[0, 1])]));
        assert!(pierce(&m1(2), &v(&[0, 0])).is_err());
    }

    #[test]
    fn decomposition() {
        let d = orthogonal_decomposition(&m1(3)).unwrap();
        assert_eq!(d.components.len(), 3);
        assert!(d.nil_residual.is_zero());
        let mixed = m1(1).direct_sum(&Algebra::zero_product("null", Kind::AssocComm, Field::Q, 1)).unwrap();
        let d = orthogonal_decomposition(&mixed).unwrap();
        assert_eq!(d.components, vec![Subspace::span(2, &[v(&[1, 0])])]);
        assert_eq!(d.nil_residual, Subspace::span(2, &[v(&[0, 1])]));
        assert!(matches!(
            orthogonal_decomposition(&Algebra::zero_product("null", Kind::AssocComm, Field::Q, 1)),
            Err(Error::Nilalgebra)
        ));
    }

    #[test]
    fn nilpotent_spaces() {
        let e12 = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let e23 = Matrix::from_int_rows(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(all_nilpotent_space(&[e12.clone(), e23]).unwrap());
        assert!(!all_nilpotent_space(&[Matrix::from_int_rows(&[&[1, 0], &[0, 0]])]).unwrap());
        let e21 = Matrix::from_int_rows(&[&[0, 0], &[1, 0]]);
        let e12b = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        assert!(!all_nilpotent_space(&[e12b, e21]).unwrap());
    }

    #[test]
    fn trace_fallback_on_space_without_common_kernel() {
        // aN + bK is nilpotent for all a, b but N and K share no kernel vector
        let n = Matrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let k = Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, -1, 0]]);
        assert!(common_kernel(&[n.clone(), k.clone()], 3).is_zero());
        assert!(all_nilpotent_space(&[n.clone(), k]).unwrap());
        let k2 = Matrix::from_int_rows(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(!all_nilpotent_space(&[n, k2]).unwrap());
    }
}
