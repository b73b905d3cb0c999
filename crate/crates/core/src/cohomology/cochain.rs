use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, is_zero_vector, zero_vector, Vector};
use crate::scalar::Scalar;

/// Strictly increasing `k`-tuples of `0..n`, in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(n, k, x + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// All `k`-tuples of `0..n`, in lexicographic order.
pub fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    out
}

/// Pairs `i ≤ j` of `0..n`, in lexicographic order.
pub fn symmetric_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// Sorts `t` in place and returns the permutation sign, or `None` when an
/// index repeats.
pub fn sort_with_sign(t: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    t.windows(2).all(|w| w[0] < w[1]).then_some(sign)
}

/// Flat coordinate of `(tuple rank, component)` in a cochain space with
/// values in `K^n`.
pub fn flat_index(rank: usize, component: usize, n: usize) -> usize {
    rank * n + component
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Alternating `k`-cochain with values in `K^n`, stored on increasing tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyCochain {
    dim: usize,
    degree: usize,
    tuples: Vec<Vec<usize>>,
    values: Vec<Vector>,
}

impl ChevalleyCochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        let tuples = increasing_tuples(dim, degree);
        let values = vec![zero_vector(dim); tuples.len()];
        ChevalleyCochain { dim, degree, tuples, values }
    }

    /// Builds a cochain from its values on increasing basis tuples.
    pub fn from_fn(dim: usize, degree: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let tuples = increasing_tuples(dim, degree);
        let values = tuples
            .iter()
            .map(|t| {
                let v = f(t);
                assert_eq!(v.len(), dim);
                v
            })
            .collect();
        ChevalleyCochain { dim, degree, tuples, values }
    }

    /// Inverse of [`ChevalleyCochain::to_flat`].
    pub fn from_flat(dim: usize, degree: usize, flat: &[Scalar]) -> Result<Self> {
        let tuples = increasing_tuples(dim, degree);
        check_len(tuples.len() * dim, flat.len())?;
        let values = flat.chunks(dim.max(1)).map(|c| c.to_vec()).collect();
        Ok(ChevalleyCochain { dim, degree, tuples, values })
    }

    /// Sparse constructor from 0-based `(tuple, component, coefficient)`
    /// entries; tuples are sorted with sign.
    pub fn from_entries(dim: usize, degree: usize, entries: &[(Vec<usize>, usize, Scalar)]) -> Result<Self> {
        let mut c = Self::zero(dim, degree);
        let index: HashMap<Vec<usize>, usize> = c.tuples.iter().enumerate().map(|(r, t)| (t.clone(), r)).collect();
        for (t, s, x) in entries {
            check_len(degree, t.len())?;
            if *s >= dim || t.iter().any(|&i| i >= dim) {
                return Err(Error::InvalidParameter(format!("cochain index out of range 1..{dim}")));
            }
            let mut t = t.clone();
            let Some(sign) = sort_with_sign(&mut t) else {
                return Err(Error::InvalidParameter("repeated index in an alternating cochain".into()));
            };
            let x = if sign < 0 { -x } else { x.clone() };
            c.values[index[&t]][*s] += &x;
        }
        Ok(c)
    }

    /// The product of an algebra seen as a 2-cochain.
    pub fn from_algebra(alg: &crate::Algebra) -> Self {
        Self::from_fn(alg.dim(), 2, |t| alg.mul_basis(t[0], t[1]))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn values(&self) -> &[Vector] {
        &self.values
    }

    /// Coordinates `rank·n + component` over increasing tuples in lex order.
    pub fn to_flat(&self) -> Vector {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vector(v))
    }

    /// Value on an arbitrary basis tuple, with the alternating sign applied.
    pub fn eval_basis(&self, t: &[usize]) -> Vector {
        assert_eq!(t.len(), self.degree);
        let mut s = t.to_vec();
        let Some(sign) = sort_with_sign(&mut s) else {
            return zero_vector(self.dim);
        };
        let r = self.tuples.binary_search(&s).expect("sorted tuple is stored");
        if sign < 0 {
            self.values[r].iter().map(|x| -x).collect()
        } else {
            self.values[r].clone()
        }
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.degree);
        let mut out = zero_vector(self.dim);
        for t in all_tuples(self.dim, self.degree) {
            let mut coeff = Scalar::from_int(1);
            for (a, &i) in args.iter().zip(&t) {
                if a[i].is_zero() {
                    coeff = Scalar::zero();
                    break;
                }
                coeff = &coeff * &a[i];
            }
            if !coeff.is_zero() {
                add_scaled(&mut out, &coeff, &self.eval_basis(&t));
            }
        }
        out
    }

    pub fn to_bilinear(&self) -> Bilinear {
        assert_eq!(self.degree, 2);
        Bilinear::from_fn(self.dim, |i, j| self.eval_basis(&[i, j]))
    }
}

/// Symmetric bilinear map `K^n × K^n → K^n`, stored on pairs `i ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricCochain {
    dim: usize,
    values: Vec<Vector>,
}

impl SymmetricCochain {
    pub fn zero(dim: usize) -> Self {
        SymmetricCochain { dim, values: vec![zero_vector(dim); dim * (dim + 1) / 2] }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let values = symmetric_pairs(dim).into_iter().map(|(i, j)| f(i, j)).collect();
        SymmetricCochain { dim, values }
    }

    pub fn from_flat(dim: usize, flat: &[Scalar]) -> Result<Self> {
        check_len(dim * dim * (dim + 1) / 2, flat.len())?;
        Ok(SymmetricCochain { dim, values: flat.chunks(dim).map(|c| c.to_vec()).collect() })
    }

    /// The product of a commutative algebra as a symmetric cochain.
    pub fn from_algebra(alg: &crate::Algebra) -> Self {
        assert_eq!(alg.kind(), crate::Kind::AssocComm);
        Self::from_fn(alg.dim(), |i, j| alg.mul_basis(i, j))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_flat(&self) -> Vector {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vector(v))
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Vector {
        &self.values[self.rank(i, j)]
    }

    fn rank(&self, i: usize, j: usize) -> usize {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let before: usize = (0..a).map(|x| self.dim - x).sum();
        before + (b - a)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        assert_eq!(v.len(), self.dim);
        let r = self.rank(i, j);
        self.values[r] = v;
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                add_scaled(&mut out, &(&x[i] * &y[j]), self.eval_basis(i, j));
            }
        }
        out
    }

    pub fn to_bilinear(&self) -> Bilinear {
        Bilinear::from_fn(self.dim, |i, j| self.eval_basis(i, j).clone())
    }
}

/// General bilinear map `K^n × K^n → K^n` as a dense table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bilinear {
    dim: usize,
    table: Vec<Vector>,
}

impl Bilinear {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let table = (0..dim).flat_map(|i| (0..dim).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        Bilinear { dim, table }
    }

    pub fn zero(dim: usize) -> Self {
        Bilinear { dim, table: vec![zero_vector(dim); dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn eval_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim + j]
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if !y[j].is_zero() {
                    add_scaled(&mut out, &(&x[i] * &y[j]), self.eval_basis(i, j));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|v| is_zero_vector(v))
    }
}

/// Hochschild `k`-cochain with values in `K^n`, stored on all ordered tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HochschildCochain {
    dim: usize,
    degree: usize,
    values: Vec<Vector>,
}

impl HochschildCochain {
    pub fn from_fn(dim: usize, degree: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let values = all_tuples(dim, degree).iter().map(|t| f(t)).collect();
        HochschildCochain { dim, degree, values }
    }

    pub fn from_flat(dim: usize, degree: usize, flat: &[Scalar]) -> Result<Self> {
        check_len(dim.pow(degree as u32) * dim, flat.len())?;
        Ok(HochschildCochain { dim, degree, values: flat.chunks(dim).map(|c| c.to_vec()).collect() })
    }

    pub fn from_symmetric(s: &SymmetricCochain) -> Self {
        Self::from_fn(s.dim(), 2, |t| s.eval_basis(t[0], t[1]).clone())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn to_flat(&self) -> Vector {
        self.values.iter().flatten().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| is_zero_vector(v))
    }

    pub fn eval_basis(&self, t: &[usize]) -> &Vector {
        assert_eq!(t.len(), self.degree);
        let r = t.iter().fold(0, |acc, &i| acc * self.dim + i);
        &self.values[r]
    }

    /// Multilinear evaluation; only the first argument may be a general vector
    /// (the rest are basis indices), which is all the coboundaries need.
    pub fn eval_first(&self, x: &[Scalar], rest: &[usize]) -> Vector {
        let mut out = zero_vector(self.dim);
        let mut t = Vec::with_capacity(self.degree);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            t.clear();
            t.push(i);
            t.extend_from_slice(rest);
            add_scaled(&mut out, c, self.eval_basis(&t));
        }
        out
    }

    /// Evaluation with a general vector at position `pos` and basis indices
    /// elsewhere (`rest` lists the other positions in order).
    pub fn eval_at(&self, pos: usize, x: &[Scalar], rest: &[usize]) -> Vector {
        let mut out = zero_vector(self.dim);
        let mut t = Vec::with_capacity(self.degree);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            t.clear();
            t.extend_from_slice(&rest[..pos]);
            t.push(i);
            t.extend_from_slice(&rest[pos..]);
            add_scaled(&mut out, c, self.eval_basis(&t));
        }
        out
    }
}
