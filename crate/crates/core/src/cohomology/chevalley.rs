use serde::{Deserialize, Serialize};

use super::cochain::{flat_index, increasing_tuples, sort_with_sign, ChevalleyCochain};
use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, unit_vector, zero_vector, Matrix, Subspace};
use crate::scalar::Scalar;

/// Dimensions of cocycles, coboundaries and cohomology in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
}

impl CohomologyDims {
    pub fn new(dim_z: usize, dim_b: usize) -> Self {
        assert!(dim_b <= dim_z, "coboundaries exceed cocycles");
        CohomologyDims { dim_z, dim_b, dim_h: dim_z - dim_b }
    }
}

fn sign(k: usize) -> Scalar {
    Scalar::from_int(if k % 2 == 0 { 1 } else { -1 })
}

/// Matrix of `δ : C^k → C^{k+1}` in the flat cochain coordinates
/// (increasing tuples in lex order, then output component).
///
/// `δφ(x_0,…,x_k) = Σ_i (−1)^i [x_i, φ(…x̂_i…)] + Σ_{i<j} (−1)^{i+j} φ([x_i,x_j], …x̂_i…x̂_j…)`.
pub fn coboundary_matrix(g: &Algebra, k: usize) -> Result<Matrix> {
    g.require_kind(Kind::Lie)?;
    if k > 2 {
        return Err(Error::UnsupportedDegree(k));
    }
    let n = g.dim();
    let src = increasing_tuples(n, k);
    let dst = increasing_tuples(n, k + 1);
    let rank_of = |t: &[usize]| src.binary_search_by(|s| s.as_slice().cmp(t)).expect("tuple is stored");
    let mut m = Matrix::zeros(dst.len() * n, src.len() * n);
    for (row_t, t) in dst.iter().enumerate() {
        // [x_{t_i}, φ(T \ t_i)]
        for i in 0..=k {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &x)| x).collect();
            let col_t = rank_of(&rest);
            for r in 0..n {
                let br = g.mul_basis(t[i], r);
                for (s, c) in br.iter().enumerate() {
                    if !num_traits::Zero::is_zero(c) {
                        m[(flat_index(row_t, s, n), flat_index(col_t, r, n))] += &(&sign(i) * c);
                    }
                }
            }
        }
        // φ([x_{t_i}, x_{t_j}], rest)
        for i in 0..=k {
            for j in i + 1..=k {
                let br = g.mul_basis(t[i], t[j]);
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(a, _)| a != i && a != j).map(|(_, &x)| x).collect();
                for (mm, c) in br.iter().enumerate() {
                    if num_traits::Zero::is_zero(c) {
                        continue;
                    }
                    let mut s_t = vec![mm];
                    s_t.extend_from_slice(&rest);
                    let Some(sg) = sort_with_sign(&mut s_t) else {
                        continue;
                    };
                    let col_t = rank_of(&s_t);
                    let coeff = &(&sign(i + j) * c) * &Scalar::from_int(sg);
                    for s in 0..n {
                        m[(flat_index(row_t, s, n), flat_index(col_t, s, n))] += &coeff;
                    }
                }
            }
        }
    }
    Ok(m)
}

/// `δc` evaluated directly from the defining formula.
pub fn chevalley_delta(g: &Algebra, c: &ChevalleyCochain) -> Result<ChevalleyCochain> {
    g.require_kind(Kind::Lie)?;
    let k = c.degree();
    if k > 2 {
        return Err(Error::UnsupportedDegree(k));
    }
    if c.dim() != g.dim() {
        return Err(Error::DimensionMismatch { expected: g.dim(), found: c.dim() });
    }
    if !c.values().iter().flatten().all(|x| g.field().contains(x)) {
        return Err(Error::FieldMismatch { left: g.field(), right: crate::Field::Qi });
    }
    let n = g.dim();
    Ok(ChevalleyCochain::from_fn(n, k + 1, |t| {
        let mut out = zero_vector(n);
        for i in 0..=k {
            let rest: Vec<usize> = t.iter().enumerate().filter(|&(a, _)| a != i).map(|(_, &x)| x).collect();
            let v = g.mul(&unit_vector(n, t[i]), &c.eval_basis(&rest));
            add_scaled(&mut out, &sign(i), &v);
        }
        for i in 0..=k {
            for j in i + 1..=k {
                let br = g.mul_basis(t[i], t[j]);
                let rest: Vec<usize> =
                    t.iter().enumerate().filter(|&(a, _)| a != i && a != j).map(|(_, &x)| x).collect();
                let mut args: Vec<Vec<Scalar>> = vec![br];
                args.extend(rest.iter().map(|&x| unit_vector(n, x)));
                let refs: Vec<&[Scalar]> = args.iter().map(|a| a.as_slice()).collect();
                add_scaled(&mut out, &sign(i + j), &c.eval(&refs));
            }
        }
        out
    }))
}

/// Cocycle space `Z^k` in flat coordinates.
pub fn cocycles(g: &Algebra, k: usize) -> Result<Subspace> {
    Ok(coboundary_matrix(g, k)?.kernel())
}

/// Coboundary space `B^k` in flat coordinates.
pub fn coboundaries(g: &Algebra, k: usize) -> Result<Subspace> {
    let n = g.dim();
    if k == 0 {
        return Ok(Subspace::zero(n));
    }
    let m = coboundary_matrix(g, k - 1)?;
    Ok(Subspace::span(m.nrows(), &m.columns()))
}

/// Dimensions of `Z^k`, `B^k` and `H^k(g, g)` for `k ∈ {0, 1, 2}`.
pub fn chevalley_dims(g: &Algebra, k: usize) -> Result<CohomologyDims> {
    g.require_kind(Kind::Lie)?;
    if k > 2 {
        return Err(Error::UnsupportedDegree(k));
    }
    let dk = coboundary_matrix(g, k)?;
    let z = dk.ncols() - dk.rank();
    let b = if k == 0 { 0 } else { coboundary_matrix(g, k - 1)?.rank() };
    Ok(CohomologyDims::new(z, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Field;
    use num_traits::{One, Zero};

    fn r2() -> Algebra {
        Algebra::new("r2", Kind::Lie, Field::Q, 2, &[(1, 2, 2, Scalar::one())]).unwrap()
    }

    #[test]
    fn r2_dims() {
        assert_eq!(chevalley_dims(&r2(), 2).unwrap(), CohomologyDims { dim_z: 2, dim_b: 2, dim_h: 0 });
        assert_eq!(chevalley_dims(&r2(), 1).unwrap().dim_h, 0);
        assert_eq!(chevalley_dims(&r2(), 0).unwrap().dim_z, 0);
        assert!(matches!(chevalley_dims(&r2(), 3), Err(Error::UnsupportedDegree(3))));
    }

    #[test]
    fn abelian_dims() {
        let a = Algebra::zero_product("abelian(2)", Kind::Lie, Field::Q, 2);
        assert_eq!(chevalley_dims(&a, 2).unwrap(), CohomologyDims { dim_z: 2, dim_b: 0, dim_h: 2 });
    }

    #[test]
    fn matrix_matches_direct_delta() {
        let g = r2();
        for k in 0..=2 {
            let m = coboundary_matrix(&g, k).unwrap();
            for col in 0..m.ncols() {
                let c = ChevalleyCochain::from_flat(2, k, &unit_vector(m.ncols(), col)).unwrap();
                assert_eq!(chevalley_delta(&g, &c).unwrap().to_flat(), m.column(col));
            }
        }
    }

    #[test]
    fn non_derivation_detected() {
        // f(X1) = 0, f(X2) = X1
        let f = ChevalleyCochain::from_entries(2, 1, &[(vec![1], 0, Scalar::one())]).unwrap();
        let d = chevalley_delta(&r2(), &f).unwrap();
        assert_eq!(d.eval_basis(&[0, 1]), vec![Scalar::from_int(-1), Scalar::zero()]);
    }
}
