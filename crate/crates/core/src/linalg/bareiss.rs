//! Fraction-free row reduction.
//!
//! Rows are scaled to integral entries (over Z, or Z[i] when any entry has an
//! imaginary part), eliminated with Bareiss' exact-division recurrence, and
//! only the final pivot rows are brought back to the rationals for reduced
//! echelon normalization.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Integral domain with exact division, the ring Bareiss runs in.
trait Domain: Clone {
    fn zero() -> Self;
    fn is_nil(&self) -> bool;
    fn mul(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    /// `self / d`, where the quotient is known to exist in the ring.
    fn exact_div(&self, d: &Self) -> Self;
    fn to_scalar(&self) -> Scalar;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn exact_div(&self, d: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % d)));
        self / d
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::from_ratio(BigRational::from_integer(self.clone()))
    }
}

/// Gaussian integer `re + im i`.
#[derive(Clone, Debug, PartialEq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl Domain for GaussInt {
    fn zero() -> Self {
        GaussInt { re: Zero::zero(), im: Zero::zero() }
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn mul(&self, o: &Self) -> Self {
        GaussInt { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn sub(&self, o: &Self) -> Self {
        GaussInt { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    fn exact_div(&self, d: &Self) -> Self {
        let n = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        debug_assert!(Zero::is_zero(&(&re % &n)) && Zero::is_zero(&(&im % &n)));
        GaussInt { re: re / &n, im: im / n }
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::new(BigRational::from_integer(self.re.clone()), BigRational::from_integer(self.im.clone()))
    }
}

/// Reduced row echelon form: `rows[k]` has a leading 1 in column `pivots[k]`
/// and zeros in every other pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn scale_row(row: &[Scalar]) -> Vec<(BigInt, BigInt)> {
    let lcm =
        row.iter().filter(|x| !num_traits::Zero::is_zero(*x)).fold(BigInt::one(), |acc, x| acc.lcm(&x.denom_lcm()));
    row.iter()
        .map(|x| {
            let re = x.re() * BigRational::from_integer(lcm.clone());
            let im = x.im() * BigRational::from_integer(lcm.clone());
            (re.to_integer(), im.to_integer())
        })
        .collect()
}

fn bareiss<D: Domain>(mut m: Vec<Vec<D>>, cols: usize) -> (Vec<Vec<D>>, Vec<usize>) {
    let nrows = m.len();
    let mut prev: Option<D> = None;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_nil()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = pv.mul(&row[j]).sub(&lead.mul(&pivot_row[j]));
                row[j] = match &prev {
                    Some(d) => v.exact_div(d),
                    None => v,
                };
            }
            row[c] = D::zero();
        }
        prev = Some(pv);
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Reduced row echelon form of the matrix given by `rows` (each of length `cols`).
pub fn echelon(rows: &[Vec<Scalar>], cols: usize) -> Echelon {
    let scaled: Vec<Vec<(BigInt, BigInt)>> =
        rows.iter().filter(|r| r.iter().any(|x| !num_traits::Zero::is_zero(x))).map(|r| scale_row(r)).collect();
    let gaussian = scaled.iter().flatten().any(|(_, im)| !Zero::is_zero(im));
    let (int_rows, pivots): (Vec<Vec<Scalar>>, Vec<usize>) = if gaussian {
        let m = scaled.into_iter().map(|r| r.into_iter().map(|(re, im)| GaussInt { re, im }).collect()).collect();
        let (m, p) = bareiss::<GaussInt>(m, cols);
        (m.iter().map(|r| r.iter().map(Domain::to_scalar).collect()).collect(), p)
    } else {
        let m = scaled.into_iter().map(|r| r.into_iter().map(|(re, _)| re).collect()).collect();
        let (m, p) = bareiss::<BigInt>(m, cols);
        (m.iter().map(|r| r.iter().map(Domain::to_scalar).collect()).collect(), p)
    };
    let mut out = int_rows;
    // normalize pivots to 1, then clear above, bottom-up
    for k in (0..out.len()).rev() {
        let pc = pivots[k];
        let inv = out[k][pc].inv().expect("pivot is nonzero");
        for x in out[k].iter_mut().skip(pc) {
            *x = &*x * &inv;
        }
        let (upper, lower) = out.split_at_mut(k);
        let prow = &lower[0];
        for row in upper.iter_mut() {
            let f = row[pc].clone();
            if num_traits::Zero::is_zero(&f) {
                continue;
            }
            for j in pc..cols {
                if !num_traits::Zero::is_zero(&prow[j]) {
                    let t = &f * &prow[j];
                    row[j] -= &t;
                }
            }
        }
    }
    Echelon { cols, rows: out, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_rref() {
        let e = echelon(&ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]), 3);
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], vec![Scalar::from_int(1), Scalar::zero(), Scalar::from_int(1)]);
        assert_eq!(e.rows[1], vec![Scalar::zero(), Scalar::from_int(1), Scalar::from_int(1)]);
    }

    #[test]
    fn skipped_columns_keep_exact_division() {
        // column 1 is dependent on column 0, forcing a skipped pivot column
        let e = echelon(&ints(&[&[2, 4, 1, 3], &[1, 2, 5, 7], &[3, 6, 2, 9]]), 4);
        assert_eq!(e.rank(), 3);
        assert_eq!(e.pivots, vec![0, 2, 3]);
    }

    #[test]
    fn gaussian_rows() {
        let i = Scalar::i();
        let one = Scalar::from_int(1);
        let rows = vec![vec![one.clone(), i.clone()], vec![i.clone(), -one.clone()]];
        let e = echelon(&rows, 2);
        assert_eq!(e.rank(), 1);
        assert_eq!(e.rows[0], vec![one, i]);
    }

    #[test]
    fn fractions_are_cleared() {
        let rows = vec![vec![Scalar::frac(1, 2), Scalar::frac(1, 3)], vec![Scalar::frac(1, 4), Scalar::frac(1, 5)]];
        assert_eq!(echelon(&rows, 2).rank(), 2);
    }
}
