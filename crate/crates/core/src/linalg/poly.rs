use std::fmt;

use num_traits::{One, Zero};

use super::Matrix;
use crate::scalar::Scalar;

/// Dense univariate polynomial, coefficients from low to high degree, with
/// no trailing zeros (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::new(vec![Scalar::zero(), Scalar::one()])
    }

    /// `x - c`.
    pub fn linear_root(c: &Scalar) -> Self {
        Self::new(vec![-c, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }

    /// True for `x^k` (`k ≥ 0`).
    pub fn is_monomial(&self) -> bool {
        match self.coeffs.split_last() {
            Some((lead, rest)) => lead.is_one() && rest.iter().all(Zero::is_zero),
            None => false,
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lead().inv().expect("nonzero lead");
        self.scale(&inv)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, o: &Poly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn sub(&self, o: &Poly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }

    pub fn mul(&self, o: &Poly) -> Self {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics when dividing by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("polynomial division by zero");
        let inv = d.lead().inv().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![Scalar::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            let c = &rem[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k - dd + j] -= &t;
            }
            quot[k - dd] = c;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact quotient, if `d` divides `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, a)| a * &Scalar::from_int(k as i64)).collect())
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, a| &acc * x + a)
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.nrows();
        self.coeffs.iter().rev().fold(Matrix::zeros(n, n), |acc, a| acc.mul(m).add(&Matrix::identity(n).scale(a)))
    }

    /// `self(x + c)`.
    pub fn shift(&self, c: &Scalar) -> Poly {
        let lin = Poly::new(vec![c.clone(), Scalar::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, a| acc.mul(&lin).add(&Poly::constant(a.clone())))
    }

    pub fn conj(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(Scalar::conj).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let txt = a.to_string();
            let (neg, body) = match txt.strip_prefix('-') {
                Some(rest) if a.is_real() => (true, rest.to_string()),
                _ => (false, txt),
            };
            let body = if a.is_real() { body } else { format!("({body})") };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = body == "1";
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                    }
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_ints(&[-1, 0, 1]); // x^2 - 1
        let b = Poly::from_ints(&[1, 1]); // x + 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.gcd(&Poly::from_ints(&[-1, 1])), Poly::from_ints(&[-1, 1]));
        assert_eq!(a.gcd(&Poly::from_ints(&[1, 0, 1])), Poly::one());
    }

    #[test]
    fn squarefree_and_shift() {
        let p = Poly::from_ints(&[0, 0, 1]).mul(&Poly::from_ints(&[-1, 1]));
        assert_eq!(p.squarefree_part(), Poly::from_ints(&[0, -1, 1]));
        assert!(!p.is_squarefree());
        let s = Poly::from_ints(&[0, 0, 1]).shift(&Scalar::from_int(1));
        assert_eq!(s, Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[0, -1, 1]).to_string(), "x^2 - x");
        assert_eq!(Poly::from_ints(&[1, 0, 1]).to_string(), "x^2 + 1");
        assert_eq!(Poly::from_ints(&[0, 0, 1]).to_string(), "x^2");
        assert_eq!(Poly::from_ints(&[-2, 3]).to_string(), "3x - 2");
    }

    #[test]
    fn matrix_evaluation() {
        let m = Matrix::from_int_rows(&[&[0, 1], &[-1, 0]]);
        assert!(Poly::from_ints(&[1, 0, 1]).eval_matrix(&m).is_zero());
    }
}
