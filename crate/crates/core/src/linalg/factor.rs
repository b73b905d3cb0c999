//! Factorization of univariate polynomials over Q and Q(i).
//!
//! Over Q: Kronecker's interpolation search on the primitive integer
//! associate. Over Q(i): Trager's norm method on top of the Q factorizer.
//! Both are exponential in the degree, which stays tiny here (minimal
//! polynomials of multiplication operators on desk-scale algebras).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::scalar::{Field, Scalar};

/// Distinct monic irreducible factors of `f` over `field`, sorted by degree.
pub fn irreducible_factors(f: &Poly, field: Field) -> Vec<Poly> {
    if f.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let g = f.squarefree_part();
    let mut out = match field {
        Field::Q => {
            assert!(g.is_real(), "polynomial over Q with imaginary coefficients");
            factor_rational(&g)
        }
        Field::Qi => factor_gaussian(&g),
    };
    out.sort_by_key(|p| (p.degree(), p.to_string()));
    out
}

fn factor_rational(g: &Poly) -> Vec<Poly> {
    if g.degree() == Some(1) {
        return vec![g.monic()];
    }
    let prim = primitive_integer(g);
    let mut stack = vec![prim];
    let mut done = Vec::new();
    while let Some(p) = stack.pop() {
        if p.degree() == Some(1) {
            done.push(p.monic());
            continue;
        }
        match find_factor(&p) {
            Some(h) => {
                let q = p.exact_div(&h).expect("found factor divides");
                stack.push(h);
                stack.push(q);
            }
            None => done.push(p.monic()),
        }
    }
    done
}

fn to_int(x: &Scalar) -> BigInt {
    debug_assert!(x.is_real() && x.re().is_integer());
    x.re().to_integer()
}

/// Integer polynomial with content 1 and positive lead, associate to `g`.
fn primitive_integer(g: &Poly) -> Poly {
    let lcm = g.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re().denom()));
    let scaled = g.scale(&Scalar::from_ratio(BigRational::from_integer(lcm)));
    let content = scaled.coeffs().iter().fold(BigInt::zero(), |acc, c| acc.gcd(&to_int(c)));
    let mut p = scaled.scale(&Scalar::from_ratio(BigRational::new(BigInt::one(), content)));
    if p.lead().re().is_negative() {
        p = p.scale(&Scalar::from_int(-1));
    }
    p
}

fn is_integral(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_real() && c.re().is_integer())
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Newton interpolation through `(xs[i], ys[i])`.
fn interpolate(xs: &[Scalar], ys: &[Scalar]) -> Poly {
    let n = xs.len();
    let mut coef: Vec<Scalar> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            coef[i] = &(&coef[i] - &coef[i - 1]) / &(&xs[i] - &xs[i - j]);
        }
    }
    let mut p = Poly::constant(coef[n - 1].clone());
    for i in (0..n - 1).rev() {
        p = p.mul(&Poly::linear_root(&xs[i])).add(&Poly::constant(coef[i].clone()));
    }
    p
}

/// A nontrivial integer factor of the primitive integer polynomial `p`, if any.
fn find_factor(p: &Poly) -> Option<Poly> {
    let deg = p.degree()?;
    // rank candidate evaluation points by |p(x)| to keep divisor lists short
    let mut points: Vec<(BigInt, Scalar)> = Vec::new();
    for x in -12i64..=12 {
        let xs = Scalar::from_int(x);
        let v = p.eval(&xs);
        if v.is_zero() {
            return Some(Poly::linear_root(&xs));
        }
        points.push((to_int(&v).abs(), xs));
    }
    points.sort_by(|a, b| a.0.cmp(&b.0));
    for k in 1..=deg / 2 {
        let chosen = &points[..=k];
        let xs: Vec<Scalar> = chosen.iter().map(|(_, x)| x.clone()).collect();
        let divs: Vec<Vec<BigInt>> = chosen
            .iter()
            .enumerate()
            .map(|(i, (v, _))| {
                let pos = divisors(v);
                if i == 0 {
                    pos
                } else {
                    pos.iter().flat_map(|d| [d.clone(), -d]).collect()
                }
            })
            .collect();
        let mut idx = vec![0usize; divs.len()];
        loop {
            let ys: Vec<Scalar> = idx
                .iter()
                .zip(&divs)
                .map(|(&i, d)| Scalar::from_ratio(BigRational::from_integer(d[i].clone())))
                .collect();
            let g = interpolate(&xs, &ys);
            if g.degree() == Some(k) && is_integral(&g) {
                if let Some(q) = p.exact_div(&g) {
                    if is_integral(&q) {
                        return Some(g);
                    }
                }
            }
            // odometer over divisor choices
            let mut pos = 0;
            loop {
                if pos == idx.len() {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < divs[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos == idx.len() {
                break;
            }
        }
    }
    None
}

fn factor_gaussian(g: &Poly) -> Vec<Poly> {
    if g.degree() == Some(1) {
        return vec![g.monic()];
    }
    for s in (0i64..).map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }) {
        let c = Scalar::gauss(0, s);
        let h = g.shift(&c);
        let norm = h.mul(&h.conj());
        if !norm.is_squarefree() {
            continue;
        }
        let back = -&c;
        let mut out: Vec<Poly> = factor_rational(&norm.monic())
            .iter()
            .map(|q| h.gcd(q))
            .filter(|r| r.degree().is_some_and(|d| d > 0))
            .map(|r| r.shift(&back).monic())
            .collect();
        out.dedup();
        return out;
    }
    unreachable!("some shift makes the norm squarefree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(fs: &[Poly]) -> Poly {
        fs.iter().fold(Poly::one(), |a, b| a.mul(b))
    }

    #[test]
    fn rational_factorizations() {
        let f = Poly::from_ints(&[1, 0, 1]).mul(&Poly::from_ints(&[-2, 0, 1]));
        let fs = irreducible_factors(&f, Field::Q);
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs), f);

        let g = Poly::from_ints(&[0, -1, 1]); // x^2 - x
        assert_eq!(irreducible_factors(&g, Field::Q), vec![Poly::from_ints(&[0, 1]), Poly::from_ints(&[-1, 1])]);

        // (2x - 1)(x^2 + x + 1)
        let h = Poly::from_ints(&[-1, 2]).mul(&Poly::from_ints(&[1, 1, 1]));
        let fs = irreducible_factors(&h, Field::Q);
        assert_eq!(fs[0], Poly::new(vec![Scalar::frac(-1, 2), Scalar::one()]));
        assert_eq!(fs[1], Poly::from_ints(&[1, 1, 1]));
    }

    #[test]
    fn quartic_into_quadratics() {
        // (x^2 + 1)(x^2 + 3), no rational roots
        let f = Poly::from_ints(&[3, 0, 4, 0, 1]);
        let fs = irreducible_factors(&f, Field::Q);
        assert_eq!(fs, vec![Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[3, 0, 1])]);
        assert_eq!(irreducible_factors(&Poly::from_ints(&[2, 0, 0, 0, 1]), Field::Q).len(), 1);
    }

    #[test]
    fn gaussian_factorizations() {
        let fs = irreducible_factors(&Poly::from_ints(&[1, 0, 1]), Field::Qi);
        assert_eq!(fs.len(), 2);
        assert!(fs.contains(&Poly::linear_root(&Scalar::i())));
        assert!(fs.contains(&Poly::linear_root(&-Scalar::i())));
        // x^2 - 2 stays irreducible over Q(i)
        assert_eq!(irreducible_factors(&Poly::from_ints(&[-2, 0, 1]), Field::Qi).len(), 1);
        // x(x^2 + 1/4): roots 0, ±i/2
        let f = Poly::x().mul(&Poly::new(vec![Scalar::frac(1, 4), Scalar::zero(), Scalar::one()]));
        assert_eq!(irreducible_factors(&f, Field::Qi).len(), 3);
    }

    #[test]
    fn repeated_factors_collapse() {
        let f = Poly::from_ints(&[0, 0, 1]).mul(&Poly::from_ints(&[-1, 1]).pow(3));
        assert_eq!(irreducible_factors(&f, Field::Q).len(), 2);
    }
}
