mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;

use currentalg::catalog::{self, TorusVariant};
use currentalg::cohomology::chevalley::coboundary_matrix;
use currentalg::cohomology::hochschild::{hochschild_delta1_matrix, hochschild_delta2_matrix};
use currentalg::cohomology::{
    bullet, chevalley_delta, chevalley_dims, delta_on_decomposable, derivation_space, harrison_h2, hochschild_delta1,
    hochschild_delta2, ChevalleyCochain,
};
use currentalg::current::current_algebra;
use currentalg::io::{emit_algebra, parse_algebra};
use currentalg::linalg::{Matrix, Vector};
use currentalg::rigidity::{
    infinitesimal_check, rigidity_certificate, truncated_deformation_check, TruncatedDeformation,
};
use currentalg::structure::{find_idempotents, find_unit, pierce};
use currentalg::{Algebra, Field, Kind, Scalar};

fn lie_catalog() -> Vec<Algebra> {
    ["r2", "abelian(2)", "abelian(3)", "heisenberg(3)", "sl2", "t-oplus-a(2,1)", "t-oplus-a(2,0)"]
        .iter()
        .map(|s| catalog::make_from_spec(s).unwrap())
        .collect()
}

fn comm_catalog() -> Vec<Algebra> {
    ["m1(1)", "m1(2)", "m1(3)", "null(2)", "poly(3)", "real-rigid(2,1)", "real-rigid(3,1)"]
        .iter()
        .map(|s| catalog::make_from_spec(s).unwrap())
        .collect()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::frac(n, d))
}

fn gaussian() -> impl Strategy<Value = Scalar> {
    (scalar(), scalar()).prop_map(|(a, b)| &a + &(&b * &Scalar::i()))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), n)
}

/// `L·U` with unit diagonals, hence invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (vector(n * n), vector(n * n)).prop_map(move |(l, u)| {
        let mut lo = Matrix::identity(n);
        let mut up = Matrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                if r > c {
                    lo[(r, c)] = l[r * n + c].clone();
                } else if r < c {
                    up[(r, c)] = u[r * n + c].clone();
                }
            }
        }
        lo.mul(&up)
    })
}

fn random_table(kind: Kind, field: Field) -> impl Strategy<Value = Algebra> {
    (1usize..=4).prop_flat_map(move |n| {
        let keys: Vec<(usize, usize, usize)> = (1..=n)
            .flat_map(|i| (i..=n).flat_map(move |j| (1..=n).map(move |k| (i, j, k))))
            .filter(|&(i, j, _)| kind.is_stored_pair(i - 1, j - 1))
            .collect();
        let coeff = match field {
            Field::Q => scalar().boxed(),
            Field::Qi => gaussian().boxed(),
        };
        proptest::collection::vec(proptest::option::weighted(0.4, coeff), keys.len()).prop_map(move |cs| {
            let entries: Vec<_> = keys.iter().zip(cs).filter_map(|(&(i, j, k), c)| c.map(|c| (i, j, k, c))).collect();
            Algebra::new("random", kind, field, n, &entries).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn chevalley_delta_squares_to_zero(idx in 0usize..7, degree in 0usize..2, seed in vector(27)) {
        let g = &lie_catalog()[idx];
        let n = g.dim();
        let len = if degree == 0 { n } else { n * n };
        let flat: Vec<Scalar> = seed.iter().cycle().take(len).cloned().collect();
        let c = ChevalleyCochain::from_flat(n, degree, &flat).unwrap();
        prop_assert!(chevalley_delta(g, &chevalley_delta(g, &c).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn coboundary_matrices_compose_to_zero(idx in 0usize..7) {
        let g = &lie_catalog()[idx];
        prop_assert!(coboundary_matrix(g, 1).unwrap().mul(&coboundary_matrix(g, 0).unwrap()).is_zero());
        prop_assert!(coboundary_matrix(g, 2).unwrap().mul(&coboundary_matrix(g, 1).unwrap()).is_zero());
    }

    #[test]
    fn hochschild_delta_squares_to_zero(idx in 0usize..7, seed in vector(9)) {
        let a = &comm_catalog()[idx];
        let n = a.dim();
        let flat: Vec<Scalar> = seed.iter().cycle().take(n * n).cloned().collect();
        let f = Matrix::unvectorize(n, &flat);
        prop_assert!(hochschild_delta2(a, &hochschild_delta1(a, &f)).unwrap().is_zero());
        prop_assert!(hochschild_delta2_matrix(a).mul(&hochschild_delta1_matrix(a)).is_zero());
    }

    #[test]
    fn infinitesimal_check_matches_order_one(idx in 0usize..7, seed in vector(36), sparse in proptest::bool::ANY) {
        let g = &lie_catalog()[idx];
        let n = g.dim();
        let len = n * n * (n - 1) / 2;
        let flat: Vec<Scalar> = seed
            .iter()
            .cycle()
            .take(len)
            .enumerate()
            .map(|(k, x)| if sparse && k % 3 != 0 { Scalar::zero() } else { x.clone() })
            .collect();
        let phi = ChevalleyCochain::from_flat(n, 2, &flat).unwrap();
        let inf = infinitesimal_check(g, &phi).unwrap();
        let rep = truncated_deformation_check(&TruncatedDeformation::new(g.clone(), vec![phi], 1).unwrap());
        prop_assert_eq!(inf, rep.ok_up_to == Some(1));
        prop_assert_eq!(inf, rep.first_obstruction.is_none());
    }

    #[test]
    fn parse_emit_round_trip_q(a in random_table(Kind::Lie, Field::Q)) {
        let text = emit_algebra(&a);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(emit_algebra(&back), text);
    }

    #[test]
    fn parse_emit_round_trip_qi(a in random_table(Kind::AssocComm, Field::Qi)) {
        let text = emit_algebra(&a);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(emit_algebra(&back), text);
    }

    #[test]
    fn change_basis_composes(a in random_table(Kind::Lie, Field::Q), seed in vector(32)) {
        let n = a.dim();
        let f = Matrix::unvectorize(n, &seed[..n * n]);
        let g = Matrix::unvectorize(n, &seed[16..16 + n * n]);
        prop_assume!(f.is_invertible() && g.is_invertible());
        let lhs = a.change_basis(&f).unwrap().change_basis(&g).unwrap();
        prop_assert_eq!(lhs, a.change_basis(&f.mul(&g)).unwrap());
        prop_assert_eq!(a.change_basis(&f).unwrap().check_identities().pass, a.check_identities().pass);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn invariants_survive_basis_change(idx in 0usize..7, f in invertible(6)) {
        let g = &lie_catalog()[idx];
        let n = g.dim();
        let f = Matrix::from_rows((0..n).map(|r| f.row(r)[..n].to_vec()).collect());
        prop_assume!(f.is_invertible());
        let h = g.change_basis(&f).unwrap();
        prop_assert!(h.check_identities().pass);
        let (c1, c2) = (rigidity_certificate(g).unwrap(), rigidity_certificate(&h).unwrap());
        prop_assert_eq!(c1, c2);
        prop_assert_eq!(chevalley_dims(g, 1).unwrap(), chevalley_dims(&h, 1).unwrap());
        prop_assert_eq!(catalog::fingerprint(g).unwrap(), catalog::fingerprint(&h).unwrap());
    }

    #[test]
    fn commutative_invariants_survive_basis_change(idx in 0usize..7, f in invertible(3)) {
        let a = &comm_catalog()[idx];
        let n = a.dim();
        let f = Matrix::from_rows((0..n).map(|r| f.row(r)[..n].to_vec()).collect());
        prop_assume!(f.is_invertible());
        let b = a.change_basis(&f).unwrap();
        prop_assert!(b.check_identities().pass);
        prop_assert_eq!(harrison_h2(a).unwrap(), harrison_h2(&b).unwrap());
        prop_assert_eq!(derivation_space(a).dim(), derivation_space(&b).dim());
        prop_assert_eq!(find_idempotents(a).unwrap().len(), find_idempotents(&b).unwrap().len());
    }

    #[test]
    fn pierce_invariants_in_random_bases(idx in 0usize..7, f in invertible(3)) {
        let a = &comm_catalog()[idx];
        let n = a.dim();
        let f = Matrix::from_rows((0..n).map(|r| f.row(r)[..n].to_vec()).collect());
        prop_assume!(f.is_invertible());
        let b = a.change_basis(&f).unwrap();
        for e in find_idempotents(&b).unwrap() {
            prop_assert_eq!(b.mul(&e, &e), e.clone());
            let s = pierce(&b, &e).unwrap();
            prop_assert!(s.invariants_hold(&b));
            prop_assert_eq!(s.a11.dim() + s.a00.dim(), n);
        }
    }

    #[test]
    fn current_algebra_distributes_over_sums(gi in 0usize..4, ai in 0usize..7, bi in 0usize..7) {
        let g = &lie_catalog()[gi];
        let (a, b) = (&comm_catalog()[ai], &comm_catalog()[bi]);
        let (p, qa, qb) = (g.dim(), a.dim(), b.dim());
        let lhs = current_algebra(g, &a.direct_sum(b).unwrap()).unwrap();
        let rhs = current_algebra(g, a).unwrap().direct_sum(&current_algebra(g, b).unwrap()).unwrap();
        let q = qa + qb;
        // new position of X_i ⊗ e_a in the block layout
        let perm: Vec<usize> = (0..p)
            .flat_map(|i| (0..qa).map(move |x| i * q + x))
            .chain((0..p).flat_map(|i| (0..qb).map(move |x| i * q + qa + x)))
            .collect();
        prop_assert_eq!(lhs.permute(&perm).unwrap(), rhs);
    }

    #[test]
    fn tori_hold(n in 1usize..=6, k in 1usize..=4, rotation in proptest::bool::ANY) {
        prop_assume!(k <= n / 2 + 1);
        let variant = if rotation { TorusVariant::Rotation } else { TorusVariant::AsPrinted };
        let gens = catalog::torus_generators(n, k, variant).unwrap();
        prop_assert!(catalog::check_torus(n, &gens).holds(n));
    }

    #[test]
    fn scalar_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Scalar>().unwrap(), a);
    }
}

/// On vanishing decomposable cochains over Lie algebras with `C³ ≠ 0`,
/// `φ₂(1,1) ≠ 0` forces `ψ₁ ∈ Z²` and a nonzero `μ₁(φ₃(X,X),X)` forces
/// `μ₂•ψ₄ = 0`.
#[test]
fn decomposable_propositions_beyond_r2() {
    let a = catalog::m1(2).unwrap();
    let unit = find_unit(&a).unwrap().unwrap();
    for (spec, seed) in [("heisenberg(3)", 11), ("sl2", 12)] {
        let g = catalog::make_from_spec(spec).unwrap();
        let mut rng = common::rng(seed);
        let probes: Vec<_> = (0..g.dim()).map(|k| currentalg::linalg::unit_vector(g.dim(), k)).collect();
        let mut hits = 0;
        for n in 0..8 {
            let c = common::vanishing_instance(&mut rng, &g, &a, n % 2 == 0);
            assert!(delta_on_decomposable(&g, &a, &c).unwrap().is_identically_zero());
            if c.phi2.eval(&unit, &unit).iter().any(|x| !x.is_zero()) {
                hits += 1;
                assert!(chevalley_delta(&g, &c.psi1).unwrap().is_zero(), "{spec}, instance {n}");
            }
            if probes.iter().any(|x| g.mul(&c.phi3.eval(x, x), x).iter().any(|s| !s.is_zero())) {
                assert!(bullet(&a, &c.psi4).unwrap().is_zero(), "{spec}, instance {n}");
            }
        }
        assert!(hits >= 2, "{spec}: hypothesis met {hits} times");
    }
}
