use num_traits::One;

use currentalg::catalog;
use currentalg::current::{current_algebra, jacobi_pq_residuals};
use currentalg::io::parse_algebra;
use currentalg::linalg::{unit_vector, Subspace};
use currentalg::rigidity::{rigid_in_lpq, rigidity_certificate, Verdict};
use currentalg::structure::{find_unit, orthogonal_decomposition, pierce};
use currentalg::{Algebra, Field, Kind, Scalar};

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn entries(list: &[(usize, usize, usize, i64)]) -> Vec<(usize, usize, usize, Scalar)> {
    list.iter().map(|&(i, j, k, c)| (i, j, k, int(c))).collect()
}

#[test]
fn r2_bracket() {
    let r2 = catalog::r2();
    assert_eq!(r2.multiply(&unit_vector(2, 0), &unit_vector(2, 1)).unwrap(), unit_vector(2, 1));
    let text = r#"{"name": "r2", "kind": "lie", "field": "Q", "dim": 2, "constants": [[1, 2, 2, "1"]]}"#;
    assert_eq!(parse_algebra(text).unwrap(), r2);
}

#[test]
fn m1_tables() {
    let text = r#"{"name": "m1(2)", "kind": "assoc-comm", "field": "Q", "dim": 2,
        "constants": [[1, 1, 1, "1"], [2, 2, 2, "1"]]}"#;
    let m12 = parse_algebra(text).unwrap();
    assert_eq!(m12, catalog::m1(2).unwrap());
    assert_eq!(catalog::m1(1).unwrap().direct_sum(&catalog::m1(1).unwrap()).unwrap(), m12);
    let e1_plus_e2 = vec![int(1), int(1)];
    assert_eq!(m12.multiply(&e1_plus_e2, &unit_vector(2, 0)).unwrap(), unit_vector(2, 0));
    for q in 1..=4 {
        assert!(catalog::m1(q).unwrap().check_identities().pass);
    }
}

#[test]
fn direct_sum_of_r2() {
    let s = catalog::r2().direct_sum(&catalog::r2()).unwrap();
    let expected = Algebra::new("s", Kind::Lie, Field::Q, 4, &entries(&[(1, 2, 2, 1), (3, 4, 4, 1)])).unwrap();
    assert_eq!(s, expected);
}

#[test]
fn current_algebras_of_r2() {
    let r2 = catalog::r2();
    assert_eq!(current_algebra(&r2, &catalog::m1(1).unwrap()).unwrap(), r2);
    let m12 = catalog::m1(2).unwrap();
    assert!(jacobi_pq_residuals(&r2, &m12).unwrap().is_empty());
    let l = current_algebra(&r2, &m12).unwrap();
    assert_eq!(l.permute(&[0, 2, 1, 3]).unwrap(), r2.direct_sum(&r2).unwrap());
    assert_eq!(rigidity_certificate(&l).unwrap().verdict, Verdict::RigidByH2Zero);
    assert_eq!(rigid_in_lpq(&r2, &m12).unwrap().verdict, Verdict::RigidByH2Zero);
}

#[test]
fn idempotents_of_m1() {
    for q in 1..=4 {
        let unit = find_unit(&catalog::m1(q).unwrap()).unwrap().unwrap();
        assert_eq!(unit, vec![Scalar::one(); q]);
    }
    let m12 = catalog::m1(2).unwrap();
    let s = pierce(&m12, &unit_vector(2, 0)).unwrap();
    assert_eq!(s.a11, Subspace::span(2, &[unit_vector(2, 0)]));
    assert_eq!(s.a00, Subspace::span(2, &[unit_vector(2, 1)]));

    let d = orthogonal_decomposition(&catalog::m1(3).unwrap()).unwrap();
    assert_eq!(d.components.iter().map(Subspace::dim).collect::<Vec<_>>(), [1, 1, 1]);
    let mut ids = d.idempotents.clone();
    ids.sort_by_key(|e| e.iter().position(|x| x.is_one()));
    assert_eq!(ids, (0..3).map(|k| unit_vector(3, k)).collect::<Vec<_>>());
}

#[test]
fn real_rigid_and_torus_tables() {
    let a = catalog::real_rigid(2, 1).unwrap();
    assert_eq!(a.entries(), entries(&[(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 1, -1)]));
    let b = catalog::real_rigid(3, 1).unwrap();
    assert_eq!(b.entries(), entries(&[(1, 1, 1, 1), (1, 2, 2, 1), (2, 2, 1, -1), (3, 3, 3, 1)]));

    // [Y1,X1] = -X2, [Y1,X2] = X1, [Y2,X1] = X1, [Y2,X2] = X2
    let t = catalog::t_oplus_a(2, 1).unwrap();
    assert_eq!(t.entries(), entries(&[(1, 3, 4, -1), (1, 4, 3, 1), (2, 3, 3, 1), (2, 4, 4, 1)]));
    assert!(t.check_identities().pass);
}
