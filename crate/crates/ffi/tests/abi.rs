use std::ffi::{CStr, CString};
use std::ptr;

use currentalg_ffi::*;

fn catalog(spec: &str) -> *mut CaAlgebra {
    let s = CString::new(spec).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { ca_algebra_from_catalog(s.as_ptr(), &mut out) }, CaStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let p = ca_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string()
}

#[test]
fn current_algebra_of_r2_is_rigid() {
    let (g, a) = (catalog("r2"), catalog("m1(2)"));
    let mut l = ptr::null_mut();
    unsafe {
        assert_eq!(ca_current_algebra(g, a, &mut l), CaStatus::Ok);
        let mut r = CaRigidity { verdict: CaVerdict::Inconclusive, h2: CaCohomologyDims::default(), orbit_dim: 0 };
        assert_eq!(ca_rigidity_certificate(l, &mut r), CaStatus::Ok);
        assert_eq!(r.verdict, CaVerdict::RigidByH2Zero);
        assert_eq!((r.h2.dim_h, r.orbit_dim), (0, 12));

        let mut s = ptr::null_mut();
        assert_eq!(ca_direct_sum(g, g, &mut s), CaStatus::Ok);
        let (mut d1, mut d2) = (0usize, 0usize);
        assert_eq!(ca_algebra_dim(s, &mut d1), CaStatus::Ok);
        assert_eq!(ca_algebra_dim(l, &mut d2), CaStatus::Ok);
        assert_eq!((d1, d2), (4, 4));
        ca_algebra_free(s);
        ca_algebra_free(l);
        ca_algebra_free(g);
        ca_algebra_free(a);
    }
    assert!(ca_last_error().is_null());
}

#[test]
fn cohomology_dimensions() {
    let (ab, null) = (catalog("abelian(2)"), catalog("null(1)"));
    unsafe {
        let mut d = CaCohomologyDims::default();
        assert_eq!(ca_chevalley_dims(ab, 2, &mut d), CaStatus::Ok);
        assert_eq!(d, CaCohomologyDims { dim_z: 2, dim_b: 0, dim_h: 2 });
        assert_eq!(ca_harrison_h2(null, &mut d), CaStatus::Ok);
        assert_eq!(d.dim_h, 1);
        assert_eq!(ca_chevalley_dims(ab, 3, &mut d), CaStatus::UnsupportedDegree);
        assert_eq!(ca_harrison_h2(ab, &mut d), CaStatus::KindMismatch);
        ca_algebra_free(ab);
        ca_algebra_free(null);
    }
}

#[test]
fn json_round_trip_and_fingerprint() {
    let r2 = catalog("r2");
    unsafe {
        let mut text = ptr::null_mut();
        assert_eq!(ca_algebra_to_json(r2, &mut text), CaStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(ca_algebra_from_json(text, &mut back), CaStatus::Ok);
        ca_string_free(text);

        let (mut pass, mut n) = (false, 1usize);
        assert_eq!(ca_algebra_check_identities(back, &mut pass, &mut n), CaStatus::Ok);
        assert!(pass && n == 0);

        let mut fp = ptr::null_mut();
        assert_eq!(ca_fingerprint_json(back, &mut fp), CaStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(fp).to_str().unwrap()).unwrap();
        assert_eq!((v["dim"].as_u64(), v["der_dim"].as_u64(), v["h2_dim"].as_u64()), (Some(2), Some(2), Some(0)));
        ca_string_free(fp);
        ca_algebra_free(back);
        ca_algebra_free(r2);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new(
            "{\"name\": \"x\", \"kind\": \"lie\", \"field\": \"Q\", \"dim\": 2, \"constants\": [[2, 1, 2, \"1\"]]}",
        )
        .unwrap();
        assert_eq!(ca_algebra_from_json(bad.as_ptr(), &mut out), CaStatus::Parse);
        assert!(out.is_null());
        assert!(last_error().contains("lower-triangular"), "{}", last_error());

        let unknown = CString::new("nope(1)").unwrap();
        assert_eq!(ca_algebra_from_catalog(unknown.as_ptr(), &mut out), CaStatus::UnknownAlgebra);
        assert_eq!(ca_algebra_from_catalog(ptr::null(), &mut out), CaStatus::NullPointer);
        let r2 = CString::new("r2").unwrap();
        assert_eq!(ca_algebra_from_catalog(r2.as_ptr(), ptr::null_mut()), CaStatus::NullPointer);

        let broken = CString::new(
            "{\"name\": \"b\", \"kind\": \"lie\", \"field\": \"Q\", \"dim\": 3, \"constants\": [[1, 2, 3, \"1\"], [1, 3, 1, \"1\"], [2, 3, 2, \"1\"]]}",
        )
        .unwrap();
        assert_eq!(ca_algebra_from_json(broken.as_ptr(), &mut out), CaStatus::Ok);
        let mut r = CaRigidity { verdict: CaVerdict::Inconclusive, h2: CaCohomologyDims::default(), orbit_dim: 0 };
        assert_eq!(ca_rigidity_certificate(out, &mut r), CaStatus::IdentityFailure);
        let (mut pass, mut n) = (true, 0usize);
        assert_eq!(ca_algebra_check_identities(out, &mut pass, &mut n), CaStatus::Ok);
        assert!(!pass && n == 1);
        ca_algebra_free(out);
        ca_algebra_free(ptr::null_mut());
        ca_string_free(ptr::null_mut());
    }
}
