use std::ffi::CStr;
use std::ptr;

use zblanden_ffi::*;

fn last_error() -> String {
    let p = zbl_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

struct Ctx(*mut ZblContext);

impl Drop for Ctx {
    fn drop(&mut self) {
        unsafe { zbl_context_free(self.0) }
    }
}

fn ctx() -> Ctx {
    Ctx(zbl_context_default())
}

fn blank_eval() -> ZblEval {
    ZblEval {
        value: f64::NAN,
        abs_error_est: f64::NAN,
        terms_used: 0,
        method: ZblMethod::Agm,
    }
}

#[test]
fn eval_matches_library() {
    let c = ctx();
    let mut out = blank_eval();
    assert_eq!(unsafe { zbl_eval(c.0, 1.0, 1.0, 0.5, &mut out) }, ZblStatus::Ok);
    assert!((out.value - 2.0 * std::f64::consts::LN_2).abs() <= 1e-14 * 2.0 * std::f64::consts::LN_2);
    assert_eq!(out.method, ZblMethod::Series);
    assert!(zbl_last_error().is_null());

    let direct = zblanden::zb_eval(zblanden::ParamPair::new(0.3, 0.7).unwrap(), 0.97, &Default::default()).unwrap();
    assert_eq!(unsafe { zbl_eval(c.0, 0.3, 0.7, 0.97, &mut out) }, ZblStatus::Ok);
    assert_eq!(out.value.to_bits(), direct.value.to_bits());
    assert_eq!(out.method, ZblMethod::ConnectionSeries);
}

#[test]
fn eval_complement_near_one() {
    let c = ctx();
    let mut out = blank_eval();
    let xc = 1e-13;
    assert_eq!(
        unsafe { zbl_eval_complement(c.0, 1.0, 1.0, 1.0 - xc, xc, &mut out) },
        ZblStatus::Ok
    );
    let expected = -xc.ln() / (1.0 - xc);
    assert!((out.value - expected).abs() < 1e-10 * expected);
}

#[test]
fn errors_leave_output_untouched() {
    let c = ctx();
    let mut out = blank_eval();
    assert_eq!(unsafe { zbl_eval(c.0, 1.0, 1.0, 1.0, &mut out) }, ZblStatus::Domain);
    assert!(out.value.is_nan());
    assert!(last_error().contains("domain"));
    assert_eq!(unsafe { zbl_eval(c.0, -1.0, 1.0, 0.5, &mut out) }, ZblStatus::Domain);
    assert_eq!(
        unsafe { zbl_eval(ptr::null(), 1.0, 1.0, 0.5, &mut out) },
        ZblStatus::NullPointer
    );
    assert_eq!(last_error(), "context is null");
    assert_eq!(
        unsafe { zbl_eval(c.0, 1.0, 1.0, 0.5, ptr::null_mut()) },
        ZblStatus::NullPointer
    );
}

#[test]
fn context_validation() {
    assert!(zbl_context_new(2.0, 100, 1e-6, 1e-10).is_null());
    assert!(!last_error().is_empty());
    assert!(zbl_context_new(1e-14, 1000, 1e-6, 0.0).is_null());
    let c = Ctx(zbl_context_new(1e-12, 10_000, 1e-6, 1e-10));
    assert!(!c.0.is_null());
    unsafe { zbl_context_free(ptr::null_mut()) };
}

#[test]
fn max_terms_reaches_non_convergence() {
    let c = Ctx(zbl_context_new(1e-15, 10, 1e-6, 1e-10));
    let mut out = blank_eval();
    assert_eq!(
        unsafe { zbl_eval(c.0, 0.5, 0.5, 0.8, &mut out) },
        ZblStatus::NonConvergence
    );
}

#[test]
fn special_functions() {
    let mut v = f64::NAN;
    assert_eq!(unsafe { zbl_gamma_ln(5.0, &mut v) }, ZblStatus::Ok);
    assert!((v - 24f64.ln()).abs() < 1e-13);
    assert_eq!(unsafe { zbl_digamma(1.0, &mut v) }, ZblStatus::Ok);
    assert!((v + zblanden::EULER_GAMMA).abs() < 1e-14);
    assert_eq!(unsafe { zbl_beta(0.5, 0.5, &mut v) }, ZblStatus::Ok);
    assert!((v - std::f64::consts::PI).abs() < 1e-14);
    assert_eq!(unsafe { zbl_ramanujan_r(0.5, 0.5, &mut v) }, ZblStatus::Ok);
    assert!((v - zblanden::LOG_16).abs() < 1e-13);
    assert_eq!(unsafe { zbl_gamma_ln(0.0, &mut v) }, ZblStatus::Domain);
}

#[test]
fn elliptic_integrals_agree() {
    let c = ctx();
    let (mut k, mut agm) = (blank_eval(), blank_eval());
    for &m in &[0.0, 0.3, std::f64::consts::FRAC_1_SQRT_2, 0.99] {
        assert_eq!(unsafe { zbl_elliptic_k(c.0, m, &mut k) }, ZblStatus::Ok);
        assert_eq!(unsafe { zbl_agm_elliptic_k(m, &mut agm) }, ZblStatus::Ok);
        assert!((k.value - agm.value).abs() <= 1e-12 * agm.value);
        assert_eq!(agm.method, ZblMethod::Agm);
    }
}

#[test]
fn classification() {
    let mut m = ZblMembership {
        in_d1: false,
        in_d2: false,
        in_d3: false,
        is_equality_point: false,
        in_neither: false,
    };
    assert_eq!(unsafe { zbl_classify(0.4, 0.4, &mut m) }, ZblStatus::Ok);
    assert!(m.in_d1 && m.in_d3 && !m.in_d2 && !m.in_neither);
    assert_eq!(unsafe { zbl_classify(0.3, 1.0, &mut m) }, ZblStatus::Ok);
    assert!(m.in_neither && !m.in_d1 && !m.in_d2);
    assert_eq!(unsafe { zbl_classify(0.5, 0.5, &mut m) }, ZblStatus::Ok);
    assert!(m.is_equality_point);
}

#[test]
fn gap_and_s() {
    let c = ctx();
    let mut v = f64::NAN;
    assert_eq!(unsafe { zbl_landen_gap(c.0, 0.1, 0.1, 0.5, &mut v) }, ZblStatus::Ok);
    assert!(v > 0.0);
    assert_eq!(unsafe { zbl_landen_gap(c.0, 1.0, 1.0, 0.5, &mut v) }, ZblStatus::Ok);
    assert!(v < 0.0);
    assert_eq!(unsafe { zbl_s_diff(c.0, 0.4, 0.4, 0.5, &mut v) }, ZblStatus::Ok);
    assert!(v > 0.0);
}

fn blank_report() -> ZblReport {
    ZblReport {
        a: 0.0,
        b: 0.0,
        r: 0.0,
        theorem: ZblTheorem::RatioD1,
        has_lower: false,
        lower: 0.0,
        value: 0.0,
        has_upper: false,
        upper: 0.0,
        margin: 0.0,
        verdict: ZblVerdict::Fails,
    }
}

#[test]
fn check_each_theorem() {
    let c = ctx();
    let cases = [
        (ZblTheorem::FirstLandenD1, 0.1, 0.1),
        (ZblTheorem::FirstLandenD2, 1.0, 1.0),
        (ZblTheorem::RatioD1, 0.1, 0.1),
        (ZblTheorem::RatioD2, 1.0, 1.0),
        (ZblTheorem::EllipticD1, 0.1, 0.1),
        (ZblTheorem::EllipticD2, 1.0, 1.0),
        (ZblTheorem::DifferenceD3, 0.4, 0.4),
        (ZblTheorem::DifferenceD2, 1.0, 1.0),
        (ZblTheorem::SecondLandenRatioD1, 0.1, 0.1),
        (ZblTheorem::SecondLandenDifferenceD3, 0.4, 0.4),
        (ZblTheorem::SecondLandenRatioD2, 1.0, 1.0),
        (ZblTheorem::SecondLandenDifferenceD2, 1.0, 1.0),
    ];
    for (theorem, a, b) in cases {
        let mut rep = blank_report();
        assert_eq!(
            unsafe { zbl_check(c.0, theorem as i32, a, b, 0.4, &mut rep) },
            ZblStatus::Ok,
            "{theorem:?}"
        );
        assert_eq!(rep.theorem, theorem);
        assert_eq!(rep.verdict, ZblVerdict::Holds, "{theorem:?}");
        assert!(rep.has_lower || rep.has_upper);
        assert_eq!(rep.has_lower, !rep.lower.is_nan());
        assert_eq!(rep.has_upper, !rep.upper.is_nan());
        assert_eq!((rep.a, rep.b, rep.r), (a, b, 0.4));
    }
}

#[test]
fn check_rejections() {
    let c = ctx();
    let mut rep = blank_report();
    let status = unsafe { zbl_check(c.0, ZblTheorem::DifferenceD3 as i32, 0.1, 2.0, 0.4, &mut rep) };
    assert_eq!(status, ZblStatus::RegionMismatch);
    assert!(last_error().contains("not in region"));
    assert_eq!(
        unsafe { zbl_check(c.0, 12, 0.1, 0.1, 0.4, &mut rep) },
        ZblStatus::InvalidEnum
    );
    assert_eq!(
        unsafe { zbl_check(c.0, -1, 0.1, 0.1, 0.4, &mut rep) },
        ZblStatus::InvalidEnum
    );
}

#[test]
fn witnesses() {
    let c = ctx();
    let mut w = ZblWitnesses {
        r_minus: 0.0,
        r_plus: 0.0,
        gap_minus: 0.0,
        gap_plus: 0.0,
    };
    assert_eq!(
        unsafe { zbl_falsify_neither(c.0, 0.34, 0.891, 200, &mut w) },
        ZblStatus::Ok
    );
    assert!(w.gap_minus < 0.0 && w.gap_plus > 0.0);
    assert!(w.r_minus > 0.0 && w.r_minus < 1.0 && w.r_plus > 0.0 && w.r_plus < 1.0);
    assert_eq!(
        unsafe { zbl_falsify_neither(c.0, 1.0, 1.0, 200, &mut w) },
        ZblStatus::RegionMismatch
    );
    assert_eq!(
        unsafe { zbl_falsify_neither(c.0, 0.3, 1.0, 200, &mut w) },
        ZblStatus::WitnessNotFound
    );
    assert!(last_error().contains("witness"));
}

#[test]
fn profiles() {
    let mut p = ZblProfile {
        kind: ZblProfileKind::Constant,
        turning_index: 0,
        n_examined: 0,
    };
    assert_eq!(
        unsafe { zbl_profile(0.3, 1.0, ZblSeries::F as i32, 1000, &mut p) },
        ZblStatus::Ok
    );
    assert_eq!(p.kind, ZblProfileKind::DecreasingThenIncreasing);
    assert_eq!(p.turning_index, 1);
    assert_eq!(
        unsafe { zbl_profile(0.1, 0.1, ZblSeries::F as i32, 1000, &mut p) },
        ZblStatus::Ok
    );
    assert_eq!(p.kind, ZblProfileKind::Decreasing);
    assert_eq!(p.turning_index, -1);
    assert_eq!(
        unsafe { zbl_profile(0.1, 0.1, 7, 1000, &mut p) },
        ZblStatus::InvalidEnum
    );
}

#[test]
fn status_strings() {
    for s in [
        ZblStatus::Ok,
        ZblStatus::Domain,
        ZblStatus::NonConvergence,
        ZblStatus::RegionMismatch,
        ZblStatus::AmbiguousProfile,
        ZblStatus::WitnessNotFound,
        ZblStatus::NullPointer,
        ZblStatus::InvalidEnum,
        ZblStatus::Panic,
    ] {
        let text = unsafe { CStr::from_ptr(zbl_status_str(s)) };
        assert!(!text.to_bytes().is_empty());
    }
}

#[test]
fn context_shared_across_threads() {
    struct Shared(*const ZblContext);
    unsafe impl Sync for Shared {}
    let c = ctx();
    let shared = Shared(c.0);
    let values: Vec<f64> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=4)
            .map(|i| {
                let shared = &shared;
                s.spawn(move || {
                    let mut out = blank_eval();
                    assert_eq!(
                        unsafe { zbl_eval(shared.0, 1.0, 1.0, 0.2 * i as f64, &mut out) },
                        ZblStatus::Ok
                    );
                    out.value
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for (i, v) in values.iter().enumerate() {
        let x = 0.2 * (i + 1) as f64;
        assert!((v + (1.0 - x).ln() / x).abs() < 1e-13);
    }
}
