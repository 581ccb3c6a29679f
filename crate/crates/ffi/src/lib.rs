//! C interface to `zblanden`.
//!
//! Every entry point returns a [`ZblStatus`] and writes its result through an
//! out-pointer. On failure the out-pointer is left untouched and a message is
//! available from [`zbl_last_error`] on the calling thread.
//!
//! A [`ZblContext`] holds the truncation policy and verdict tolerance. It is
//! immutable after creation and may be shared between threads.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use zblanden::{
    Checker, Error, EvalResult, InequalityReport, Method, ParamPair, ProfileKind, SeriesPair, TheoremTag,
    TruncationPolicy, UnitArg, Verdict,
};

/// Opaque evaluation settings.
pub struct ZblContext {
    checker: Checker,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblStatus {
    Ok = 0,
    Domain = 1,
    NonConvergence = 2,
    RegionMismatch = 3,
    AmbiguousProfile = 4,
    WitnessNotFound = 5,
    NullPointer = 6,
    InvalidEnum = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblMethod {
    Series = 0,
    ConnectionSeries = 1,
    RamanujanAsymptotic = 2,
    ClosedForm = 3,
    Agm = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblVerdict {
    Holds = 0,
    Fails = 1,
    WithinTolerance = 2,
}

/// Inequality selector for [`zbl_check`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblTheorem {
    FirstLandenD1 = 0,
    FirstLandenD2 = 1,
    RatioD1 = 2,
    RatioD2 = 3,
    EllipticD1 = 4,
    EllipticD2 = 5,
    DifferenceD3 = 6,
    DifferenceD2 = 7,
    SecondLandenRatioD1 = 8,
    SecondLandenDifferenceD3 = 9,
    SecondLandenRatioD2 = 10,
    SecondLandenDifferenceD2 = 11,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblSeries {
    /// `F(a,b;a+b;x)` against `F(1/2,1/2;1;x)`.
    F = 0,
    /// `F(a,b;a+b+1;x)` against `F(1/2,1/2;2;x)`.
    G = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZblProfileKind {
    Increasing = 0,
    Decreasing = 1,
    IncreasingThenDecreasing = 2,
    DecreasingThenIncreasing = 3,
    Constant = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZblEval {
    pub value: f64,
    pub abs_error_est: f64,
    pub terms_used: usize,
    pub method: ZblMethod,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZblMembership {
    pub in_d1: bool,
    pub in_d2: bool,
    pub in_d3: bool,
    pub is_equality_point: bool,
    pub in_neither: bool,
}

/// `lower ≤ value ≤ upper`. A missing bound is NaN with its `has_` flag false.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZblReport {
    pub a: f64,
    pub b: f64,
    pub r: f64,
    pub theorem: ZblTheorem,
    pub has_lower: bool,
    pub lower: f64,
    pub value: f64,
    pub has_upper: bool,
    pub upper: f64,
    pub margin: f64,
    pub verdict: ZblVerdict,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZblWitnesses {
    pub r_minus: f64,
    pub r_plus: f64,
    pub gap_minus: f64,
    pub gap_plus: f64,
}

/// `turning_index` is -1 unless the kind is unimodal.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZblProfile {
    pub kind: ZblProfileKind,
    pub turning_index: i64,
    pub n_examined: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_last_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> ZblStatus {
    match err {
        Error::Domain { .. } => ZblStatus::Domain,
        Error::NonConvergence { .. } => ZblStatus::NonConvergence,
        Error::RegionMismatch { .. } => ZblStatus::RegionMismatch,
        Error::AmbiguousProfile { .. } => ZblStatus::AmbiguousProfile,
        Error::WitnessNotFound(_) => ZblStatus::WitnessNotFound,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
    BadEnum(&'static str, c_int),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs `f`, stores its value in `out` and maps errors and panics to a status.
fn guard<T, F>(out: *mut T, f: F) -> ZblStatus
where
    F: FnOnce() -> Result<T, Failure> + UnwindSafe,
{
    if out.is_null() {
        set_last_error("output pointer is null".to_owned());
        return ZblStatus::NullPointer;
    }
    match catch_unwind(f) {
        Ok(Ok(v)) => {
            // SAFETY: non-null, and the caller guarantees it points to a writable T
            unsafe { out.write(v) };
            clear_last_error();
            ZblStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(format!("{what} is null"));
            ZblStatus::NullPointer
        }
        Ok(Err(Failure::BadEnum(what, v))) => {
            set_last_error(format!("{v} is not a valid {what}"));
            ZblStatus::InvalidEnum
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_owned());
            set_last_error(format!("internal panic: {msg}"));
            ZblStatus::Panic
        }
    }
}

fn checker<'a>(ctx: *const ZblContext) -> Result<&'a Checker, Failure> {
    // SAFETY: the caller passes a pointer from zbl_context_new or NULL
    unsafe { ctx.as_ref() }
        .map(|c| &c.checker)
        .ok_or(Failure::Null("context"))
}

fn eval_out(r: EvalResult) -> ZblEval {
    ZblEval {
        value: r.value,
        abs_error_est: r.abs_error_est,
        terms_used: r.terms_used,
        method: match r.method {
            Method::Series => ZblMethod::Series,
            Method::ConnectionSeries => ZblMethod::ConnectionSeries,
            Method::RamanujanAsymptotic => ZblMethod::RamanujanAsymptotic,
            Method::ClosedForm => ZblMethod::ClosedForm,
            Method::Agm => ZblMethod::Agm,
        },
    }
}

const THEOREMS: [(ZblTheorem, TheoremTag); 12] = [
    (ZblTheorem::FirstLandenD1, TheoremTag::T21D1),
    (ZblTheorem::FirstLandenD2, TheoremTag::T21D2),
    (ZblTheorem::RatioD1, TheoremTag::T22D1),
    (ZblTheorem::RatioD2, TheoremTag::T22D2),
    (ZblTheorem::EllipticD1, TheoremTag::CorD1),
    (ZblTheorem::EllipticD2, TheoremTag::CorD2),
    (ZblTheorem::DifferenceD3, TheoremTag::T23D3),
    (ZblTheorem::DifferenceD2, TheoremTag::T23D2),
    (ZblTheorem::SecondLandenRatioD1, TheoremTag::T24D1),
    (ZblTheorem::SecondLandenDifferenceD3, TheoremTag::T24D3),
    (ZblTheorem::SecondLandenRatioD2, TheoremTag::T24D2a),
    (ZblTheorem::SecondLandenDifferenceD2, TheoremTag::T24D2b),
];

fn theorem_tag(theorem: c_int) -> Result<TheoremTag, Failure> {
    THEOREMS
        .iter()
        .find(|(z, _)| *z as c_int == theorem)
        .map(|(_, t)| *t)
        .ok_or(Failure::BadEnum("ZblTheorem", theorem))
}

fn report_out(rep: InequalityReport) -> ZblReport {
    let theorem = THEOREMS
        .iter()
        .find(|(_, t)| *t == rep.theorem)
        .map(|(z, _)| *z)
        .expect("every tag is mapped");
    ZblReport {
        a: rep.params.a(),
        b: rep.params.b(),
        r: rep.r,
        theorem,
        has_lower: rep.lower.is_some(),
        lower: rep.lower.unwrap_or(f64::NAN),
        value: rep.value,
        has_upper: rep.upper.is_some(),
        upper: rep.upper.unwrap_or(f64::NAN),
        margin: rep.margin,
        verdict: match rep.verdict {
            Verdict::Holds => ZblVerdict::Holds,
            Verdict::Fails => ZblVerdict::Fails,
            Verdict::WithinTolerance => ZblVerdict::WithinTolerance,
        },
    }
}

/// Creates a context. Returns NULL if a setting is out of range; the reason
/// is then available from [`zbl_last_error`].
#[no_mangle]
pub extern "C" fn zbl_context_new(
    rel_tol: f64,
    max_terms: usize,
    asymptotic_switch_delta: f64,
    verdict_tol: f64,
) -> *mut ZblContext {
    let built = catch_unwind(|| {
        let policy = TruncationPolicy::new(rel_tol, max_terms, asymptotic_switch_delta)?;
        Checker::new(policy, verdict_tol)
    });
    match built {
        Ok(Ok(checker)) => {
            clear_last_error();
            Box::into_raw(Box::new(ZblContext { checker }))
        }
        Ok(Err(e)) => {
            set_last_error(e.to_string());
            ptr::null_mut()
        }
        Err(_) => {
            set_last_error("internal panic".to_owned());
            ptr::null_mut()
        }
    }
}

/// A context with the library defaults.
#[no_mangle]
pub extern "C" fn zbl_context_default() -> *mut ZblContext {
    Box::into_raw(Box::new(ZblContext {
        checker: Checker::default(),
    }))
}

/// Releases a context. NULL is ignored.
///
/// # Safety
/// `ctx` must come from `zbl_context_new` or `zbl_context_default` and not be
/// used afterwards.
#[no_mangle]
pub unsafe extern "C" fn zbl_context_free(ctx: *mut ZblContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn zbl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn zbl_status_str(status: ZblStatus) -> *const c_char {
    let s: &'static CStr = match status {
        ZblStatus::Ok => c"ok",
        ZblStatus::Domain => c"argument outside the domain",
        ZblStatus::NonConvergence => c"series did not converge",
        ZblStatus::RegionMismatch => c"parameters not in the claimed region",
        ZblStatus::AmbiguousProfile => c"ambiguous coefficient-ratio profile",
        ZblStatus::WitnessNotFound => c"no witness pair found",
        ZblStatus::NullPointer => c"null pointer",
        ZblStatus::InvalidEnum => c"invalid enumeration value",
        ZblStatus::Panic => c"internal error",
    };
    s.as_ptr()
}

/// `F(a, b; a+b; x)` for `0 ≤ x < 1`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_eval(ctx: *const ZblContext, a: f64, b: f64, x: f64, out: *mut ZblEval) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        Ok(eval_out(zblanden::zb_eval(ParamPair::new(a, b)?, x, &c.policy)?))
    })
}

/// As [`zbl_eval`] with `1 - x` supplied separately, for arguments close to 1.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_eval_complement(
    ctx: *const ZblContext,
    a: f64,
    b: f64,
    x: f64,
    one_minus_x: f64,
    out: *mut ZblEval,
) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        let arg = UnitArg::with_complement(x, one_minus_x)?;
        Ok(eval_out(zblanden::zb_eval_arg(ParamPair::new(a, b)?, arg, &c.policy)?))
    })
}

/// `d/dx F(a, b; a+b; x)`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_derivative(
    ctx: *const ZblContext,
    a: f64,
    b: f64,
    x: f64,
    out: *mut ZblEval,
) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        Ok(eval_out(zblanden::zb_derivative(ParamPair::new(a, b)?, x, &c.policy)?))
    })
}

/// Complete elliptic integral of the first kind, modulus `k`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_elliptic_k(ctx: *const ZblContext, k: f64, out: *mut ZblEval) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        Ok(eval_out(zblanden::elliptic_k(k, &c.policy)?))
    })
}

/// The same integral by the arithmetic-geometric mean.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_agm_elliptic_k(k: f64, out: *mut ZblEval) -> ZblStatus {
    guard(out, || Ok(eval_out(zblanden::agm_elliptic_k(k)?)))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_gamma_ln(x: f64, out: *mut f64) -> ZblStatus {
    guard(out, || Ok(zblanden::gamma_ln(x)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_digamma(x: f64, out: *mut f64) -> ZblStatus {
    guard(out, || Ok(zblanden::digamma(x)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_beta(a: f64, b: f64, out: *mut f64) -> ZblStatus {
    guard(out, || Ok(zblanden::beta(ParamPair::new(a, b)?)?))
}

/// `-ψ(a) - ψ(b) - 2γ`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_ramanujan_r(a: f64, b: f64, out: *mut f64) -> ZblStatus {
    guard(out, || Ok(zblanden::ramanujan_r(ParamPair::new(a, b)?)?))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_classify(a: f64, b: f64, out: *mut ZblMembership) -> ZblStatus {
    guard(out, || {
        let m = zblanden::classify(ParamPair::new(a, b)?);
        Ok(ZblMembership {
            in_d1: m.in_d1,
            in_d2: m.in_d2,
            in_d3: m.in_d3,
            is_equality_point: m.is_equality_point,
            in_neither: m.in_neither,
        })
    })
}

/// `(1+r) F(r²) - F(4r/(1+r)²)`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_landen_gap(ctx: *const ZblContext, a: f64, b: f64, r: f64, out: *mut f64) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        Ok(zblanden::landen_gap(ParamPair::new(a, b)?, r, &c.policy)?)
    })
}

/// `(1+√r) F(r) - F(4√r/(1+√r)²)`.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_s_diff(ctx: *const ZblContext, a: f64, b: f64, r: f64, out: *mut f64) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        Ok(zblanden::s_diff(ParamPair::new(a, b)?, r, &c.policy)?)
    })
}

/// Evaluates one inequality chain at `(a, b)` and argument `r`.
///
/// `theorem` is a `ZblTheorem` value.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_check(
    ctx: *const ZblContext,
    theorem: c_int,
    a: f64,
    b: f64,
    r: f64,
    out: *mut ZblReport,
) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        let tag = theorem_tag(theorem)?;
        Ok(report_out(c.check(tag, ParamPair::new(a, b)?, r)?))
    })
}

/// Searches for arguments where the Landen gap takes both signs. Only pairs
/// outside D1 and D2 are accepted.
///
/// # Safety
/// `ctx` must be a live context and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_falsify_neither(
    ctx: *const ZblContext,
    a: f64,
    b: f64,
    grid_size: usize,
    out: *mut ZblWitnesses,
) -> ZblStatus {
    guard(out, || {
        let c = checker(ctx)?;
        let w = zblanden::falsify_neither(ParamPair::new(a, b)?, grid_size, c)?;
        Ok(ZblWitnesses {
            r_minus: w.r_minus,
            r_plus: w.r_plus,
            gap_minus: w.gap_minus,
            gap_plus: w.gap_plus,
        })
    })
}

/// Monotonicity profile of the coefficient ratio over `n < n_max`. `series`
/// is a `ZblSeries` value.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn zbl_profile(a: f64, b: f64, series: c_int, n_max: usize, out: *mut ZblProfile) -> ZblStatus {
    guard(out, || {
        let variant = match series {
            s if s == ZblSeries::F as c_int => SeriesPair::FvsF0,
            s if s == ZblSeries::G as c_int => SeriesPair::GvsG0,
            _ => return Err(Failure::BadEnum("ZblSeries", series)),
        };
        let p = zblanden::coeff_ratio_profile(ParamPair::new(a, b)?, variant, n_max)?;
        Ok(ZblProfile {
            kind: match p.kind {
                ProfileKind::Increasing => ZblProfileKind::Increasing,
                ProfileKind::Decreasing => ZblProfileKind::Decreasing,
                ProfileKind::IncreasingThenDecreasing => ZblProfileKind::IncreasingThenDecreasing,
                ProfileKind::DecreasingThenIncreasing => ZblProfileKind::DecreasingThenIncreasing,
                ProfileKind::Constant => ZblProfileKind::Constant,
            },
            turning_index: p.turning_index.map_or(-1, |t| t as i64),
            n_examined: p.n_examined,
        })
    })
}
