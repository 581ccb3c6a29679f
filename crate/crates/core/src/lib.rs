//! Zero-balanced Gaussian hypergeometric functions `F(a, b; a + b; x)` and
//! the Landen-type inequalities they satisfy.
//!
//! - [`special`]: log-gamma, digamma, Beta and `R(a, b)`.
//! - [`hyper`]: evaluation of `F` on `[0, 1)`, its derivative, and `K`.
//! - [`landen`]: Landen maps, identities and inequality checks.
//! - [`regions`]: the parameter regions D1, D2, D3 and coefficient analysis.
//!
//! ```
//! use zblanden::{zb_eval, ParamPair, TruncationPolicy};
//!
//! let p = ParamPair::new(1.0, 1.0).unwrap();
//! let r = zb_eval(p, 0.5, &TruncationPolicy::default()).unwrap();
//! assert!((r.value - 2.0 * std::f64::consts::LN_2).abs() < 1e-13);
//! ```

pub mod cli;
pub mod error;
pub mod hyper;
pub mod landen;
pub mod output;
pub mod regions;
pub mod special;

pub use error::{Error, Result, WitnessFailure};
pub use hyper::{
    agm_elliptic_k, elliptic_k, elliptic_k_comp, elliptic_k_with_complement, hyp2f1_series, pochhammer_ln,
    ramanujan_residual, shifted_eval, shifted_eval_arg, zb_derivative, zb_derivative_arg, zb_eval, zb_eval_arg,
    EvalResult, Method, TruncationPolicy, UnitArg,
};
pub use landen::{
    diff_landen_residual, landen_ascending, landen_descending, landen_gap, landen_identity_residuals, r_grid, ratio_f,
    ratio_g, s_diff, s_diff_arg, Checker, InequalityReport, SecondLandenForm, TheoremTag, Verdict,
};
pub use regions::{
    classify, coeff_ratio_profile, falsify_neither, sample_region, sign_pattern_t, t_coeffs_f, t_coeffs_g, ProfileKind,
    Region, RegionMembership, SequenceProfile, SeriesPair, Witnesses,
};
pub use special::{beta, digamma, gamma_ln, ramanujan_r, ParamPair, EULER_GAMMA, LOG_16};
