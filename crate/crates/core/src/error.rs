use std::fmt;

use crate::regions::Region;

/// Errors produced by the evaluation, verification and classification routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the domain of the function.
    #[error("domain error in {function}: {detail}")]
    Domain { function: &'static str, detail: String },

    /// A series hit `max_terms` before its stopping rule fired.
    #[error("series did not converge after {terms} terms (partial value {partial}, tail estimate {abs_error_est})")]
    NonConvergence {
        terms: usize,
        partial: f64,
        abs_error_est: f64,
    },

    /// The parameter pair is not in the region the caller claimed.
    #[error("parameters ({a}, {b}) are not in region {claimed}")]
    RegionMismatch { a: f64, b: f64, claimed: Region },

    /// More than one monotonicity change in a finite ratio sequence.
    #[error("ambiguous coefficient-ratio profile: {sign_changes} sign changes in the first difference")]
    AmbiguousProfile { sign_changes: usize },

    /// No sign change of the Landen gap was located for a pair in the "neither" region.
    #[error("{0}")]
    WitnessNotFound(Box<WitnessFailure>),
}

/// Diagnostics attached to [`Error::WitnessNotFound`].
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessFailure {
    pub a: f64,
    pub b: f64,
    /// Largest gap seen and where.
    pub max_gap: (f64, f64),
    /// Smallest gap seen and where.
    pub min_gap: (f64, f64),
    /// `(R - log 16) / B`, the limit of the gap as r -> 1.
    pub limit_at_one: f64,
    pub tolerance: f64,
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no Landen-gap witness pair for ({}, {}): max gap {:e} at r={}, min gap {:e} at r={}, \
             limit at r->1 is {:e} (tolerance {:e})",
            self.a,
            self.b,
            self.max_gap.1,
            self.max_gap.0,
            self.min_gap.1,
            self.min_gap.0,
            self.limit_at_one,
            self.tolerance
        )
    }
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
