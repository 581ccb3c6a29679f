//! Landen argument maps, the classical identities for `K`, and evaluators for
//! the Landen-type inequalities satisfied by `F(a, b; a + b; x)`.
//!
//! Every inequality check returns an [`InequalityReport`] holding a chain
//! `lower ≤ value ≤ upper` (either bound may be absent) and a signed margin.
//! The caller names the region it believes the parameters lie in; a wrong
//! claim is an [`Error::RegionMismatch`], never a silent pass.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::hyper::{
    elliptic_k, elliptic_k_comp, elliptic_k_with_complement, shifted_eval, zb_eval, zb_eval_arg, TruncationPolicy,
    UnitArg,
};
use crate::regions::{classify, Region};
use crate::special::{beta, ramanujan_r, ParamPair, LOG_16};

/// Default absolute tolerance on report margins.
pub const DEFAULT_VERDICT_TOL: f64 = 1e-10;

fn check_open_unit(function: &'static str, r: f64) -> Result<()> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::domain(function, format!("argument must lie in (0, 1), got {r}")));
    }
    Ok(())
}

/// `y = 4r/(1+r)²`, the squared ascending Landen modulus `2√r/(1+r)`.
pub fn landen_ascending(r: f64) -> Result<f64> {
    check_open_unit("landen_ascending", r)?;
    Ok(ascending_arg(r).x())
}

/// `(1-r)/(1+r)`; an involution on `(0, 1)`.
pub fn landen_descending(r: f64) -> Result<f64> {
    check_open_unit("landen_descending", r)?;
    Ok((1.0 - r) / (1.0 + r))
}

/// `4r/(1+r)²` with its complement `((1-r)/(1+r))²`.
pub(crate) fn ascending_arg(r: f64) -> UnitArg {
    let d = (1.0 - r) / (1.0 + r);
    let complement = d * d;
    let x = if r > 0.5 {
        1.0 - complement
    } else {
        4.0 * r / ((1.0 + r) * (1.0 + r))
    };
    UnitArg::with_complement(x, complement).expect("ascending Landen argument lies in (0, 1)")
}

/// `r²` with its complement `(1-r)(1+r)`.
pub(crate) fn square_arg(r: f64) -> UnitArg {
    UnitArg::with_complement(r * r, (1.0 - r) * (1.0 + r)).expect("r² lies in (0, 1)")
}

/// `√t` and `4√t/(1+√t)²` with its complement, for the difference function `s`.
pub(crate) fn sqrt_ascending_arg(t: UnitArg) -> (f64, UnitArg) {
    let root = t.x().sqrt();
    let one_minus_root = t.complement() / (1.0 + root);
    let d = one_minus_root / (1.0 + root);
    let complement = d * d;
    let x = if root > 0.5 {
        1.0 - complement
    } else {
        4.0 * root / ((1.0 + root) * (1.0 + root))
    };
    (
        root,
        UnitArg::with_complement(x, complement).expect("Landen argument lies in (0, 1)"),
    )
}

/// Absolute residuals of the two classical Landen identities
///
/// ```text
/// K(2√r/(1+r)) = (1+r) K(r),     K((1-r)/(1+r)) = (1+r)/2 K'(r).
/// ```
pub fn landen_identity_residuals(r: f64, policy: &TruncationPolicy) -> Result<(f64, f64)> {
    check_open_unit("landen_identity_residuals", r)?;
    let ascending_mod = 2.0 * r.sqrt() / (1.0 + r);
    let descending_mod = (1.0 - r) / (1.0 + r);

    let k_r = elliptic_k(r, policy)?.value;
    let k_prime_r = elliptic_k_comp(r, policy)?.value;
    let k_up = elliptic_k_with_complement(ascending_mod, descending_mod, policy)?.value;
    let k_down = elliptic_k_with_complement(descending_mod, ascending_mod, policy)?.value;

    Ok((
        (k_up - (1.0 + r) * k_r).abs(),
        (k_down - 0.5 * (1.0 + r) * k_prime_r).abs(),
    ))
}

/// `f(r) = F(a,b;a+b;r) / F(1/2,1/2;1;r)`.
pub fn ratio_f(p: ParamPair, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_open_unit("ratio_f", r)?;
    Ok(zb_eval(p, r, policy)?.value / zb_eval(ParamPair::EQUALITY, r, policy)?.value)
}

/// `g(r) = F(a,b;a+b+1;r) / F(1/2,1/2;2;r)`.
pub fn ratio_g(p: ParamPair, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_open_unit("ratio_g", r)?;
    Ok(shifted_eval(p, r, policy)?.value / shifted_eval(ParamPair::EQUALITY, r, policy)?.value)
}

/// `(1+r) F(r²) - F(4r/(1+r)²)`.
pub fn landen_gap(p: ParamPair, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_open_unit("landen_gap", r)?;
    let (lhs, rhs) = first_landen_sides(p, r, policy)?;
    Ok(rhs - lhs)
}

/// `(F(4r/(1+r)²), (1+r) F(r²))`
fn first_landen_sides(p: ParamPair, r: f64, policy: &TruncationPolicy) -> Result<(f64, f64)> {
    let near = zb_eval_arg(p, square_arg(r), policy)?.value;
    let far = zb_eval_arg(p, ascending_arg(r), policy)?.value;
    Ok((far, (1.0 + r) * near))
}

/// `s(r) = (1+√r) F(r) - F(4√r/(1+√r)²)`.
pub fn s_diff(p: ParamPair, r: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_open_unit("s_diff", r)?;
    s_diff_arg(p, UnitArg::new(r)?, policy)
}

/// [`s_diff`] with `1 - r` supplied by the caller.
pub fn s_diff_arg(p: ParamPair, r: UnitArg, policy: &TruncationPolicy) -> Result<f64> {
    if r.x() == 0.0 || r.x() >= 1.0 {
        return Err(Error::domain(
            "s_diff",
            format!("argument must lie in (0, 1), got {}", r.x()),
        ));
    }
    let (root, far_arg) = sqrt_ascending_arg(r);
    let near = zb_eval_arg(p, r, policy)?.value;
    let far = zb_eval_arg(p, far_arg, policy)?.value;
    Ok((1.0 + root) * near - far)
}

/// Residual of the differentiated Landen identity
///
/// ```text
/// G₀(z)/(1+√r) = (1-√r) F₀(r) + (√r/2) G₀(r),   z = 4√r/(1+√r)²,
/// ```
///
/// with `F₀ = F(1/2,1/2;1;·)` and `G₀ = F(1/2,1/2;2;·)`.
pub fn diff_landen_residual(r: f64, policy: &TruncationPolicy) -> Result<f64> {
    check_open_unit("diff_landen_residual", r)?;
    let (root, z) = sqrt_ascending_arg(UnitArg::new(r)?);
    let g0_z = crate::hyper::shifted_eval_arg(ParamPair::EQUALITY, z, policy)?.value;
    let g0_r = shifted_eval(ParamPair::EQUALITY, r, policy)?.value;
    let f0_r = zb_eval(ParamPair::EQUALITY, r, policy)?.value;
    let one_minus_root = (1.0 - r) / (1.0 + root);
    Ok((g0_z / (1.0 + root) - one_minus_root * f0_r - 0.5 * root * g0_r).abs())
}

/// Which inequality a report instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremTag {
    /// `F(4r/(1+r)²) ≤ (1+r) F(r²)` on D1.
    T21D1,
    /// The reverse on D2.
    T21D2,
    /// `1 < (1+r)F(r²)/F(4r/(1+r)²) < B/π` on D1.
    T22D1,
    T22D2,
    /// `π/B k(r) < k(2√r/(1+r)) < 2 k(r)` on D1.
    CorD1,
    CorD2,
    /// `0 ≤ s(r) ≤ (R - log 16)/B` on D3.
    T23D3,
    T23D2,
    /// Ratio chain of the second Landen inequality on D1.
    T24D1,
    /// Difference chain on D3.
    T24D3,
    /// Reversed ratio chain on D2.
    T24D2a,
    /// Difference chain on D2.
    T24D2b,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 12] = [
        TheoremTag::T21D1,
        TheoremTag::T21D2,
        TheoremTag::T22D1,
        TheoremTag::T22D2,
        TheoremTag::CorD1,
        TheoremTag::CorD2,
        TheoremTag::T23D3,
        TheoremTag::T23D2,
        TheoremTag::T24D1,
        TheoremTag::T24D3,
        TheoremTag::T24D2a,
        TheoremTag::T24D2b,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremTag::T21D1 => "T21_D1",
            TheoremTag::T21D2 => "T21_D2",
            TheoremTag::T22D1 => "T22_D1",
            TheoremTag::T22D2 => "T22_D2",
            TheoremTag::CorD1 => "COR_D1",
            TheoremTag::CorD2 => "COR_D2",
            TheoremTag::T23D3 => "T23_D3",
            TheoremTag::T23D2 => "T23_D2",
            TheoremTag::T24D1 => "T24_D1",
            TheoremTag::T24D3 => "T24_D3",
            TheoremTag::T24D2a => "T24_D2a",
            TheoremTag::T24D2b => "T24_D2b",
        }
    }

    /// The region the inequality is stated on.
    pub fn region(&self) -> Region {
        match self {
            TheoremTag::T21D1 | TheoremTag::T22D1 | TheoremTag::CorD1 | TheoremTag::T24D1 => Region::D1,
            TheoremTag::T23D3 | TheoremTag::T24D3 => Region::D3,
            _ => Region::D2,
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    WithinTolerance,
}

impl Verdict {
    pub fn from_margin(margin: f64, tol: f64) -> Verdict {
        if margin > tol {
            Verdict::Holds
        } else if margin < -tol {
            Verdict::Fails
        } else {
            Verdict::WithinTolerance
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::Fails => "Fails",
            Verdict::WithinTolerance => "WithinTolerance",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One instance of an inequality chain `lower ≤ value ≤ upper`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityReport {
    pub params: ParamPair,
    /// The argument the theorem is stated in (`r` or `x`).
    pub r: f64,
    pub theorem: TheoremTag,
    pub lower: Option<f64>,
    pub value: f64,
    pub upper: Option<f64>,
    /// Smaller of `value - lower` and `upper - value`.
    pub margin: f64,
    pub verdict: Verdict,
}

impl InequalityReport {
    fn new(
        params: ParamPair,
        r: f64,
        theorem: TheoremTag,
        lower: Option<f64>,
        value: f64,
        upper: Option<f64>,
        tol: f64,
    ) -> Self {
        let lo = lower.map_or(f64::INFINITY, |l| value - l);
        let hi = upper.map_or(f64::INFINITY, |u| u - value);
        let margin = lo.min(hi);
        InequalityReport {
            params,
            r,
            theorem,
            lower,
            value,
            upper,
            margin,
            verdict: Verdict::from_margin(margin, tol),
        }
    }

    pub fn lower_margin(&self) -> Option<f64> {
        self.lower.map(|l| self.value - l)
    }

    pub fn upper_margin(&self) -> Option<f64> {
        self.upper.map(|u| u - self.value)
    }
}

/// Evaluates the inequality chains with a fixed truncation policy and
/// verdict tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Checker {
    pub policy: TruncationPolicy,
    pub tol: f64,
}

impl Default for Checker {
    fn default() -> Self {
        Checker {
            policy: TruncationPolicy::default(),
            tol: DEFAULT_VERDICT_TOL,
        }
    }
}

fn require_region(p: ParamPair, claimed: Region) -> Result<()> {
    if classify(p).contains(claimed) {
        Ok(())
    } else {
        Err(Error::RegionMismatch {
            a: p.a(),
            b: p.b(),
            claimed,
        })
    }
}

fn pick<T>(region: Region, on_d1: T, on_d2: T) -> Result<T> {
    match region {
        Region::D1 => Ok(on_d1),
        Region::D2 => Ok(on_d2),
        _ => unreachable!("callers restrict the region"),
    }
}

fn only(region: Region, allowed: &[Region], p: ParamPair) -> Result<()> {
    if allowed.contains(&region) {
        Ok(())
    } else {
        Err(Error::RegionMismatch {
            a: p.a(),
            b: p.b(),
            claimed: region,
        })
    }
}

/// Which of the four displayed chains of the second Landen inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SecondLandenForm {
    D1Ratio,
    D3Difference,
    D2Ratio,
    D2Difference,
}

impl SecondLandenForm {
    pub fn tag(&self) -> TheoremTag {
        match self {
            SecondLandenForm::D1Ratio => TheoremTag::T24D1,
            SecondLandenForm::D3Difference => TheoremTag::T24D3,
            SecondLandenForm::D2Ratio => TheoremTag::T24D2a,
            SecondLandenForm::D2Difference => TheoremTag::T24D2b,
        }
    }
}

impl Checker {
    pub fn new(policy: TruncationPolicy, tol: f64) -> Result<Self> {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(Error::domain(
                "Checker::new",
                format!("tolerance must be positive, got {tol}"),
            ));
        }
        Ok(Checker { policy, tol })
    }

    /// `F(4r/(1+r)²) ≤ (1+r)F(r²)` on D1, reversed on D2.
    pub fn first_landen(&self, p: ParamPair, r: f64, region: Region) -> Result<InequalityReport> {
        check_open_unit("first_landen", r)?;
        only(region, &[Region::D1, Region::D2], p)?;
        require_region(p, region)?;
        let (far, near) = first_landen_sides(p, r, &self.policy)?;
        let report = match region {
            Region::D1 => InequalityReport::new(p, r, TheoremTag::T21D1, Some(far), near, None, self.tol),
            _ => InequalityReport::new(p, r, TheoremTag::T21D2, None, near, Some(far), self.tol),
        };
        Ok(report)
    }

    /// `1 < (1+r)F(r²)/F(4r/(1+r)²) < B/π` on D1, `B/π < ... < 1` on D2.
    pub fn ratio_bound(&self, p: ParamPair, r: f64, region: Region) -> Result<InequalityReport> {
        check_open_unit("ratio_bound", r)?;
        only(region, &[Region::D1, Region::D2], p)?;
        require_region(p, region)?;
        let (far, near) = first_landen_sides(p, r, &self.policy)?;
        let ratio = near / far;
        let bound = beta(p)? / PI;
        let (tag, lo, hi) = pick(region, (TheoremTag::T22D1, 1.0, bound), (TheoremTag::T22D2, bound, 1.0))?;
        Ok(InequalityReport::new(p, r, tag, Some(lo), ratio, Some(hi), self.tol))
    }

    /// Bounds on `k(2√r/(1+r))` with `k(r) = F(r²)`.
    pub fn corollary_k_bounds(&self, p: ParamPair, r: f64, region: Region) -> Result<InequalityReport> {
        check_open_unit("corollary_k_bounds", r)?;
        only(region, &[Region::D1, Region::D2], p)?;
        require_region(p, region)?;
        let k_r = zb_eval_arg(p, square_arg(r), &self.policy)?.value;
        let k_up = zb_eval_arg(p, ascending_arg(r), &self.policy)?.value;
        let scale = PI / beta(p)?;
        let (tag, lo, hi) = pick(
            region,
            (TheoremTag::CorD1, scale * k_r, 2.0 * k_r),
            (TheoremTag::CorD2, k_r, 2.0 * scale * k_r),
        )?;
        Ok(InequalityReport::new(p, r, tag, Some(lo), k_up, Some(hi), self.tol))
    }

    /// `0 ≤ s(r) ≤ (R - log 16)/B` on D3; `0 ≤ -s(r) ≤ (log 16 - R)/B` on D2.
    pub fn difference_bound(&self, p: ParamPair, r: f64, region: Region) -> Result<InequalityReport> {
        check_open_unit("difference_bound", r)?;
        self.difference_bound_arg(p, UnitArg::new(r)?, region)
    }

    /// [`Checker::difference_bound`] with `1 - r` supplied by the caller.
    pub fn difference_bound_arg(&self, p: ParamPair, arg: UnitArg, region: Region) -> Result<InequalityReport> {
        let r = arg.x();
        check_open_unit("difference_bound", r)?;
        only(region, &[Region::D3, Region::D2], p)?;
        require_region(p, region)?;
        let s = s_diff_arg(p, arg, &self.policy)?;
        let limit = (ramanujan_r(p)? - LOG_16) / beta(p)?;
        let report = match region {
            Region::D3 => InequalityReport::new(p, r, TheoremTag::T23D3, Some(0.0), s, Some(limit), self.tol),
            _ => InequalityReport::new(p, r, TheoremTag::T23D2, Some(0.0), -s, Some(-limit), self.tol),
        };
        Ok(report)
    }

    /// The second Landen inequalities, in the variable `x ∈ (0, 1)`.
    pub fn second_landen(&self, p: ParamPair, x: f64, form: SecondLandenForm) -> Result<InequalityReport> {
        check_open_unit("second_landen", x)?;
        let tag = form.tag();
        require_region(p, tag.region())?;

        // F(((1-x)/(1+x))²) and F(1-x²)
        let d = (1.0 - x) / (1.0 + x);
        let descended_arg = UnitArg::with_complement(d * d, 4.0 * x / ((1.0 + x) * (1.0 + x)))?;
        let descended = zb_eval_arg(p, descended_arg, &self.policy)?.value;
        let complementary = UnitArg::with_complement((1.0 - x) * (1.0 + x), x * x)?;
        let full = zb_eval_arg(p, complementary, &self.policy)?.value;
        let b = beta(p)?;
        let scaled_full = (1.0 + x) * full;

        let report = match form {
            SecondLandenForm::D1Ratio => InequalityReport::new(
                p,
                x,
                tag,
                Some(0.5),
                descended / scaled_full,
                Some(b / (2.0 * PI)),
                self.tol,
            ),
            SecondLandenForm::D2Ratio => InequalityReport::new(
                p,
                x,
                tag,
                Some(b / (2.0 * PI)),
                descended / scaled_full,
                Some(0.5),
                self.tol,
            ),
            SecondLandenForm::D3Difference => {
                let c = (ramanujan_r(p)? - LOG_16) / b;
                InequalityReport::new(
                    p,
                    x,
                    tag,
                    Some(scaled_full),
                    2.0 * descended,
                    Some((1.0 + x) * (full + c)),
                    self.tol,
                )
            }
            SecondLandenForm::D2Difference => {
                let c = (LOG_16 - ramanujan_r(p)?) / b;
                InequalityReport::new(
                    p,
                    x,
                    tag,
                    Some(0.0),
                    scaled_full - 2.0 * descended,
                    Some((1.0 + x) * c),
                    self.tol,
                )
            }
        };
        Ok(report)
    }

    /// Dispatches on the theorem tag; `r` is the argument of that theorem.
    pub fn check(&self, tag: TheoremTag, p: ParamPair, r: f64) -> Result<InequalityReport> {
        match tag {
            TheoremTag::T21D1 => self.first_landen(p, r, Region::D1),
            TheoremTag::T21D2 => self.first_landen(p, r, Region::D2),
            TheoremTag::T22D1 => self.ratio_bound(p, r, Region::D1),
            TheoremTag::T22D2 => self.ratio_bound(p, r, Region::D2),
            TheoremTag::CorD1 => self.corollary_k_bounds(p, r, Region::D1),
            TheoremTag::CorD2 => self.corollary_k_bounds(p, r, Region::D2),
            TheoremTag::T23D3 => self.difference_bound(p, r, Region::D3),
            TheoremTag::T23D2 => self.difference_bound(p, r, Region::D2),
            TheoremTag::T24D1 => self.second_landen(p, r, SecondLandenForm::D1Ratio),
            TheoremTag::T24D3 => self.second_landen(p, r, SecondLandenForm::D3Difference),
            TheoremTag::T24D2a => self.second_landen(p, r, SecondLandenForm::D2Ratio),
            TheoremTag::T24D2b => self.second_landen(p, r, SecondLandenForm::D2Difference),
        }
    }
}

/// Increasing grid on `(0, 1)` with geometric spacing towards both ends:
/// half the points on `[edge, 1/2]`, the rest mirrored on `[1/2, 1 - edge]`.
pub fn r_grid(n: usize, edge: f64) -> Vec<f64> {
    assert!(n >= 2, "grid needs at least two points");
    assert!(edge > 0.0 && edge < 0.5, "edge must lie in (0, 1/2)");
    let lower = n.div_ceil(2);
    let upper = n - lower;
    let geom = |count: usize, i: usize| -> f64 {
        if count == 1 {
            return edge;
        }
        let t = i as f64 / (count - 1) as f64;
        edge * (0.5 / edge).powf(t)
    };
    let mut grid: Vec<f64> = (0..lower).map(|i| geom(lower, i)).collect();
    // mirror: 1 - geom over `upper + 1` points, dropping the shared midpoint
    for i in (0..upper).rev() {
        let t = i as f64 / upper as f64;
        grid.push(1.0 - edge * (0.5 / edge).powf(t));
    }
    grid
}
