//! Parameter regions, the `T_n` coefficient criteria, finite coefficient-ratio
//! profiles and the witness search for the "neither" region.
//!
//! The regions are closed sets in the positive quadrant:
//!
//! ```text
//! D1: ab ≤ 1/4        D2: 1/a + 1/b ≤ 4        D3: a + b ≤ 1
//! ```
//!
//! with `D3 ⊂ D1` and `D1 ∩ D2 = {(1/2, 1/2)}`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, WitnessFailure};
use crate::hyper::pochhammer_ln;
use crate::landen::{landen_gap, r_grid, Checker};
use crate::special::{beta, ramanujan_r, ParamPair, LOG_16};

/// Distance from `(1/2, 1/2)` below which a pair counts as the equality point.
pub const EQUALITY_POINT_TOL: f64 = 1e-14;

/// Default sampling box for region samples.
pub const SAMPLE_BOX: (f64, f64) = (0.01, 3.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    D1,
    D2,
    D3,
    Neither,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::D1 => "D1",
            Region::D2 => "D2",
            Region::D3 => "D3",
            Region::Neither => "neither",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Region {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "d1" => Ok(Region::D1),
            "d2" => Ok(Region::D2),
            "d3" => Ok(Region::D3),
            "neither" => Ok(Region::Neither),
            _ => Err(format!("unknown region '{s}' (expected D1, D2, D3 or neither)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionMembership {
    pub in_d1: bool,
    pub in_d2: bool,
    pub in_d3: bool,
    pub is_equality_point: bool,
    pub in_neither: bool,
}

impl RegionMembership {
    pub fn contains(&self, region: Region) -> bool {
        match region {
            Region::D1 => self.in_d1,
            Region::D2 => self.in_d2,
            Region::D3 => self.in_d3,
            Region::Neither => self.in_neither,
        }
    }

    /// Most specific label: `equality`, `D3`, `D1`, `D2` or `neither`.
    pub fn label(&self) -> &'static str {
        if self.is_equality_point {
            "equality"
        } else if self.in_d3 {
            "D3"
        } else if self.in_d1 {
            "D1"
        } else if self.in_d2 {
            "D2"
        } else {
            "neither"
        }
    }
}

pub fn classify(p: ParamPair) -> RegionMembership {
    let (a, b) = (p.a(), p.b());
    if (a - 0.5).abs() <= EQUALITY_POINT_TOL && (b - 0.5).abs() <= EQUALITY_POINT_TOL {
        return RegionMembership {
            in_d1: true,
            in_d2: true,
            in_d3: true,
            is_equality_point: true,
            in_neither: false,
        };
    }
    let in_d3 = a + b <= 1.0;
    let in_d1 = in_d3 || a * b <= 0.25;
    // 1/a + 1/b ≤ 4  ⇔  a + b ≤ 4ab; rounding near (1/2, 1/2) can make both
    // predicates true, in which case D1 wins.
    let in_d2 = !in_d1 && a + b <= 4.0 * a * b;
    RegionMembership {
        in_d1,
        in_d2,
        in_d3,
        is_equality_point: false,
        in_neither: !in_d1 && !in_d2,
    }
}

/// `(C1, C2)` with `T_n = C1·n + C2` governing `F̂_n / F̂⁰_n`.
pub fn t_coeffs_f(p: ParamPair) -> (f64, f64) {
    let ab = p.product();
    (ab - 0.25, ab - 0.25 * p.sum())
}

/// `(C3, C4)` with `T_n = C3·n + C4` governing `Ĝ_n / Ĝ⁰_n`.
pub fn t_coeffs_g(p: ParamPair) -> (f64, f64) {
    let ab = p.product();
    let s = p.sum();
    (ab + s - 1.25, 2.0 * ab - 0.25 * s - 0.25)
}

/// Which pair of coefficient sequences is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesPair {
    /// `F(a,b;a+b;x)` against `F(1/2,1/2;1;x)`.
    FvsF0,
    /// `F(a,b;a+b+1;x)` against `F(1/2,1/2;2;x)`.
    GvsG0,
}

impl SeriesPair {
    pub fn as_str(&self) -> &'static str {
        match self {
            SeriesPair::FvsF0 => "F",
            SeriesPair::GvsG0 => "G",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProfileKind {
    Increasing,
    Decreasing,
    IncreasingThenDecreasing,
    DecreasingThenIncreasing,
    Constant,
}

impl ProfileKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ProfileKind::Increasing => "Increasing",
            ProfileKind::Decreasing => "Decreasing",
            ProfileKind::IncreasingThenDecreasing => "IncreasingThenDecreasing",
            ProfileKind::DecreasingThenIncreasing => "DecreasingThenIncreasing",
            ProfileKind::Constant => "Constant",
        }
    }

    pub fn is_unimodal(&self) -> bool {
        matches!(
            self,
            ProfileKind::IncreasingThenDecreasing | ProfileKind::DecreasingThenIncreasing
        )
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SequenceProfile {
    pub kind: ProfileKind,
    /// First index `n` at which the difference `ρ_{n+1} - ρ_n` takes the
    /// second sign; present only for unimodal kinds.
    pub turning_index: Option<usize>,
    pub n_examined: usize,
}

/// `log(ĉ_n / ĉ⁰_n)` for the chosen pair, computed from log-Pochhammer values.
pub fn log_coefficient_ratio(p: ParamPair, variant: SeriesPair, n: usize) -> Result<f64> {
    let half = pochhammer_ln(0.5, n)?;
    let fact = pochhammer_ln(1.0, n)?;
    let numer = pochhammer_ln(p.a(), n)? + pochhammer_ln(p.b(), n)?;
    Ok(match variant {
        SeriesPair::FvsF0 => numer - pochhammer_ln(p.sum(), n)? - fact - 2.0 * (half - fact),
        SeriesPair::GvsG0 => {
            numer - pochhammer_ln(p.sum() + 1.0, n)? - fact - 2.0 * (half - fact) + ((n + 1) as f64).ln()
        }
    })
}

/// `ρ_{n+1} / ρ_n` for the coefficient ratio `ρ_n`.
fn step_factor(p: ParamPair, variant: SeriesPair, n: f64) -> f64 {
    let (a, b, s) = (p.a(), p.b(), p.sum());
    let h = (n + 0.5) * (n + 0.5);
    match variant {
        SeriesPair::FvsF0 => ((a + n) * (b + n) * (1.0 + n)) / ((s + n) * h),
        SeriesPair::GvsG0 => ((a + n) * (b + n) * (n + 2.0)) / ((s + 1.0 + n) * h),
    }
}

fn classify_signs(signs: impl Iterator<Item = (usize, i8)>, n_examined: usize) -> Result<SequenceProfile> {
    let mut first: Option<i8> = None;
    let mut current = 0i8;
    let mut turning = None;
    let mut changes = 0usize;
    for (n, s) in signs {
        if s == 0 {
            continue;
        }
        match first {
            None => {
                first = Some(s);
                current = s;
            }
            Some(_) if s != current => {
                changes += 1;
                if turning.is_none() {
                    turning = Some(n);
                }
                current = s;
            }
            _ => {}
        }
    }
    if changes > 1 {
        return Err(Error::AmbiguousProfile { sign_changes: changes });
    }
    let kind = match (first, changes) {
        (None, _) => ProfileKind::Constant,
        (Some(1), 0) => ProfileKind::Increasing,
        (Some(_), 0) => ProfileKind::Decreasing,
        (Some(1), _) => ProfileKind::IncreasingThenDecreasing,
        (Some(_), _) => ProfileKind::DecreasingThenIncreasing,
    };
    Ok(SequenceProfile {
        kind,
        turning_index: turning,
        n_examined,
    })
}

/// Monotonicity pattern of `ρ_n = ĉ_n / ĉ⁰_n` over `n ∈ [0, n_max]`, read
/// from the step factors `ρ_{n+1}/ρ_n`. Steps within a few ulps of 1 are
/// treated as ties and merged.
pub fn coeff_ratio_profile(p: ParamPair, variant: SeriesPair, n_max: usize) -> Result<SequenceProfile> {
    if n_max < 3 {
        return Err(Error::domain(
            "coeff_ratio_profile",
            format!("n_max must be at least 3, got {n_max}"),
        ));
    }
    let tie = 8.0 * f64::EPSILON;
    let signs = (0..n_max).map(|n| {
        let d = step_factor(p, variant, n as f64) - 1.0;
        let s = if d.abs() <= tie {
            0
        } else if d > 0.0 {
            1
        } else {
            -1
        };
        (n, s)
    });
    classify_signs(signs, n_max)
}

/// Monotonicity pattern implied by the sign of `T_n` for `n ∈ [0, n_max)`.
/// Values of `T_n` at rounding level are ties, as in [`coeff_ratio_profile`].
pub fn sign_pattern_t(p: ParamPair, variant: SeriesPair, n_max: usize) -> SequenceProfile {
    let (c, c0) = match variant {
        SeriesPair::FvsF0 => t_coeffs_f(p),
        SeriesPair::GvsG0 => t_coeffs_g(p),
    };
    let n_max = n_max.max(1);
    let signs = (0..n_max).map(|n| {
        let t = c * n as f64 + c0;
        let noise = 8.0 * f64::EPSILON * (c.abs() * n as f64 + c0.abs());
        let s = if t > noise {
            1
        } else if t < -noise {
            -1
        } else {
            0
        };
        (n, s)
    });
    classify_signs(signs, n_max).expect("a linear sequence changes sign at most once")
}

/// Witness search result for a pair in the "neither" region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witnesses {
    /// `landen_gap < -tol` here.
    pub r_minus: f64,
    /// `landen_gap > tol` here.
    pub r_plus: f64,
    pub gap_minus: f64,
    pub gap_plus: f64,
}

/// Finds `r_minus`, `r_plus` with `landen_gap` of opposite signs beyond the
/// checker tolerance. Scans a grid clustered at both ends of `(0, 1)`, then
/// refines the extreme cells by golden-section search.
pub fn falsify_neither(p: ParamPair, grid_size: usize, checker: &Checker) -> Result<Witnesses> {
    if !classify(p).in_neither {
        return Err(Error::RegionMismatch {
            a: p.a(),
            b: p.b(),
            claimed: Region::Neither,
        });
    }
    let tol = checker.tol;
    let gap = |r: f64| landen_gap(p, r, &checker.policy);
    let grid = r_grid(grid_size.max(8), 1e-9);
    let values = grid.iter().map(|&r| gap(r)).collect::<Result<Vec<f64>>>()?;

    let argext = |better: fn(f64, f64) -> bool| {
        let mut best = 0;
        for i in 1..values.len() {
            if better(values[i], values[best]) {
                best = i;
            }
        }
        best
    };
    let i_min = argext(|x, y| x < y);
    let i_max = argext(|x, y| x > y);

    let refine = |i: usize, sign: f64| -> Result<(f64, f64)> {
        if sign * values[i] > tol {
            return Ok((grid[i], values[i]));
        }
        let lo = if i == 0 { grid[0] * 0.5 } else { grid[i - 1] };
        let hi = if i + 1 == grid.len() {
            grid[i] + 0.5 * (1.0 - grid[i])
        } else {
            grid[i + 1]
        };
        golden_extremum(|r| gap(r).map(|g| sign * g), lo, hi, 60).map(|(r, v)| (r, sign * v))
    };

    let (r_minus, gap_minus) = refine(i_min, -1.0)?;
    let (r_plus, gap_plus) = refine(i_max, 1.0)?;
    if gap_minus < -tol && gap_plus > tol {
        return Ok(Witnesses {
            r_minus,
            r_plus,
            gap_minus,
            gap_plus,
        });
    }
    let limit_at_one = (ramanujan_r(p)? - LOG_16) / beta(p)?;
    Err(Error::WitnessNotFound(Box::new(WitnessFailure {
        a: p.a(),
        b: p.b(),
        max_gap: if gap_plus >= values[i_max] {
            (r_plus, gap_plus)
        } else {
            (grid[i_max], values[i_max])
        },
        min_gap: if gap_minus <= values[i_min] {
            (r_minus, gap_minus)
        } else {
            (grid[i_min], values[i_min])
        },
        limit_at_one,
        tolerance: tol,
    })))
}

/// Maximises `f` on `[lo, hi]`; returns the best point seen.
fn golden_extremum(f: impl Fn(f64) -> Result<f64>, mut lo: f64, mut hi: f64, steps: usize) -> Result<(f64, f64)> {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let mut best = if f1 >= f2 { (x1, f1) } else { (x2, f2) };
    for _ in 0..steps {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1)?;
            if f1 > best.1 {
                best = (x1, f1);
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2)?;
            if f2 > best.1 {
                best = (x2, f2);
            }
        }
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
    }
    Ok(best)
}

/// `n` seeded-uniform samples from `region ∩ [0.01, 3]²`, kept at least
/// `margin` (in the defining function) away from the region boundary, and
/// sorted by `(a, b)`.
pub fn sample_region(region: Region, n: usize, seed: u64, margin: f64) -> Vec<ParamPair> {
    sample_region_in(region, n, seed, margin, SAMPLE_BOX, SAMPLE_BOX)
}

/// [`sample_region`] on an explicit box `a_range × b_range`.
pub fn sample_region_in(
    region: Region,
    n: usize,
    seed: u64,
    margin: f64,
    a_range: (f64, f64),
    b_range: (f64, f64),
) -> Vec<ParamPair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let accept = |a: f64, b: f64| match region {
        Region::D1 => a * b <= 0.25 - margin,
        Region::D2 => 1.0 / a + 1.0 / b <= 4.0 - margin,
        Region::D3 => a + b <= 1.0 - margin,
        Region::Neither => a * b > 0.25 + margin && 1.0 / a + 1.0 / b > 4.0 + margin,
    };
    let mut out = Vec::with_capacity(n);
    let mut attempts = 0usize;
    let limit = 10_000 * n.max(1);
    while out.len() < n && attempts < limit {
        attempts += 1;
        let a = rng.gen_range(a_range.0..a_range.1);
        let b = rng.gen_range(b_range.0..b_range.1);
        if accept(a, b) {
            if let Ok(p) = ParamPair::new(a, b) {
                out.push(p);
            }
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).expect("samples are finite"));
    out
}
