//! Log-gamma, digamma, Beta and the Ramanujan constant `R(a, b)`.

use std::fmt;

use crate::error::{Error, Result};

/// Euler–Mascheroni constant.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082_402_431_04;

/// `log 16`, the value of `R(1/2, 1/2)`.
pub const LOG_16: f64 = 2.772_588_722_239_781_237_668_928_485_832_706_272_3;

/// A positive, finite parameter pair `(a, b)` of the zero-balanced function
/// `F(a, b; a + b; x)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ParamPair {
    a: f64,
    b: f64,
}

impl ParamPair {
    /// The point `(1/2, 1/2)`, where `F` reduces to `2K/π`.
    pub const EQUALITY: ParamPair = ParamPair { a: 0.5, b: 0.5 };

    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::domain(
                "ParamPair::new",
                format!("parameters must be finite, got ({a}, {b})"),
            ));
        }
        if a <= 0.0 || b <= 0.0 {
            return Err(Error::domain(
                "ParamPair::new",
                format!("parameters must be positive, got ({a}, {b})"),
            ));
        }
        Ok(ParamPair { a, b })
    }

    #[inline]
    pub fn a(&self) -> f64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> f64 {
        self.b
    }

    #[inline]
    pub fn sum(&self) -> f64 {
        self.a + self.b
    }

    #[inline]
    pub fn product(&self) -> f64 {
        self.a * self.b
    }

    pub fn swapped(&self) -> ParamPair {
        ParamPair { a: self.b, b: self.a }
    }
}

impl fmt::Display for ParamPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

// Lanczos approximation, g = 7, nine coefficients.
#[allow(clippy::excessive_precision)]
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `0.5 * log(2π)`
#[allow(clippy::excessive_precision)]
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_617_639_9;

/// Natural log of the gamma function for `x > 0`.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(
            "gamma_ln",
            format!("argument must be positive and finite, got {x}"),
        ));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x
        return Ok(lanczos_ln(x + 1.0) - x.ln());
    }
    Ok(lanczos_ln(x))
}

fn lanczos_ln(x: f64) -> f64 {
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * t.ln() - t + acc.ln()
}

/// Digamma `Ψ(x) = d/dx log Γ(x)` for `x > 0`.
///
/// The argument is shifted upward to at least 10 with `Ψ(x) = Ψ(x + 1) - 1/x`,
/// then the asymptotic series is summed through the `B₁₄` term.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(
            "digamma",
            format!("argument must be positive and finite, got {x}"),
        ));
    }
    let mut x = x;
    let mut shift = 0.0;
    while x < 10.0 {
        shift += 1.0 / x;
        x += 1.0;
    }
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let tail = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2
                        * (1.0 / 252.0
                            - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0 - inv2 * (691.0 / 32_760.0 - inv2 / 12.0))))));
    Ok(x.ln() - 0.5 * inv - tail - shift)
}

/// The Beta function `B(a, b) = Γ(a)Γ(b)/Γ(a + b)`.
///
/// Evaluated through log-gamma so large arguments do not overflow. The two
/// parameters are ordered before evaluation, so `beta(a, b)` and `beta(b, a)`
/// are bitwise identical.
pub fn beta(p: ParamPair) -> Result<f64> {
    let (lo, hi) = if p.a <= p.b { (p.a, p.b) } else { (p.b, p.a) };
    Ok((gamma_ln(lo)? + gamma_ln(hi)? - gamma_ln(lo + hi)?).exp())
}

/// Ramanujan's constant `R(a, b) = -Ψ(a) - Ψ(b) - 2γ`.
pub fn ramanujan_r(p: ParamPair) -> Result<f64> {
    let (lo, hi) = if p.a <= p.b { (p.a, p.b) } else { (p.b, p.a) };
    Ok(-digamma(lo)? - digamma(hi)? - 2.0 * EULER_GAMMA)
}
