//! Closed-form asymptotic approximations to the exact error probabilities.
//!
//! Out-of-regime arguments (for example [`high_purity_fit`] at small `n r²`)
//! return the formula value unchanged; flagging them is left to callers.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{check_purity, Error, Result};
use crate::special::ln_gamma;

fn require_copies(count: u32, name: &'static str) -> Result<f64> {
    if count == 0 {
        Err(Error::ZeroCopies(name))
    } else {
        Ok(f64::from(count))
    }
}

/// Program ports with infinitely many copies: `P? → 2 / (m + 2)`.
pub fn ua_program_limit(m: u32) -> Result<f64> {
    Ok(2.0 / (require_copies(m, "m")? + 2.0))
}

/// `(√π/4) Γ(1 + 1/m) / Γ(3/2 + 1/m)`, equal to `∫₀¹ x √(1 - x^{2m}) dx`.
fn program_limit_integral(m: f64) -> f64 {
    0.25 * std::f64::consts::PI.sqrt() * (ln_gamma(1.0 + 1.0 / m) - ln_gamma(1.5 + 1.0 / m)).exp()
}

/// Program ports with infinitely many copies:
/// `P^ME → ½ - (√π/4) Γ(1+1/m)/Γ(3/2+1/m)`.
///
/// With `subleading = Some(n)` the first correction in `1/n` is included,
/// which rescales the integral by `(1 - 1/n)`.
pub fn me_program_limit(m: u32, subleading: Option<u32>) -> Result<f64> {
    let m = require_copies(m, "m")?;
    let scale = match subleading {
        None => 1.0,
        Some(n) => 1.0 - 1.0 / require_copies(n, "n")?,
    };
    Ok(0.5 - program_limit_integral(m) * scale)
}

/// Data port with infinitely many copies: `P? → 1 / (n + 1)`.
pub fn ua_data_limit(n: u32) -> Result<f64> {
    Ok(1.0 / (require_copies(n, "n")? + 1.0))
}

/// Data port with infinitely many copies: `P^ME → 1 / (2(n + 1))`.
pub fn me_data_limit(n: u32) -> Result<f64> {
    Ok(0.5 / (require_copies(n, "n")? + 1.0))
}

/// `ζ(x) = Σ_{k≥0} (1 - √(1 - x^k))` for `0 ≤ x < 1`.
///
/// Terms are evaluated as `x^k / (1 + √(1 - x^k))`; the sum stops once a
/// term drops below `1e-15` (geometric tail below `1e-14` for `x ≤ 1/2`).
pub fn zeta(x: f64) -> f64 {
    zeta_partial(x, usize::MAX)
}

/// First `terms` terms of [`zeta`] (fewer if they become negligible).
pub fn zeta_partial(x: f64, terms: usize) -> f64 {
    assert!((0.0..1.0).contains(&x), "zeta needs 0 <= x < 1, got {x}");
    // k = 0 contributes 1 - √(1 - 1) = 1 (including x = 0).
    let mut sum = 1.0;
    let mut power = 1.0;
    for _ in 1..terms {
        power *= x;
        let term = power / (1.0 + (1.0 - power).sqrt());
        sum += term;
        if term < 1e-15 {
            break;
        }
    }
    sum
}

/// `(3/4) ζ(1/4) ≈ 0.8817`, the coefficient of the `1/n` error decay.
pub fn symmetric_error_constant() -> f64 {
    0.75 * zeta(0.25)
}

/// All ports with `n` copies, `n → ∞`: `P^ME ≈ (3/(4n)) ζ(1/4)`.
pub fn me_symmetric_asymptote(n: u32) -> Result<f64> {
    Ok(symmetric_error_constant() / require_copies(n, "n")?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    Leading,
    Subleading,
}

/// `n × 1 × n` with purity `r`, `n → ∞`:
/// leading `½ - r/3`, subleading `½ - r/3 + 1/(3 n r)`.
///
/// The subleading term is singular at `r = 0` and is only meaningful for
/// `r ≫ 1/n`.
pub fn mixed_asymptote(n: u32, r: f64, order: Order) -> Result<f64> {
    check_purity(r)?;
    let leading = 0.5 - r / 3.0;
    match order {
        Order::Leading => Ok(leading),
        Order::Subleading => {
            let n = require_copies(n, "n")?;
            if r <= 0.0 {
                return Err(Error::InvalidArgument(
                    "subleading mixed asymptote is singular at r = 0".into(),
                ));
            }
            Ok(leading + 1.0 / (3.0 * n * r))
        }
    }
}

/// Low-purity approximation `½ exp(-n r² / (2√3))`, intended for `r ≲ 1/√n`.
pub fn mixed_gaussian_fit(n: u32, r: f64) -> Result<f64> {
    check_purity(r)?;
    let n = require_copies(n, "n")?;
    Ok(0.5 * (-n * r * r / (2.0 * 3f64.sqrt())).exp())
}

/// High-purity approximation `(3/(4 n r²)) ζ(1/4)`, intended for large `n r²`.
pub fn high_purity_fit(n: u32, r: f64) -> Result<f64> {
    check_purity(r)?;
    let n = require_copies(n, "n")?;
    Ok(symmetric_error_constant() / (n * r * r))
}

/// Which asymptotic formula to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AsymptoticKind {
    UaProgramLimit,
    MeProgramLimit,
    MeProgramSubleading,
    UaDataLimit,
    MeDataLimit,
    MeSymmetric,
    MixedLeading,
    MixedSubleading,
    MixedGaussian,
    HighPurityFit,
}

/// Arguments an [`AsymptoticKind`] needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arity {
    pub n: bool,
    pub m: bool,
    pub r: bool,
}

impl AsymptoticKind {
    pub const ALL: [AsymptoticKind; 10] = [
        AsymptoticKind::UaProgramLimit,
        AsymptoticKind::MeProgramLimit,
        AsymptoticKind::MeProgramSubleading,
        AsymptoticKind::UaDataLimit,
        AsymptoticKind::MeDataLimit,
        AsymptoticKind::MeSymmetric,
        AsymptoticKind::MixedLeading,
        AsymptoticKind::MixedSubleading,
        AsymptoticKind::MixedGaussian,
        AsymptoticKind::HighPurityFit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AsymptoticKind::UaProgramLimit => "ua-program-limit",
            AsymptoticKind::MeProgramLimit => "me-program-limit",
            AsymptoticKind::MeProgramSubleading => "me-program-subleading",
            AsymptoticKind::UaDataLimit => "ua-data-limit",
            AsymptoticKind::MeDataLimit => "me-data-limit",
            AsymptoticKind::MeSymmetric => "me-symmetric",
            AsymptoticKind::MixedLeading => "mixed-leading",
            AsymptoticKind::MixedSubleading => "mixed-subleading",
            AsymptoticKind::MixedGaussian => "mixed-gaussian",
            AsymptoticKind::HighPurityFit => "high-purity-fit",
        }
    }

    pub fn arity(self) -> Arity {
        let (n, m, r) = match self {
            AsymptoticKind::UaProgramLimit | AsymptoticKind::MeProgramLimit => (false, true, false),
            AsymptoticKind::MeProgramSubleading => (true, true, false),
            AsymptoticKind::UaDataLimit
            | AsymptoticKind::MeDataLimit
            | AsymptoticKind::MeSymmetric => (true, false, false),
            AsymptoticKind::MixedLeading => (false, false, true),
            AsymptoticKind::MixedSubleading
            | AsymptoticKind::MixedGaussian
            | AsymptoticKind::HighPurityFit => (true, false, true),
        };
        Arity { n, m, r }
    }

    /// Evaluate, checking that every required argument is present.
    pub fn evaluate(self, n: Option<u32>, m: Option<u32>, r: Option<f64>) -> Result<f64> {
        let arity = self.arity();
        let missing = |what: &str| {
            Error::InvalidArgument(format!("asymptotic kind `{}` needs --{what}", self.name()))
        };
        let n = if arity.n { Some(n.ok_or_else(|| missing("n"))?) } else { n };
        let m = if arity.m { Some(m.ok_or_else(|| missing("m"))?) } else { m };
        let r = if arity.r { Some(r.ok_or_else(|| missing("r"))?) } else { r };
        let (n_, m_, r_) = (n.unwrap_or(0), m.unwrap_or(0), r.unwrap_or(0.0));
        match self {
            AsymptoticKind::UaProgramLimit => ua_program_limit(m_),
            AsymptoticKind::MeProgramLimit => me_program_limit(m_, None),
            AsymptoticKind::MeProgramSubleading => me_program_limit(m_, Some(n_)),
            AsymptoticKind::UaDataLimit => ua_data_limit(n_),
            AsymptoticKind::MeDataLimit => me_data_limit(n_),
            AsymptoticKind::MeSymmetric => me_symmetric_asymptote(n_),
            AsymptoticKind::MixedLeading => mixed_asymptote(n_, r_, Order::Leading),
            AsymptoticKind::MixedSubleading => mixed_asymptote(n_, r_, Order::Subleading),
            AsymptoticKind::MixedGaussian => mixed_gaussian_fit(n_, r_),
            AsymptoticKind::HighPurityFit => high_purity_fit(n_, r_),
        }
    }
}

impl fmt::Display for AsymptoticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AsymptoticKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown asymptotic kind `{s}`")))
    }
}
