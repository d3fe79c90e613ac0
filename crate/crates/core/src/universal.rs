//! The fully universal machine: purity averaged over a prior.
//!
//! Each hypothesis is an average over the two unknown states, so replacing
//! the fixed-purity coefficients `C_j^N(r)` by their prior averages
//! `⟨C_j^N⟩` gives the averaged states without changing the block structure.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::angular::{big_ratio, factorial, HalfInt, MAX_TOTAL_COPIES};
use crate::error::{check_purity, Error, Result};
use crate::mixed::{self, BlockStructure};
use crate::par::Execution;
use crate::special::incomplete_beta_half;

/// Purity prior of the universal machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prior {
    /// `3 r² dr`
    HardSphere,
    /// `(4/π) r² / √(1-r²) dr`
    Bures,
    /// `(√(1+r) - √(1-r))² / ((π-2) √(1-r²)) dr`
    Chernoff,
}

impl Prior {
    pub const ALL: [Prior; 3] = [Prior::HardSphere, Prior::Bures, Prior::Chernoff];

    /// Normalized purity density `w(r)` on `[0, 1)`.
    pub fn density(self, r: f64) -> f64 {
        match self {
            Prior::HardSphere => 3.0 * r * r,
            Prior::Bures => 4.0 / PI * r * r / (1.0 - r * r).sqrt(),
            Prior::Chernoff => {
                let s = (1.0 + r).sqrt() - (1.0 - r).sqrt();
                s * s / ((PI - 2.0) * (1.0 - r * r).sqrt())
            }
        }
    }

    pub fn average_coeff(self, n_total: u32, j: HalfInt) -> Result<f64> {
        match self {
            Prior::HardSphere => avg_coeff_hard_sphere(n_total, j),
            Prior::Bures => avg_coeff_bures(n_total, j),
            Prior::Chernoff => avg_coeff_chernoff(n_total, j),
        }
    }
}

impl fmt::Display for Prior {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prior::HardSphere => "hard-sphere",
            Prior::Bures => "bures",
            Prior::Chernoff => "chernoff",
        })
    }
}

impl FromStr for Prior {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hard-sphere" => Ok(Prior::HardSphere),
            "bures" => Ok(Prior::Bures),
            "chernoff" => Ok(Prior::Chernoff),
            other => Err(Error::InvalidArgument(format!("unknown prior `{other}`"))),
        }
    }
}

/// Supplier of the block coefficients `C_j^N`: either a fixed purity or a
/// prior average.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoeffSource {
    FixedPurity(f64),
    HardSphere,
    Bures,
    Chernoff,
}

impl CoeffSource {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CoeffSource::FixedPurity(r) => check_purity(r),
            _ => Ok(()),
        }
    }

    pub fn coeff(&self, n_total: u32, j: HalfInt) -> Result<f64> {
        match *self {
            CoeffSource::FixedPurity(r) => mixed::coeff(n_total, j, r),
            CoeffSource::HardSphere => avg_coeff_hard_sphere(n_total, j),
            CoeffSource::Bures => avg_coeff_bures(n_total, j),
            CoeffSource::Chernoff => avg_coeff_chernoff(n_total, j),
        }
    }
}

impl From<Prior> for CoeffSource {
    fn from(p: Prior) -> Self {
        match p {
            Prior::HardSphere => CoeffSource::HardSphere,
            Prior::Bures => CoeffSource::Bures,
            Prior::Chernoff => CoeffSource::Chernoff,
        }
    }
}

/// Integer parts `(N/2 + j, N/2 - j)`, or `None` for spins not carried by `N` qubits.
fn split(n_total: u32, j: HalfInt) -> Result<Option<(u32, u32)>> {
    if n_total > MAX_TOTAL_COPIES {
        return Err(Error::TooManyCopies {
            total: u64::from(n_total),
            limit: u64::from(MAX_TOTAL_COPIES),
        });
    }
    let tj = j.twice();
    if tj > n_total || !(n_total - tj).is_multiple_of(2) {
        return Ok(None);
    }
    Ok(Some(((n_total + tj) / 2, (n_total - tj) / 2)))
}

/// `⟨C_j^N⟩ = 6 Γ(N/2+j+2) Γ(N/2-j+1) / Γ(N+4)`, exact in rationals
/// before the final conversion.
pub fn avg_coeff_hard_sphere(n_total: u32, j: HalfInt) -> Result<f64> {
    let Some((p, q)) = split(n_total, j)? else {
        return Ok(0.0);
    };
    let num = factorial(p + 1) * factorial(q) * 6u32;
    let den = factorial(n_total + 3).clone();
    Ok(big_ratio(num, den).to_f64().unwrap_or(f64::NAN))
}

/// `⟨C_j^N⟩ = (4/π) Γ(N/2+j+3/2) Γ(N/2-j+1/2) / Γ(N+3)`.
///
/// With `p = N/2 + j`, `q = N/2 - j` the factors of π cancel and this is the
/// rational `4 (2p+2)! (2q)! / (4^{N+1} (p+1)! q! (N+2)!)`.
pub fn avg_coeff_bures(n_total: u32, j: HalfInt) -> Result<f64> {
    let Some((p, q)) = split(n_total, j)? else {
        return Ok(0.0);
    };
    let num = factorial(2 * p + 2) * factorial(2 * q) * 4u32;
    let den = factorial(p + 1)
        * factorial(q)
        * factorial(n_total + 2)
        * num_bigint::BigUint::from(4u32).pow(n_total + 1);
    let v: BigRational = big_ratio(num, den);
    Ok(v.to_f64().unwrap_or(f64::NAN))
}

/// `⟨C_j^N⟩ = 2/((π-2)(2j+1)) Σ_{μ=-j}^{j} [B_{1/2}((N+1-2μ)/2, (N+1+2μ)/2)
/// - 2 B_{1/2}((N-2μ+2)/2, (N+2μ+2)/2)]`.
pub fn avg_coeff_chernoff(n_total: u32, j: HalfInt) -> Result<f64> {
    if split(n_total, j)?.is_none() {
        return Ok(0.0);
    }
    let n = f64::from(n_total);
    let tj = j.twice() as i64;
    let mut sum = 0.0;
    // μ = tm / 2 with tm = -2j, -2j+2, …, 2j
    for tm in (-tj..=tj).step_by(2) {
        let mu2 = tm as f64; // 2μ
        sum += incomplete_beta_half((n + 1.0 - mu2) / 2.0, (n + 1.0 + mu2) / 2.0)?;
        sum -= 2.0 * incomplete_beta_half((n - mu2 + 2.0) / 2.0, (n + mu2 + 2.0) / 2.0)?;
    }
    Ok(2.0 / ((PI - 2.0) * f64::from(j.dim())) * sum)
}

/// Optimal error probability of the fully universal machine.
pub fn me_universal(n: u32, m: u32, prior: Prior) -> Result<f64> {
    mixed::me_mixed(n, m, prior.into())
}

/// Error probabilities for all three priors, sharing one block structure.
pub fn me_universal_all(n: u32, m: u32, exec: Execution) -> Result<[f64; 3]> {
    let structure = BlockStructure::with_execution(n, m, exec)?;
    let mut out = [0.0; 3];
    for (slot, prior) in out.iter_mut().zip(Prior::ALL) {
        *slot = structure.error_probability(&prior.into(), exec)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed::CoeffTable;

    fn h(t: u32) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn single_qubit_average_is_half() {
        for prior in Prior::ALL {
            let v = prior.average_coeff(1, h(1)).unwrap();
            assert!((v - 0.5).abs() < 1e-15, "{prior}: {v}");
        }
    }

    #[test]
    fn hard_sphere_two_qubit_triplet() {
        assert!((avg_coeff_hard_sphere(2, h(2)).unwrap() - 0.3).abs() < 1e-16);
    }

    #[test]
    fn unit_trace_all_priors() {
        for source in [CoeffSource::HardSphere, CoeffSource::Bures, CoeffSource::Chernoff] {
            let totals: Vec<u32> = (1..=12).collect();
            let table = CoeffTable::build(&source, &totals).unwrap();
            for n in totals {
                assert!((table.unit_trace(n) - 1.0).abs() < 1e-12, "{source:?} N={n}");
            }
            assert!(table.min_entry() >= 0.0);
        }
    }

    #[test]
    fn prior_names_round_trip() {
        for p in Prior::ALL {
            assert_eq!(p.to_string().parse::<Prior>().unwrap(), p);
        }
        assert!("uniform".parse::<Prior>().is_err());
    }

    #[test]
    fn zero_for_absent_spin() {
        assert_eq!(avg_coeff_chernoff(4, h(1)).unwrap(), 0.0);
        assert_eq!(avg_coeff_bures(4, h(6)).unwrap(), 0.0);
    }
}
