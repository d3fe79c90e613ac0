//! Pure-state program and data loading: optimal unambiguous (inconclusive
//! probability) and minimum-error probabilities.
//!
//! Both effective states are uniform mixtures over symmetric subspaces whose
//! total-angular-momentum bases pair up one-to-one (Jordan bases), so each
//! figure of merit is a weighted sum of two-pure-state problems, one per
//! total spin `J`.

use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::angular::{big_ratio, binomial, jordan_overlap_f64, HalfInt, MAX_TOTAL_COPIES};
use crate::error::{Error, Result};

/// Copy counts at the program port A, the data port B, and the program port C.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PortLoad {
    pub n_a: u32,
    pub n_b: u32,
    pub n_c: u32,
}

impl PortLoad {
    pub fn new(n_a: u32, n_b: u32, n_c: u32) -> Result<Self> {
        for (count, name) in [(n_a, "n_a"), (n_b, "n_b"), (n_c, "n_c")] {
            if count == 0 {
                return Err(Error::ZeroCopies(name));
            }
        }
        Ok(PortLoad { n_a, n_b, n_c })
    }

    /// `n` copies in each program port, `m` in the data port.
    pub fn symmetric(n: u32, m: u32) -> Result<Self> {
        Self::new(n, m, n)
    }

    pub fn total(&self) -> u64 {
        u64::from(self.n_a) + u64::from(self.n_b) + u64::from(self.n_c)
    }

    /// The machine is symmetric under exchanging the program ports; the
    /// closed forms assume `n_a >= n_c`.
    pub fn canonical(self) -> Self {
        if self.n_a >= self.n_c {
            self
        } else {
            PortLoad {
                n_a: self.n_c,
                n_b: self.n_b,
                n_c: self.n_a,
            }
        }
    }

    pub fn swapped(self) -> Self {
        PortLoad {
            n_a: self.n_c,
            n_b: self.n_b,
            n_c: self.n_a,
        }
    }

    /// Rank of the first hypothesis state, `(n_a + n_b + 1)(n_c + 1)`.
    pub fn d1(&self) -> u64 {
        (u64::from(self.n_a) + u64::from(self.n_b) + 1) * (u64::from(self.n_c) + 1)
    }

    /// Rank of the second hypothesis state, `(n_a + 1)(n_b + n_c + 1)`.
    pub fn d2(&self) -> u64 {
        (u64::from(self.n_a) + 1) * (u64::from(self.n_b) + u64::from(self.n_c) + 1)
    }

    /// Dimension of the fully symmetric subspace of all ports.
    pub fn d_abc(&self) -> u64 {
        self.total() + 1
    }

    fn check_exact_limit(&self) -> Result<()> {
        if self.total() > u64::from(MAX_TOTAL_COPIES) {
            return Err(Error::TooManyCopies {
                total: self.total(),
                limit: u64::from(MAX_TOTAL_COPIES),
            });
        }
        Ok(())
    }
}

/// Weight of one `(J, M)` pair and the conditional priors of the two
/// hypotheses inside it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PairPriors {
    pub p: f64,
    pub pi1: f64,
    pub pi2: f64,
}

/// One Jordan pair: total spin, priors, and overlap `c_J` of the two states.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct JordanPair {
    pub total: HalfInt,
    pub priors: PairPriors,
    pub overlap: f64,
}

impl JordanPair {
    /// Number of `M` values.
    pub fn degeneracy(&self) -> f64 {
        f64::from(self.total.dim())
    }
}

/// All Jordan pairs of a (canonicalized) load, with overlaps from 6-j symbols.
///
/// For `J` below the smallest spin reachable by the first hypothesis only the
/// second one has support (`pi1 = 0`, overlap 0).
pub fn jordan_pairs(load: PortLoad) -> Result<Vec<JordanPair>> {
    let load = load.canonical();
    load.check_exact_limit()?;
    let (na, nb, nc) = (load.n_a, load.n_b, load.n_c);
    let (d1, d2) = (load.d1() as f64, load.d2() as f64);
    let ja = HalfInt::spin_of(na);
    let jb = HalfInt::spin_of(nb);
    let jc = HalfInt::spin_of(nc);
    let jab = HalfInt::spin_of(na + nb);
    let jbc = HalfInt::spin_of(nb + nc);
    let j1_min = na + nb - nc;
    let j2_min = (nb + nc).abs_diff(na);
    let j_max = na + nb + nc;
    let shared_p = 0.5 * (1.0 / d1 + 1.0 / d2);
    Ok((j2_min..=j_max)
        .step_by(2)
        .map(|tj| {
            let total = HalfInt::from_twice(tj);
            if tj < j1_min {
                JordanPair {
                    total,
                    priors: PairPriors {
                        p: 0.5 / d2,
                        pi1: 0.0,
                        pi2: 1.0,
                    },
                    overlap: 0.0,
                }
            } else {
                JordanPair {
                    total,
                    priors: PairPriors {
                        p: shared_p,
                        pi1: 1.0 / (2.0 * shared_p * d1),
                        pi2: 1.0 / (2.0 * shared_p * d2),
                    },
                    overlap: jordan_overlap_f64(ja, jb, jc, jab, jbc, total).abs(),
                }
            }
        })
        .collect())
}

/// Exact inconclusive probability for `n × m × n`: `1 - nm / ((n+1)(m+2))`.
pub fn ua_symmetric_exact(n: u32, m: u32) -> Result<BigRational> {
    PortLoad::symmetric(n, m)?;
    let (n, m) = (u64::from(n), u64::from(m));
    let closed = BigRational::one()
        - BigRational::new((n * m).into(), ((n + 1) * (m + 2)).into());
    if n + m <= u64::from(MAX_TOTAL_COPIES) {
        let sum = ua_symmetric_block_sum(n as u32, m as u32)?;
        if closed != sum {
            return Err(Error::SelfCheck {
                closed: closed.to_f64().unwrap_or(f64::NAN),
                block_sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    Ok(closed)
}

/// The inconclusive probability as an explicit sum over Jordan pairs,
/// `Σ_k (m+2k+1) C(n,k)/C(n+m,n-k) / ((n+1)(n+m+1))`, in exact arithmetic.
pub fn ua_symmetric_block_sum(n: u32, m: u32) -> Result<BigRational> {
    let load = PortLoad::symmetric(n, m)?;
    load.check_exact_limit()?;
    let norm = BigRational::from_integer(
        ((u64::from(n) + 1) * (u64::from(n) + u64::from(m) + 1)).into(),
    );
    let mut sum = BigRational::from_integer(0.into());
    for k in 0..=n {
        let overlap = big_ratio(binomial(n, k), binomial(n + m, n - k));
        sum += overlap * BigRational::from_integer((m + 2 * k + 1).into());
    }
    Ok(sum / norm)
}

/// Optimal inconclusive probability for `n` copies per program port and `m`
/// data copies.
pub fn ua_symmetric(n: u32, m: u32) -> Result<f64> {
    Ok(ua_symmetric_exact(n, m)?.to_f64().unwrap_or(f64::NAN))
}

/// Overlaps `c_k = n! (m+k)! / ((n+m)! k!)` for `k = 0..=n`, computed as
/// running products of factors below one so any `m` is safe.
pub fn symmetric_overlaps(n: u32, m: u32) -> Vec<f64> {
    let mut c = vec![0.0; n as usize + 1];
    c[n as usize] = 1.0;
    for k in (1..=n).rev() {
        c[k as usize - 1] = c[k as usize] * f64::from(k) / (f64::from(m) + f64::from(k));
    }
    c
}

/// Optimal error probability for `n` copies per program port and `m` data copies.
pub fn me_symmetric(n: u32, m: u32) -> Result<f64> {
    PortLoad::symmetric(n, m)?;
    let norm = (f64::from(n) + 1.0) * (f64::from(n) + f64::from(m) + 1.0);
    let sum: f64 = symmetric_overlaps(n, m)
        .iter()
        .enumerate()
        .map(|(k, &c)| {
            let dim = f64::from(m) + 2.0 * k as f64 + 1.0;
            dim * ((1.0 - c) * (1.0 + c)).sqrt()
        })
        .sum();
    Ok(0.5 * (1.0 - sum / norm))
}

/// `C(na+nb-nc+k, nb) C(nb+k, nb) / (C(na+nb, nb) C(nc+nb, nb))`, the squared
/// overlap of the Jordan pair at `J = (na+nb-nc)/2 + k`.
fn asymmetric_overlap_sq(load: PortLoad, k: u32) -> f64 {
    let (na, nb, nc) = (load.n_a, load.n_b, load.n_c);
    let num = binomial(na + nb - nc + k, nb) * binomial(nb + k, nb);
    let den = binomial(na + nb, nb) * binomial(nc + nb, nb);
    big_ratio(num, den).to_f64().unwrap_or(f64::NAN)
}

/// Optimal inconclusive probability for an arbitrary load.
///
/// The closed form is cross-checked against the sum of per-pair optima built
/// from 6-j overlaps; a disagreement or a violated feasibility condition is
/// reported as an error (both indicate a bug, not a property of the input).
pub fn ua_asymmetric(load: PortLoad) -> Result<f64> {
    let load = load.canonical();
    load.check_exact_limit()?;
    let (d1, d2) = (load.d1() as f64, load.d2() as f64);
    let base = (load.n_a + load.n_b - load.n_c) as f64;
    let head = 0.5 * (1.0 / d1.sqrt() - 1.0 / d2.sqrt()).powi(2) * load.d_abc() as f64;
    let tail: f64 = (0..=load.n_c)
        .map(|k| (base + 2.0 * f64::from(k) + 1.0) * asymmetric_overlap_sq(load, k).sqrt())
        .sum();
    let closed = head + tail / (d1 * d2).sqrt();

    let block_sum = ua_block_sum(load)?;
    if (closed - block_sum).abs() > 1e-10 {
        return Err(Error::SelfCheck { closed, block_sum });
    }
    Ok(closed)
}

/// `Σ_J p_J (2J+1) P?_J` over Jordan pairs, with the optimal two-state
/// inconclusive probability `2 √(π1 π2) c_J` inside the feasibility window
/// and 1 on the fully symmetric block.
fn ua_block_sum(load: PortLoad) -> Result<f64> {
    let j_max = load.total() as u32;
    let mut sum = 0.0;
    for pair in jordan_pairs(load)? {
        let PairPriors { p, pi1, pi2 } = pair.priors;
        if pi1 == 0.0 {
            continue;
        }
        let inconclusive = if pair.total.twice() == j_max {
            1.0
        } else {
            let c2 = pair.overlap * pair.overlap;
            let (lo, hi) = (c2 / (1.0 + c2), 1.0 / (1.0 + c2));
            if pi1 < lo - 1e-12 || pi1 > hi + 1e-12 {
                return Err(Error::Feasibility {
                    twice_j: pair.total.twice(),
                    overlap_sq: c2,
                    prior: pi1,
                });
            }
            2.0 * (pi1 * pi2).sqrt() * pair.overlap
        };
        sum += p * pair.degeneracy() * inconclusive;
    }
    Ok(sum)
}

/// Optimal error probability for an arbitrary load.
pub fn me_asymmetric(load: PortLoad) -> Result<f64> {
    let load = load.canonical();
    load.check_exact_limit()?;
    let (d1, d2) = (load.d1() as f64, load.d2() as f64);
    let base = (load.n_a + load.n_b - load.n_c) as f64;
    let mix = 4.0 * d1 * d2 / ((d1 + d2) * (d1 + d2));
    let sum: f64 = (0..=load.n_c)
        .map(|k| {
            let c2 = asymmetric_overlap_sq(load, k);
            (base + 2.0 * f64::from(k) + 1.0) * (1.0 - mix * c2).max(0.0).sqrt()
        })
        .sum();
    Ok(0.25 * (1.0 + d1 / d2 - (d1 + d2) / (d1 * d2) * sum))
}
