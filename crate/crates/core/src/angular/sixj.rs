//! Wigner 6-j symbols from the Racah single-sum formula.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use twofloat::TwoFloat;

use super::exact::{big_ratio, factorial, ExactRational};
use super::halfint::{triangle, HalfInt};
use crate::special::ln_factorial;

/// Racah-sum bookkeeping shared by the exact and floating-point paths.
/// All fields are plain integers (the half-integer sums are whole).
struct RacahSum {
    /// The four triads, each as `(a, b, c)` in doubled units.
    triads: [(u32, u32, u32); 4],
    alpha: [u32; 4],
    beta: [u32; 3],
    t_min: u32,
    t_max: u32,
}

impl RacahSum {
    fn new(j: [HalfInt; 6]) -> Option<Self> {
        let [j1, j2, j3, j4, j5, j6] = j;
        let triads = [(j1, j2, j3), (j1, j5, j6), (j4, j2, j6), (j4, j5, j3)];
        if !triads.iter().all(|&(a, b, c)| triangle(a, b, c)) {
            return None;
        }
        let tw = |x: HalfInt| x.twice();
        let alpha = triads.map(|(a, b, c)| (tw(a) + tw(b) + tw(c)) / 2);
        let beta = [
            (tw(j1) + tw(j2) + tw(j4) + tw(j5)) / 2,
            (tw(j2) + tw(j3) + tw(j5) + tw(j6)) / 2,
            (tw(j3) + tw(j1) + tw(j6) + tw(j4)) / 2,
        ];
        let t_min = *alpha.iter().max().unwrap();
        let t_max = *beta.iter().min().unwrap();
        debug_assert!(t_min <= t_max);
        Some(RacahSum {
            triads: triads.map(|(a, b, c)| (tw(a), tw(b), tw(c))),
            alpha,
            beta,
            t_min,
            t_max,
        })
    }

    /// Factorial arguments of `Δ²(a,b,c) = (a+b-c)!(a-b+c)!(-a+b+c)!/(a+b+c+1)!`.
    fn delta_args(&self) -> impl Iterator<Item = ([u32; 3], u32)> + '_ {
        self.triads.iter().map(|&(a, b, c)| {
            (
                [(a + b - c) / 2, (a + c - b) / 2, (b + c - a) / 2],
                (a + b + c) / 2 + 1,
            )
        })
    }

    /// Ratio of consecutive terms, `term(t+1) / term(t) = -num / den`.
    fn step(&self, t: u32) -> (u64, u64) {
        let num = self
            .beta
            .iter()
            .fold(u64::from(t + 2), |acc, &b| acc * u64::from(b - t));
        let den = self
            .alpha
            .iter()
            .fold(1u64, |acc, &a| acc * u64::from(t + 1 - a));
        (num, den)
    }

    fn exact(&self) -> ExactRational {
        // Scale every term by M = Π(t_max-α)! Π(β-t_min)! so that all terms are integers.
        let mut scale = BigUint::one();
        for &a in &self.alpha {
            scale *= factorial(self.t_max - a);
        }
        for &b in &self.beta {
            scale *= factorial(b - self.t_min);
        }
        let mut term = factorial(self.t_min + 1).clone();
        for &a in &self.alpha {
            term *= factorial(self.t_max - a);
            term /= factorial(self.t_min - a);
        }
        let mut sum = BigInt::zero();
        let mut negative = self.t_min % 2 == 1;
        for t in self.t_min..=self.t_max {
            if negative {
                sum -= BigInt::from(term.clone());
            } else {
                sum += BigInt::from(term.clone());
            }
            if t < self.t_max {
                let (num, den) = self.step(t);
                term *= num;
                term /= den;
                negative = !negative;
            }
        }
        let mut delta_num = BigUint::one();
        let mut delta_den = BigUint::one();
        for (nums, den) in self.delta_args() {
            for k in nums {
                delta_num *= factorial(k);
            }
            delta_den *= factorial(den);
        }
        ExactRational::new(
            BigRational::new(sum, BigInt::from(scale)),
            big_ratio(delta_num, delta_den),
        )
    }

    /// Floating-point evaluation, with the alternating sum carried in
    /// double-double precision. Returns `None` when cancellation could still
    /// cost more than ~1e-14 relative accuracy.
    fn fast(&self) -> Option<f64> {
        const MAX_CANCELLATION: f64 = 1e16;
        let lf = |k: u32| ln_factorial(u64::from(k));
        let mut ln_pref = lf(self.t_min + 1);
        for &a in &self.alpha {
            ln_pref -= lf(self.t_min - a);
        }
        for &b in &self.beta {
            ln_pref -= lf(b - self.t_min);
        }
        for (nums, den) in self.delta_args() {
            ln_pref += 0.5 * (nums.iter().map(|&k| lf(k)).sum::<f64>() - lf(den));
        }
        let mut rho = TwoFloat::from(1.0);
        let mut sum = rho;
        let mut abs_sum = 1.0f64;
        for t in self.t_min..self.t_max {
            let (num, den) = self.step(t);
            rho = rho * -(num as f64) / den as f64;
            sum += rho;
            abs_sum += rho.hi().abs();
        }
        let sum = sum.hi() + sum.lo();
        if !abs_sum.is_finite() || abs_sum > MAX_CANCELLATION * sum.abs() {
            return None;
        }
        let sign = if self.t_min % 2 == 1 { -1.0 } else { 1.0 };
        Some(sign * sum * ln_pref.exp())
    }
}

/// Exact Wigner 6-j symbol
/// `{ j1 j2 j3 ; j4 j5 j6 }`.
///
/// Returns exact zero when any of the triads `(j1 j2 j3)`, `(j1 j5 j6)`,
/// `(j4 j2 j6)`, `(j4 j5 j3)` violates the triangle or parity rule. A zero
/// result can also be "accidental" for admissible arguments; use
/// [`sixj_admissible`] to tell the two apart.
pub fn wigner6j(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j4: HalfInt,
    j5: HalfInt,
    j6: HalfInt,
) -> ExactRational {
    match RacahSum::new([j1, j2, j3, j4, j5, j6]) {
        Some(sum) => sum.exact(),
        None => ExactRational::zero(),
    }
}

/// 6-j symbol as a float. Evaluates the Racah sum in floating point when it
/// is well conditioned and falls back to the exact evaluation otherwise.
pub fn wigner6j_f64(
    j1: HalfInt,
    j2: HalfInt,
    j3: HalfInt,
    j4: HalfInt,
    j5: HalfInt,
    j6: HalfInt,
) -> f64 {
    match RacahSum::new([j1, j2, j3, j4, j5, j6]) {
        Some(sum) => sum.fast().unwrap_or_else(|| sum.exact().to_f64()),
        None => 0.0,
    }
}

/// Whether all four triads of the 6-j symbol satisfy the coupling rules.
pub fn sixj_admissible(j: [HalfInt; 6]) -> bool {
    RacahSum::new(j).is_some()
}
