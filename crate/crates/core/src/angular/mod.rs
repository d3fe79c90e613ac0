//! Half-integer angular momentum arithmetic, 6-j symbols, recoupling
//! overlaps, and multiplicities of the spin-`j` irreps of `n` qubits.

mod exact;
mod halfint;
mod sixj;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub use exact::{binomial, factorial, ExactRational, FACTORIAL_LIMIT, MAX_TOTAL_COPIES};
pub(crate) use exact::big_ratio;
pub use halfint::{triangle, HalfInt};
pub use sixj::{sixj_admissible, wigner6j, wigner6j_f64};

use crate::special::ln_binomial;

fn jordan_args_admissible(
    ja: HalfInt,
    jb: HalfInt,
    jc: HalfInt,
    jab: HalfInt,
    jbc: HalfInt,
    total: HalfInt,
) -> bool {
    triangle(ja, jb, jab)
        && triangle(jb, jc, jbc)
        && triangle(jab, jc, total)
        && triangle(ja, jbc, total)
}

fn jordan_sign(ja: HalfInt, jb: HalfInt, jc: HalfInt, total: HalfInt) -> i32 {
    let phase = (ja.twice() + jb.twice() + jc.twice() + total.twice()) / 2;
    if phase.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Overlap `⟨(ja jb) jab, jc; J M | ja, (jb jc) jbc; J M⟩` between the two
/// coupling orders of three spins. Independent of `M`.
///
/// Zero whenever a coupling constraint fails.
pub fn jordan_overlap(
    ja: HalfInt,
    jb: HalfInt,
    jc: HalfInt,
    jab: HalfInt,
    jbc: HalfInt,
    total: HalfInt,
) -> ExactRational {
    if !jordan_args_admissible(ja, jb, jc, jab, jbc, total) {
        return ExactRational::zero();
    }
    let sixj = wigner6j(ja, jb, jab, jc, total, jbc);
    let dims = BigRational::from_integer((u64::from(jab.dim()) * u64::from(jbc.dim())).into());
    let v = sixj.mul_sqrt(&dims);
    if jordan_sign(ja, jb, jc, total) < 0 {
        v.negate()
    } else {
        v
    }
}

/// Floating-point [`jordan_overlap`], used to fill recoupling matrices.
pub fn jordan_overlap_f64(
    ja: HalfInt,
    jb: HalfInt,
    jc: HalfInt,
    jab: HalfInt,
    jbc: HalfInt,
    total: HalfInt,
) -> f64 {
    if !jordan_args_admissible(ja, jb, jc, jab, jbc, total) {
        return 0.0;
    }
    let sixj = wigner6j_f64(ja, jb, jab, jc, total, jbc);
    let dims = (f64::from(jab.dim()) * f64::from(jbc.dim())).sqrt();
    f64::from(jordan_sign(ja, jb, jc, total)) * dims * sixj
}

/// `C(n, k) / C(n + m, n - k)`: the overlap between the two recoupled
/// fully-symmetric states of `n + m` and `n` copies at total spin `J = m/2 + k`.
///
/// # Panics
/// If `k > n`.
pub fn symmetric_overlap(n: u32, m: u32, k: u32) -> ExactRational {
    assert!(k <= n, "symmetric_overlap: k = {k} outside 0..={n}");
    ExactRational::from_ratio(big_ratio(binomial(n, k), binomial(n + m, n - k)))
}

/// Number `ν_j^n` of equivalent spin-`j` irreps in `n` qubits,
/// `C(n, n/2 - j) (2j + 1) / (n/2 + j + 1)`.
///
/// Zero when `2j > n` or `2j` and `n` differ in parity.
pub fn multiplicity(n: u32, j: HalfInt) -> BigUint {
    let tj = j.twice();
    if tj > n || !(n - tj).is_multiple_of(2) {
        return BigUint::from(0u32);
    }
    let lower = (n - tj) / 2;
    let upper = (n + tj) / 2 + 1;
    binomial(n, lower) * j.dim() / upper
}

/// [`multiplicity`] as a float, valid for any `n`.
pub fn multiplicity_f64(n: u32, j: HalfInt) -> f64 {
    let tj = j.twice();
    if tj > n || !(n - tj).is_multiple_of(2) {
        return 0.0;
    }
    if n <= MAX_TOTAL_COPIES {
        return multiplicity(n, j).to_f64().unwrap_or(f64::INFINITY);
    }
    let lower = u64::from((n - tj) / 2);
    let upper = u64::from((n + tj) / 2 + 1);
    (ln_binomial(u64::from(n), lower) + f64::from(j.dim()).ln() - (upper as f64).ln()).exp()
}

/// Spins `j` carried by `n` qubits: `n/2, n/2 - 1, …` down to 0 or 1/2, ascending.
pub fn spins_of(n: u32) -> impl DoubleEndedIterator<Item = HalfInt> {
    (0..=n / 2).map(move |k| HalfInt::from_twice(n % 2 + 2 * k))
}
