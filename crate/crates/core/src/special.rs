//! Scalar special functions: log-factorials, log-gamma, and the incomplete
//! beta function at `x = 1/2`.

use std::f64::consts::{LN_2, PI};
use std::sync::OnceLock;

use crate::error::{Error, Result};

const LN_FACTORIAL_TABLE: usize = 1 << 14;

static LN_FACTORIALS: OnceLock<Vec<f64>> = OnceLock::new();

fn ln_factorial_table() -> &'static [f64] {
    LN_FACTORIALS.get_or_init(|| {
        // Kahan-compensated running sum of ln k.
        let mut table = Vec::with_capacity(LN_FACTORIAL_TABLE + 1);
        let (mut sum, mut comp) = (0.0f64, 0.0f64);
        table.push(0.0);
        for k in 1..=LN_FACTORIAL_TABLE {
            let y = (k as f64).ln() - comp;
            let t = sum + y;
            comp = (t - sum) - y;
            sum = t;
            table.push(sum);
        }
        table
    })
}

/// `ln k!`.
pub fn ln_factorial(k: u64) -> f64 {
    let table = ln_factorial_table();
    match table.get(k as usize) {
        Some(v) => *v,
        None => ln_gamma(k as f64 + 1.0),
    }
}

/// `ln C(n, k)`; `-inf` when `k > n`.
pub fn ln_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// `ln Γ(x)` at an integer or half-integer argument `x = twice / 2 > 0`,
/// using `Γ(k + 1/2) = (2k)! √π / (4^k k!)`.
pub fn ln_gamma_half(twice: u64) -> f64 {
    assert!(twice > 0, "Γ has a pole at 0");
    if twice.is_multiple_of(2) {
        ln_factorial(twice / 2 - 1)
    } else {
        let k = (twice - 1) / 2;
        ln_factorial(2 * k) - ln_factorial(k) - 2.0 * k as f64 * LN_2 + 0.5 * PI.ln()
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for real `x > 0` (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    if x < 0.5 {
        // reflection
        return (PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// `Γ(x)` for real `x > 0`.
pub fn gamma(x: f64) -> f64 {
    ln_gamma(x).exp()
}

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma_any(a) + ln_gamma_any(b) - ln_gamma_any(a + b)
}

/// Uses the exact factorial route when `x` is an integer or half-integer.
fn ln_gamma_any(x: f64) -> f64 {
    let twice = 2.0 * x;
    if twice.fract() == 0.0 && twice < (2 * LN_FACTORIAL_TABLE) as f64 {
        ln_gamma_half(twice as u64)
    } else {
        ln_gamma(x)
    }
}

/// Continued fraction for the incomplete beta function (modified Lentz).
/// Converges quickly when `x < (a + 1) / (a + b + 2)`.
fn beta_continued_fraction(a: f64, b: f64, x: f64) -> f64 {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    let qab = a + b;
    let qap = a + 1.0;
    let qam = a - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * x / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..10_000 {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;
        let aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let del = d * c;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

/// The small tail `B_{1/2}(a, b)` for `a > b`, where the continued fraction
/// converges directly. Prefactor `x^a (1-x)^b / a` at `x = 1/2`.
fn lower_tail_half(a: f64, b: f64) -> f64 {
    let ln_pref = -(a + b) * LN_2 - a.ln();
    ln_pref.exp() * beta_continued_fraction(a, b, 0.5)
}

/// Complete beta function `B(a, b)`.
pub fn beta(a: f64, b: f64) -> f64 {
    ln_beta(a, b).exp()
}

/// Non-regularized incomplete beta function at one half,
/// `B_{1/2}(a, b) = ∫₀^{1/2} t^{a-1} (1-t)^{b-1} dt`.
pub fn incomplete_beta_half(a: f64, b: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "incomplete beta needs positive finite arguments, got a={a}, b={b}"
        )));
    }
    Ok(if a == b {
        0.5 * beta(a, b)
    } else if a > b {
        lower_tail_half(a, b)
    } else {
        // B_{1/2}(a,b) = B(a,b) - B_{1/2}(b,a); the subtracted part is the small tail.
        beta(a, b) - lower_tail_half(b, a)
    })
}
