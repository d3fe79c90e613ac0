//! Helpers shared by the integration tests: an independent double-exponential
//! quadrature and a direct evaluation of the block coefficients.

#![allow(dead_code)]

use std::f64::consts::PI;

/// `∫_a^b f` by tanh-sinh quadrature; tolerates integrable endpoint
/// singularities. Step halving stops once successive estimates agree to `1e-15`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
    let mut h = 1.0;
    let mut prev = f64::NAN;
    for _ in 0..12 {
        let mut sum = 0.0;
        let kmax = (6.5 / h) as i64;
        for k in -kmax..=kmax {
            let t = k as f64 * h;
            let u = 0.5 * PI * t.sinh();
            let (c, s) = (u.cosh(), u.tanh());
            let w = 0.5 * PI * t.cosh() / (c * c);
            // distance to the nearer endpoint, without cancellation
            let d = half / (u.abs().exp() * c);
            if d <= 0.0 || w == 0.0 {
                continue;
            }
            let x = if s < 0.0 { a + d } else { b - d };
            let x = if k == 0 { mid } else { x };
            if x <= a || x >= b {
                continue;
            }
            sum += w * f(x);
        }
        let est = sum * h * half;
        if (est - prev).abs() <= 1e-15 * est.abs().max(1e-300) {
            return est;
        }
        prev = est;
        h *= 0.5;
    }
    prev
}

/// `C_j^N(r)` from the eigenvalue sum `t_j = Σ_μ λ+^{j+μ} λ-^{j-μ}`.
pub fn coeff_direct(n_total: u32, twice_j: u32, r: f64) -> f64 {
    let (up, down) = ((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    let t: f64 = (0..=twice_j).map(|k| up.powi(k as i32) * down.powi((twice_j - k) as i32)).sum();
    let pairs = (n_total - twice_j) / 2;
    (up * down).powi(pairs as i32) * t / f64::from(twice_j + 1)
}

/// Purity priors as densities on `[0, 1]`.
#[derive(Clone, Copy, Debug)]
pub enum Weight {
    HardSphere,
    Bures,
    Chernoff,
}

/// `∫_0^1 f(r) w(r) dr`, with `r = sin θ` for the priors that diverge at `r = 1`.
pub fn prior_average(f: impl Fn(f64) -> f64, weight: Weight) -> f64 {
    match weight {
        Weight::HardSphere => integrate(|r| f(r) * weight_hard_sphere(r), 0.0, 1.0),
        Weight::Bures => integrate(|t| f(t.sin()) * 4.0 / PI * t.sin().powi(2), 0.0, PI / 2.0),
        Weight::Chernoff => integrate(
            |t| {
                let r = t.sin();
                let s = (1.0 + r).sqrt() - (1.0 - r).sqrt();
                f(r) * s * s / (PI - 2.0)
            },
            0.0,
            PI / 2.0,
        ),
    }
}

/// Gauss–Legendre nodes paired with the density of `weight` after the same substitution as
/// [`prior_average`]: returns `(r_i, w_i)` with `Σ w_i f(r_i) ≈ ∫ f w`.
pub fn prior_nodes(weight: Weight, count: usize) -> Vec<(f64, f64)> {
    let (a, b) = match weight {
        Weight::HardSphere => (0.0, 1.0),
        _ => (0.0, PI / 2.0),
    };
    legendre_nodes(count)
        .into_iter()
        .map(|(x, w)| {
            let t = 0.5 * (a + b) + 0.5 * (b - a) * x;
            let w = 0.5 * (b - a) * w;
            match weight {
                Weight::HardSphere => (t, w * weight_hard_sphere(t)),
                Weight::Bures => (t.sin(), w * 4.0 / PI * t.sin().powi(2)),
                Weight::Chernoff => {
                    let r = t.sin();
                    let s = (1.0 + r).sqrt() - (1.0 - r).sqrt();
                    (r, w * s * s / (PI - 2.0))
                }
            }
        })
        .collect()
}

fn legendre_nodes(k: usize) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for j in 1..k {
                    let p2 = ((2 * j + 1) as f64 * x * p1 - j as f64 * p0) / (j + 1) as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = k as f64 * (x * p1 - p0) / (x * x - 1.0);
                let step = p1 / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

pub fn weight_hard_sphere(r: f64) -> f64 {
    3.0 * r * r
}

pub fn weight_bures(r: f64) -> f64 {
    4.0 / PI * r * r / (1.0 - r * r).sqrt()
}

pub fn weight_chernoff(r: f64) -> f64 {
    let s = (1.0 + r).sqrt() - (1.0 - r).sqrt();
    s * s / ((PI - 2.0) * (1.0 - r * r).sqrt())
}
