use std::f64::consts::PI;

use super::matrix::C64;
use crate::par::{map_collect, Execution};

/// Gauss–Legendre nodes and weights on `[-1, 1]`; exact for polynomials of
/// degree `2k - 1`.
pub fn gauss_legendre(k: usize) -> Vec<(f64, f64)> {
    assert!(k >= 1, "need at least one node");
    (0..k)
        .map(|i| {
            let mut x = (PI * (i as f64 + 0.75) / (k as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(k, x);
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre(k, x);
            (x, 2.0 / ((1.0 - x * x) * dp * dp))
        })
        .collect()
}

/// `(P_k(x), P_k'(x))`.
fn legendre(k: usize, x: f64) -> (f64, f64) {
    let (mut prev, mut cur) = (1.0, x);
    for j in 1..k {
        let next = ((2 * j + 1) as f64 * x * cur - j as f64 * prev) / (j + 1) as f64;
        prev = cur;
        cur = next;
    }
    if k == 0 {
        return (1.0, 0.0);
    }
    (cur, k as f64 * (x * cur - prev) / (x * x - 1.0))
}

/// Sphere averages of products of single-qubit density-matrix entries.
///
/// For `ρ = ½(1 + r n·σ)` with `n` uniform on the sphere, stores
/// `∫ ρ00^c00 ρ01^c01 ρ10^c10 ρ11^c11 dn` for every count vector summing to
/// `qubits`, so that `⟨x|∫ρ^{⊗N}|y⟩` is a table lookup on the bit-pair counts
/// of `(x, y)`.
#[derive(Clone, Debug)]
pub struct SphereTable {
    qubits: u32,
    values: Vec<C64>,
}

impl SphereTable {
    /// `refine = 1` uses the smallest exact product rule: `⌈(N+1)/2⌉`
    /// Gauss–Legendre nodes in `cos θ` and `N + 1` equispaced `φ` nodes.
    pub fn build(qubits: u32, r: f64, refine: usize, exec: Execution) -> Self {
        let n = qubits as usize;
        let side = n + 1;
        let theta_nodes = gauss_legendre(refine * (n + 1).div_ceil(2));
        let phi_count = refine * (n + 1);
        let nodes: Vec<(f64, f64, f64)> = theta_nodes
            .iter()
            .flat_map(|&(z, wz)| {
                (0..phi_count).map(move |l| {
                    let phi = 2.0 * PI * l as f64 / phi_count as f64;
                    (z, phi, 0.5 * wz / phi_count as f64)
                })
            })
            .collect();
        let per_node = map_collect(exec, &nodes, |&(z, phi, weight)| {
            let s = (1.0 - z * z).max(0.0).sqrt();
            let entries = [
                C64::new(0.5 * (1.0 + r * z), 0.0),
                C64::new(0.5 * r * s * phi.cos(), -0.5 * r * s * phi.sin()),
                C64::new(0.5 * r * s * phi.cos(), 0.5 * r * s * phi.sin()),
                C64::new(0.5 * (1.0 - r * z), 0.0),
            ];
            let powers: Vec<Vec<C64>> = entries
                .iter()
                .map(|&e| {
                    let mut p = Vec::with_capacity(side);
                    let mut acc = C64::new(1.0, 0.0);
                    for _ in 0..side {
                        p.push(acc);
                        acc *= e;
                    }
                    p
                })
                .collect();
            let mut local = vec![C64::new(0.0, 0.0); side * side * side];
            for c01 in 0..side {
                for c10 in 0..side - c01 {
                    for c11 in 0..side - c01 - c10 {
                        let c00 = n - c01 - c10 - c11;
                        local[(c01 * side + c10) * side + c11] = powers[0][c00]
                            * powers[1][c01]
                            * powers[2][c10]
                            * powers[3][c11]
                            * weight;
                    }
                }
            }
            local
        });
        let mut values = vec![C64::new(0.0, 0.0); side * side * side];
        for local in &per_node {
            for (acc, v) in values.iter_mut().zip(local) {
                *acc += v;
            }
        }
        SphereTable { qubits, values }
    }

    pub fn qubits(&self) -> u32 {
        self.qubits
    }

    /// `⟨x|∫ρ^{⊗N} dn|y⟩` for `N`-bit strings `x`, `y`.
    pub fn entry(&self, x: u32, y: u32) -> C64 {
        let side = self.qubits as usize + 1;
        let mask = if self.qubits == 32 { u32::MAX } else { (1u32 << self.qubits) - 1 };
        let c01 = (!x & y & mask).count_ones() as usize;
        let c10 = (x & !y & mask).count_ones() as usize;
        let c11 = (x & y).count_ones() as usize;
        self.values[(c01 * side + c10) * side + c11]
    }
}
