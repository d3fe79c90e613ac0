//! Independent brute-force reference.
//!
//! Builds the averaged hypothesis states as explicit matrices, without any
//! angular-momentum recoupling, and evaluates Helstrom and fidelity figures
//! of merit numerically. Every state here commutes with the total Hamming
//! weight, so matrices are stored as one dense block per weight sector.
//!
//! Qubit layout: port A occupies bits `0..n_a`, port B the next `n_b` bits and
//! port C the top `n_c` bits.

mod matrix;
mod quadrature;
mod symmetric;

use nalgebra::DMatrix;

pub use matrix::{
    fidelity, fidelity_with, helstrom, helstrom_with, trace_distance_norm, DenseHermitian, SectorBasis,
    WeightBlocks, C64,
};
pub use quadrature::{gauss_legendre, SphereTable};
pub use symmetric::{SymmetricProjector, PERMUTATION_LIMIT};

use crate::error::{check_purity, Error, Result};
use crate::par::{map_collect, Execution};
use crate::pure::PortLoad;

/// Largest total copy number for [`pure_sigma`].
pub const PURE_QUBIT_LIMIT: u32 = 14;
/// Largest total copy number for [`mixed_sigma`].
pub const MIXED_QUBIT_LIMIT: u32 = 12;

/// Which program port the data matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    /// Data prepared like port A.
    First,
    /// Data prepared like port C.
    Second,
}

/// Bit strings of `qubits` bits with `weight` ones, increasing.
pub fn sector_states(qubits: u32, weight: u32) -> Vec<u32> {
    (0..1u32 << qubits).filter(|x| x.count_ones() == weight).collect()
}

fn check_cap(qubits: u64, limit: u32) -> Result<u32> {
    if qubits > u64::from(limit) {
        return Err(Error::DimensionCap {
            qubits: qubits.min(u64::from(u32::MAX)) as u32,
            limit,
        });
    }
    Ok(qubits as u32)
}

/// Sizes of the low and high tensor factors on which each hypothesis is a
/// product of two i.i.d. blocks.
fn split(load: PortLoad, which: Hypothesis) -> (u32, u32) {
    match which {
        Hypothesis::First => (load.n_a + load.n_b, load.n_c),
        Hypothesis::Second => (load.n_a, load.n_b + load.n_c),
    }
}

fn assemble(
    qubits: u32,
    low: u32,
    exec: Execution,
    entry: impl Fn(u32, u32, u32, u32) -> C64 + Sync + Send,
) -> WeightBlocks {
    let mask = (1u32 << low) - 1;
    let weights: Vec<u32> = (0..=qubits).collect();
    let blocks = map_collect(exec, &weights, |&w| {
        let states = sector_states(qubits, w);
        DenseHermitian::from_fn(states.len(), |i, j| {
            let (x, y) = (states[i], states[j]);
            entry(x & mask, y & mask, x >> low, y >> low)
        })
    });
    WeightBlocks {
        qubits,
        basis: SectorBasis::Computational,
        blocks,
    }
}

/// Averaged pure-state hypothesis: the normalized product of the symmetric
/// projectors on the two groups of ports that share a state.
pub fn pure_sigma(load: PortLoad, which: Hypothesis) -> Result<WeightBlocks> {
    let qubits = check_cap(load.total(), PURE_QUBIT_LIMIT)?;
    let (low, high) = split(load, which);
    let (pl, ph) = (SymmetricProjector::new(low), SymmetricProjector::new(high));
    let norm = 1.0 / (f64::from(low + 1) * f64::from(high + 1));
    Ok(assemble(qubits, low, Execution::Sequential, |xl, yl, xh, yh| {
        C64::new(pl.entry(xl, yl) * ph.entry(xh, yh) * norm, 0.0)
    }))
}

/// Averaged mixed-state hypothesis for the symmetric load `n × m × n` with
/// purity `r`, using the exact-degree sphere quadrature.
pub fn mixed_sigma(n: u32, m: u32, r: f64, which: Hypothesis) -> Result<WeightBlocks> {
    mixed_sigma_with(n, m, r, which, 1, Execution::default())
}

/// [`mixed_sigma`] with the quadrature orders multiplied by `refine`.
pub fn mixed_sigma_with(
    n: u32,
    m: u32,
    r: f64,
    which: Hypothesis,
    refine: usize,
    exec: Execution,
) -> Result<WeightBlocks> {
    mixed_sigma_purities(n, m, (r, r), which, refine, exec)
}

/// Averaged hypothesis when the state shared by port A has purity
/// `purities.0` and the state shared by port C has purity `purities.1`.
pub fn mixed_sigma_purities(
    n: u32,
    m: u32,
    purities: (f64, f64),
    which: Hypothesis,
    refine: usize,
    exec: Execution,
) -> Result<WeightBlocks> {
    check_purity(purities.0)?;
    check_purity(purities.1)?;
    let load = PortLoad::symmetric(n, m)?;
    let qubits = check_cap(load.total(), MIXED_QUBIT_LIMIT)?;
    let (low, high) = split(load, which);
    let refine = refine.max(1);
    let tl = SphereTable::build(low, purities.0, refine, exec);
    let th = SphereTable::build(high, purities.1, refine, exec);
    Ok(assemble(qubits, low, exec, |xl, yl, xh, yh| tl.entry(xl, yl) * th.entry(xh, yh)))
}

/// Orthonormal basis of the weight-`w` part of `Sym(A) ⊗ Sym(B) ⊗ Sym(C)`,
/// as columns over [`sector_states`], with the `(a, b, c)` weight labels.
pub fn port_symmetric_basis(load: PortLoad, weight: u32) -> (Vec<(u32, u32, u32)>, DMatrix<f64>) {
    let (na, nb, nc) = (load.n_a, load.n_b, load.n_c);
    let qubits = na + nb + nc;
    let mut labels = Vec::new();
    for a in 0..=na.min(weight) {
        for b in 0..=nb.min(weight - a) {
            let c = weight - a - b;
            if c <= nc {
                labels.push((a, b, c));
            }
        }
    }
    let states = sector_states(qubits, weight);
    let (ma, mb) = ((1u32 << na) - 1, (1u32 << nb) - 1);
    let inv_sqrt_binom = |k: u32, w: u32| {
        SymmetricProjector::by_dicke(k).entry((1u32 << w) - 1, (1u32 << w) - 1).sqrt()
    };
    let basis = DMatrix::from_fn(states.len(), labels.len(), |i, col| {
        let x = states[i];
        let (a, b, c) = labels[col];
        let matches = (x & ma).count_ones() == a
            && ((x >> na) & mb).count_ones() == b
            && (x >> (na + nb)).count_ones() == c;
        if matches {
            inv_sqrt_binom(na, a) * inv_sqrt_binom(nb, b) * inv_sqrt_binom(nc, c)
        } else {
            0.0
        }
    });
    (labels, basis)
}

/// Restrict a computational-basis operator to `Sym(A) ⊗ Sym(B) ⊗ Sym(C)`.
///
/// Exact for operators supported on that subspace, such as [`pure_sigma`].
pub fn compress_port_symmetric(s: &WeightBlocks, load: PortLoad) -> Result<WeightBlocks> {
    if s.basis != SectorBasis::Computational || u64::from(s.qubits) != load.total() {
        return Err(Error::InvalidArgument("operator does not match the port load".into()));
    }
    let blocks = s
        .blocks
        .iter()
        .enumerate()
        .map(|(w, block)| block.compress(&port_symmetric_basis(load, w as u32).1))
        .collect();
    Ok(WeightBlocks {
        qubits: s.qubits,
        basis: SectorBasis::PortSymmetric {
            n_a: load.n_a,
            n_b: load.n_b,
            n_c: load.n_c,
        },
        blocks,
    })
}

/// The all-port Dicke state of each weight, in the port-symmetric basis.
fn fully_symmetric_vectors(load: PortLoad) -> Vec<Vec<C64>> {
    let qubits = load.total() as u32;
    let dicke = SymmetricProjector::by_dicke(qubits);
    (0..=qubits)
        .map(|w| {
            let (_, basis) = port_symmetric_basis(load, w);
            let amp = dicke.entry((1u32 << w) - 1, (1u32 << w) - 1).sqrt();
            (0..basis.ncols())
                .map(|col| C64::new(basis.column(col).sum() * amp, 0.0))
                .collect()
        })
        .collect()
}

/// Both pure hypotheses restricted to the port-symmetric subspace.
pub fn pure_pair(load: PortLoad) -> Result<(WeightBlocks, WeightBlocks)> {
    let s1 = compress_port_symmetric(&pure_sigma(load, Hypothesis::First)?, load)?;
    let s2 = compress_port_symmetric(&pure_sigma(load, Hypothesis::Second)?, load)?;
    Ok((s1, s2))
}

/// Minimum inconclusive probability for pure states, from explicit matrices.
///
/// On the all-port symmetric subspace the two hypotheses coincide, so every
/// outcome there is inconclusive; on its complement the optimum is the
/// fidelity of the restricted states.
pub fn pure_ua(load: PortLoad) -> Result<f64> {
    let (s1, s2) = pure_pair(load)?;
    let sym = fully_symmetric_vectors(load);
    let mut inconclusive = 0.0;
    let mut strip = |s: &WeightBlocks| {
        s.map_blocks(|w, block| {
            let v = &sym[w];
            let weight = block.expectation(v);
            inconclusive += 0.5 * weight;
            block.sub(&DenseHermitian::projector(v).scale(weight))
        })
    };
    let (r1, r2) = (strip(&s1), strip(&s2));
    Ok(inconclusive + fidelity(&r1, &r2)?)
}

/// Minimum error probability for pure states, from explicit matrices.
pub fn pure_me(load: PortLoad) -> Result<f64> {
    let (s1, s2) = pure_pair(load)?;
    helstrom(&s1, &s2)
}

/// Minimum error probability for `n × m × n` states of purity `r`, from
/// quadrature-built matrices.
pub fn mixed_me(n: u32, m: u32, r: f64) -> Result<f64> {
    mixed_me_with(n, m, r, Execution::default())
}

pub fn mixed_me_with(n: u32, m: u32, r: f64, exec: Execution) -> Result<f64> {
    let s1 = mixed_sigma_with(n, m, r, Hypothesis::First, 1, exec)?;
    let s2 = mixed_sigma_with(n, m, r, Hypothesis::Second, 1, exec)?;
    helstrom_with(&s1, &s2, exec)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(a: u32, b: u32, c: u32) -> PortLoad {
        PortLoad::new(a, b, c).unwrap()
    }

    #[test]
    fn single_copy_pure_sigma() {
        let s1 = pure_sigma(load(1, 1, 1), Hypothesis::First).unwrap();
        assert!((s1.trace() - 1.0).abs() < 1e-14);
        assert_eq!(s1.rank(1e-12), 6);
        assert!(s1.hermiticity_defect() < 1e-15);
        let dense = s1.to_dense().unwrap();
        assert_eq!(dense.dim(), 8);
    }

    #[test]
    fn single_copy_values() {
        let l = load(1, 1, 1);
        let (s1, s2) = (
            pure_sigma(l, Hypothesis::First).unwrap(),
            pure_sigma(l, Hypothesis::Second).unwrap(),
        );
        assert!((fidelity(&s1, &s2).unwrap() - 5.0 / 6.0).abs() < 1e-12);
        let me = 0.5 * (1.0 - 1.0 / (2.0 * 3f64.sqrt()));
        assert!((helstrom(&s1, &s2).unwrap() - me).abs() < 1e-12);
        assert!((pure_ua(l).unwrap() - 5.0 / 6.0).abs() < 1e-12);
        assert!((pure_me(l).unwrap() - me).abs() < 1e-12);
    }

    #[test]
    fn compression_preserves_figures_of_merit() {
        for l in [load(2, 1, 1), load(1, 2, 3), load(2, 2, 2)] {
            let s1 = pure_sigma(l, Hypothesis::First).unwrap();
            let s2 = pure_sigma(l, Hypothesis::Second).unwrap();
            let (c1, c2) = pure_pair(l).unwrap();
            assert!((helstrom(&s1, &s2).unwrap() - helstrom(&c1, &c2).unwrap()).abs() < 1e-12);
            assert!((fidelity(&s1, &s2).unwrap() - fidelity(&c1, &c2).unwrap()).abs() < 1e-10);
            assert!((c1.trace() - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn pure_sigma_is_port_permutation_invariant() {
        // swap the two qubits of port A (bits 0, 1) and of port C (bits 3, 4)
        let l = load(2, 1, 2);
        let dense = pure_sigma(l, Hypothesis::First).unwrap().to_dense().unwrap();
        let swap = |x: usize, i: usize, j: usize| {
            let (bi, bj) = ((x >> i) & 1, (x >> j) & 1);
            (x & !(1 << i) & !(1 << j)) | (bi << j) | (bj << i)
        };
        for (i, j) in [(0, 1), (0, 2), (3, 4)] {
            for x in 0..32 {
                for y in 0..32 {
                    let d = dense.get(x, y) - dense.get(swap(x, i, j), swap(y, i, j));
                    assert!(d.norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn mixed_pure_and_flat_limits() {
        let l = load(1, 2, 1);
        for which in [Hypothesis::First, Hypothesis::Second] {
            let mixed = mixed_sigma(1, 2, 1.0, which).unwrap();
            let pure = pure_sigma(l, which).unwrap();
            assert!(mixed.max_abs_diff(&pure).unwrap() < 1e-12);
            let flat = mixed_sigma(1, 2, 0.0, which).unwrap();
            for block in flat.blocks() {
                for i in 0..block.dim() {
                    for j in 0..block.dim() {
                        let want = if i == j { 1.0 / 16.0 } else { 0.0 };
                        assert!((block.get(i, j).re - want).abs() < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn mixed_single_copy() {
        for r in [0.0, 0.3, 0.77, 1.0] {
            let got = mixed_me(1, 1, r).unwrap();
            let want = 0.5 * (1.0 - r * r / (2.0 * 3f64.sqrt()));
            assert!((got - want).abs() < 1e-12, "r={r}");
        }
    }

    #[test]
    fn quadrature_refinement_is_stable() {
        for which in [Hypothesis::First, Hypothesis::Second] {
            let a = mixed_sigma_with(2, 1, 0.6, which, 1, Execution::Sequential).unwrap();
            let b = mixed_sigma_with(2, 1, 0.6, which, 2, Execution::Sequential).unwrap();
            assert!(a.max_abs_diff(&b).unwrap() < 1e-12);
        }
    }

    #[test]
    fn dimension_caps() {
        assert!(matches!(
            pure_sigma(load(5, 5, 5), Hypothesis::First),
            Err(Error::DimensionCap { qubits: 15, limit: 14 })
        ));
        assert!(matches!(
            mixed_sigma(4, 5, 0.5, Hypothesis::First),
            Err(Error::DimensionCap { qubits: 13, limit: 12 })
        ));
    }

    #[test]
    fn helstrom_edge_cases() {
        let e0 = DenseHermitian::from_real_fn(2, |i, j| if i == 0 && j == 0 { 1.0 } else { 0.0 });
        let e1 = DenseHermitian::from_real_fn(2, |i, j| if i == 1 && j == 1 { 1.0 } else { 0.0 });
        let (a, b) = (WeightBlocks::single(e0), WeightBlocks::single(e1));
        assert_eq!(helstrom(&a, &a).unwrap(), 0.5);
        assert!(helstrom(&a, &b).unwrap().abs() < 1e-15);
        assert!((fidelity(&a, &a).unwrap() - 1.0).abs() < 1e-12);
        assert!(fidelity(&a, &b).unwrap().abs() < 1e-12);
    }
}
