use nalgebra::DMatrix;
use serde::Serialize;

use crate::angular::{jordan_overlap_f64, multiplicity_f64, spins_of, triangle, HalfInt};

use super::coeff::CoeffTable;

/// Quantum numbers `{j_a, j_b, j_c, J}` of one orthogonal block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockLabel {
    pub j_a: HalfInt,
    pub j_b: HalfInt,
    pub j_c: HalfInt,
    pub total: HalfInt,
}

impl BlockLabel {
    /// Intermediate spins `j_ab` of the coupling order `((a b) c)` reaching `J`.
    pub fn labels_ab(&self) -> Vec<HalfInt> {
        self.j_a
            .coupled_with(self.j_b)
            .filter(|&jab| triangle(jab, self.j_c, self.total))
            .collect()
    }

    /// Intermediate spins `j_bc` of the coupling order `(a (b c))` reaching `J`.
    pub fn labels_bc(&self) -> Vec<HalfInt> {
        self.j_b
            .coupled_with(self.j_c)
            .filter(|&jbc| triangle(self.j_a, jbc, self.total))
            .collect()
    }

    /// Block multiplicity `γ = ν_{j_a}^n ν_{j_b}^m ν_{j_c}^n (2J + 1)`.
    pub fn multiplicity(&self, n: u32, m: u32) -> f64 {
        multiplicity_f64(n, self.j_a)
            * multiplicity_f64(m, self.j_b)
            * multiplicity_f64(n, self.j_c)
            * f64::from(self.total.dim())
    }
}

/// All blocks with non-zero content for `n` copies per program port and `m`
/// data copies, with multiplicities, sorted by `(2j_a, 2j_b, 2j_c, 2J)`.
pub fn enumerate_blocks(n: u32, m: u32) -> Vec<(BlockLabel, f64)> {
    let mut out = Vec::new();
    for j_a in spins_of(n) {
        for j_b in spins_of(m) {
            for j_c in spins_of(n) {
                let top = j_a.twice() + j_b.twice() + j_c.twice();
                for tj in (top % 2..=top).step_by(2) {
                    let label = BlockLabel {
                        j_a,
                        j_b,
                        j_c,
                        total: HalfInt::from_twice(tj),
                    };
                    if label.labels_ab().is_empty() {
                        continue;
                    }
                    out.push((label, label.multiplicity(n, m)));
                }
            }
        }
    }
    out
}

/// A block's data that does not depend on the coefficient source.
#[derive(Clone, Debug)]
pub struct Block {
    pub label: BlockLabel,
    pub multiplicity: f64,
    pub labels_ab: Vec<HalfInt>,
    pub labels_bc: Vec<HalfInt>,
    /// `Λ[i][k] = ⟨j_ab = labels_ab[i]; J | j_bc = labels_bc[k]; J⟩`.
    pub lambda: DMatrix<f64>,
}

impl Block {
    pub fn new(label: BlockLabel, multiplicity: f64) -> Self {
        let labels_ab = label.labels_ab();
        let labels_bc = label.labels_bc();
        let lambda = DMatrix::from_fn(labels_ab.len(), labels_bc.len(), |i, k| {
            jordan_overlap_f64(
                label.j_a,
                label.j_b,
                label.j_c,
                labels_ab[i],
                labels_bc[k],
                label.total,
            )
        });
        Block {
            label,
            multiplicity,
            labels_ab,
            labels_bc,
            lambda,
        }
    }

    pub fn dim(&self) -> usize {
        self.labels_ab.len()
    }

    /// The two-hypothesis subproblem of this block for given coefficients.
    pub fn problem<'a>(&'a self, n: u32, m: u32, table: &CoeffTable) -> BlockProblem<'a> {
        let l = &self.label;
        let c_jc = table.get(n, l.j_c);
        let c_ja = table.get(n, l.j_a);
        BlockProblem {
            labels_ab: &self.labels_ab,
            labels_bc: &self.labels_bc,
            sigma1_diag: self
                .labels_ab
                .iter()
                .map(|&jab| table.get(n + m, jab) * c_jc)
                .collect(),
            sigma2_diag: self
                .labels_bc
                .iter()
                .map(|&jbc| c_ja * table.get(n + m, jbc))
                .collect(),
            lambda: &self.lambda,
        }
    }
}

/// Per-block pair of diagonal states and the recoupling matrix between their bases.
#[derive(Clone, Debug)]
pub struct BlockProblem<'a> {
    pub labels_ab: &'a [HalfInt],
    pub labels_bc: &'a [HalfInt],
    pub sigma1_diag: Vec<f64>,
    pub sigma2_diag: Vec<f64>,
    pub lambda: &'a DMatrix<f64>,
}

impl BlockProblem<'_> {
    /// `σ1 - Λ σ2 Λᵀ` in the `j_ab` basis.
    pub fn difference(&self) -> DMatrix<f64> {
        let d = self.sigma1_diag.len();
        let first = self.sigma2_diag[0];
        if self.sigma2_diag.iter().all(|&s| s == first) {
            // Λ (c·1) Λᵀ = c·1 exactly for orthogonal Λ.
            return DMatrix::from_fn(d, d, |i, k| {
                if i == k {
                    self.sigma1_diag[i] - first
                } else {
                    0.0
                }
            });
        }
        let mut scaled = self.lambda.clone();
        for (mut col, s) in scaled.column_iter_mut().zip(&self.sigma2_diag) {
            col *= *s;
        }
        let mut diff = -(scaled * self.lambda.transpose());
        for (i, s) in self.sigma1_diag.iter().enumerate() {
            diff[(i, i)] += s;
        }
        // symmetrize away rounding
        (&diff + diff.transpose()) * 0.5
    }
}

/// Trace norm `‖σ1 - Λ σ2 Λᵀ‖₁` of one block.
pub fn block_helstrom(problem: &BlockProblem<'_>) -> f64 {
    let diff = problem.difference();
    match diff.nrows() {
        0 => 0.0,
        1 => diff[(0, 0)].abs(),
        2 => {
            let (a, b, d) = (diff[(0, 0)], diff[(0, 1)], diff[(1, 1)]);
            if a * d - b * b >= 0.0 {
                (a + d).abs()
            } else {
                2.0 * (0.25 * (a - d) * (a - d) + b * b).sqrt()
            }
        }
        _ => diff.symmetric_eigenvalues().iter().map(|e| e.abs()).sum(),
    }
}
