//! Minimum-error discrimination for program and data states of known purity.
//!
//! Both averaged hypotheses are block diagonal in total-angular-momentum
//! bases that differ only in coupling order. Blocks are labelled by
//! `{j_a, j_b, j_c, J}`; inside each block the states are diagonal in the
//! intermediate spin (`j_ab` resp. `j_bc`) and the change of basis is the
//! recoupling matrix `Λ`, so the trace norm splits into a sum of small
//! symmetric-matrix trace norms weighted by block multiplicities.

mod blocks;
mod coeff;

pub use blocks::{block_helstrom, enumerate_blocks, Block, BlockLabel, BlockProblem};
pub use coeff::{coeff, CoeffTable};

use crate::angular::MAX_TOTAL_COPIES;
use crate::error::{Error, Result};
use crate::par::{map_collect, Execution};
use crate::universal::CoeffSource;

/// Source-independent block data for one `(n, m)`, reusable across purities
/// and priors.
#[derive(Clone, Debug)]
pub struct BlockStructure {
    n: u32,
    m: u32,
    blocks: Vec<Block>,
}

impl BlockStructure {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        Self::with_execution(n, m, Execution::default())
    }

    pub fn with_execution(n: u32, m: u32, exec: Execution) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroCopies("n"));
        }
        if m == 0 {
            return Err(Error::ZeroCopies("m"));
        }
        let total = 2 * u64::from(n) + u64::from(m);
        if total > u64::from(MAX_TOTAL_COPIES) {
            return Err(Error::TooManyCopies {
                total,
                limit: u64::from(MAX_TOTAL_COPIES),
            });
        }
        let labels = enumerate_blocks(n, m);
        let blocks = map_collect(exec, &labels, |&(label, mult)| Block::new(label, mult));
        Ok(BlockStructure { n, m, blocks })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn table(&self, source: &CoeffSource) -> Result<CoeffTable> {
        CoeffTable::build(source, &[self.n, self.n + self.m])
    }

    /// Trace-norm contributions `T^ξ`, in block order.
    pub fn trace_norms(&self, table: &CoeffTable, exec: Execution) -> Vec<f64> {
        map_collect(exec, &self.blocks, |b| {
            block_helstrom(&b.problem(self.n, self.m, table))
        })
    }

    /// `Σ_ξ γ_ξ tr σ1^ξ` and `Σ_ξ γ_ξ tr σ2^ξ`; both equal one.
    pub fn traces(&self, table: &CoeffTable) -> (f64, f64) {
        self.blocks.iter().fold((0.0, 0.0), |(t1, t2), b| {
            let p = b.problem(self.n, self.m, table);
            (
                t1 + b.multiplicity * p.sigma1_diag.iter().sum::<f64>(),
                t2 + b.multiplicity * p.sigma2_diag.iter().sum::<f64>(),
            )
        })
    }

    /// `P = ½ (1 - ½ Σ_ξ γ_ξ T^ξ)`. The reduction runs in block order, so
    /// the result does not depend on the execution mode.
    pub fn error_probability(&self, source: &CoeffSource, exec: Execution) -> Result<f64> {
        let table = self.table(source)?;
        let norms = self.trace_norms(&table, exec);
        let total: f64 = self
            .blocks
            .iter()
            .zip(&norms)
            .map(|(b, t)| b.multiplicity * t)
            .sum();
        Ok((0.5 * (1.0 - 0.5 * total)).clamp(0.0, 0.5))
    }
}

/// Optimal error probability for `n` copies per program port and `m` data
/// copies, all with the coefficients supplied by `source`.
pub fn me_mixed(n: u32, m: u32, source: CoeffSource) -> Result<f64> {
    me_mixed_with(n, m, source, Execution::default())
}

pub fn me_mixed_with(n: u32, m: u32, source: CoeffSource, exec: Execution) -> Result<f64> {
    source.validate()?;
    BlockStructure::with_execution(n, m, exec)?.error_probability(&source, exec)
}
