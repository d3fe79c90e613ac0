use std::collections::BTreeMap;

use crate::angular::{multiplicity_f64, spins_of, HalfInt};
use crate::error::{check_purity, Result};
use crate::universal::CoeffSource;

/// Weight `C_j^N(r)` of each basis state in a spin-`j` irrep of the
/// sphere-averaged `N`-copy state of purity `r`:
/// `((1-r²)/4)^{N/2-j} t_j / (2j+1)` with
/// `t_j = Σ_{k=0}^{2j} ((1-r)/2)^{2j-k} ((1+r)/2)^k`.
///
/// Returns zero if `2j > N` or the parities differ.
pub fn coeff(n_total: u32, j: HalfInt, r: f64) -> Result<f64> {
    check_purity(r)?;
    let tj = j.twice();
    if tj > n_total || !(n_total - tj).is_multiple_of(2) {
        return Ok(0.0);
    }
    let singlets = ((n_total - tj) / 2) as i32;
    let (up, down) = ((1.0 + r) / 2.0, (1.0 - r) / 2.0);
    let t = if r < 0.5 {
        // Positive-term sum; also the r → 0 limit (2j+1)/4^j without a 0/0.
        (0..=tj).fold(0.0, |acc, k| acc + down.powi((tj - k) as i32) * up.powi(k as i32))
    } else {
        (up.powi(tj as i32 + 1) - down.powi(tj as i32 + 1)) / r
    };
    // powi(0, 0) = 1 keeps the r = 1 case exact.
    let singlet_weight = ((1.0 - r * r) / 4.0).powi(singlets);
    Ok(singlet_weight * t / f64::from(j.dim()))
}

/// Coefficients `C_j^N` for a fixed set of totals `N`, indexed by `2j`.
#[derive(Clone, Debug, Default)]
pub struct CoeffTable {
    rows: BTreeMap<u32, Vec<f64>>,
}

impl CoeffTable {
    pub fn build(source: &CoeffSource, totals: &[u32]) -> Result<Self> {
        source.validate()?;
        let mut rows = BTreeMap::new();
        for &n_total in totals {
            if rows.contains_key(&n_total) {
                continue;
            }
            let mut row = vec![0.0; n_total as usize + 1];
            for j in spins_of(n_total) {
                row[j.twice() as usize] = source.coeff(n_total, j)?;
            }
            rows.insert(n_total, row);
        }
        Ok(CoeffTable { rows })
    }

    /// `C_j^N`; zero for spins not carried by `N` qubits.
    ///
    /// # Panics
    /// If `N` was not requested when the table was built.
    #[inline]
    pub fn get(&self, n_total: u32, j: HalfInt) -> f64 {
        let row = self
            .rows
            .get(&n_total)
            .unwrap_or_else(|| panic!("coefficient table has no row for N = {n_total}"));
        row.get(j.twice() as usize).copied().unwrap_or(0.0)
    }

    pub fn totals(&self) -> impl Iterator<Item = u32> + '_ {
        self.rows.keys().copied()
    }

    /// `Σ_j ν_j^N (2j+1) C_j^N`, which equals one for a normalized state.
    pub fn unit_trace(&self, n_total: u32) -> f64 {
        spins_of(n_total)
            .map(|j| multiplicity_f64(n_total, j) * f64::from(j.dim()) * self.get(n_total, j))
            .sum()
    }

    pub fn min_entry(&self) -> f64 {
        self.rows
            .values()
            .flat_map(|row| row.iter().copied())
            .fold(f64::INFINITY, f64::min)
    }
}
