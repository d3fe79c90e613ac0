use super::table::{Cell, Table};
use crate::asym::{high_purity_fit, mixed_asymptote, mixed_gaussian_fit, Order};
use crate::error::{Error, Result};
use crate::mixed::BlockStructure;
use crate::par::{map_collect, Execution};
use crate::universal::{me_universal_all, CoeffSource};

/// Copy numbers `n = m` plotted against purity.
pub const FIG1_COPIES: [u32; 3] = [3, 11, 29];
/// Purities plotted against `n = m`.
pub const FIG2_PURITIES: [f64; 4] = [0.2, 0.5, 0.7, 1.0];
pub const FIG2_MAX_COPIES: u32 = 30;
/// Program copy numbers for the `n × 1 × n` curves.
pub const FIG3_COPIES: [u32; 2] = [20, 79];
pub const FIG4_MAX_COPIES: u32 = 26;

/// `0, 0.01, …, 1`.
pub fn purity_grid() -> Vec<f64> {
    (0..=100).map(|k| f64::from(k) / 100.0).collect()
}

pub fn figure(id: u8, exec: Execution) -> Result<Table> {
    match id {
        1 => purity_sweep(exec),
        2 => copy_sweep(exec),
        3 => data_one_sweep(exec),
        4 => priors(exec),
        _ => Err(Error::InvalidArgument(format!("figure id must be 1-4, got {id}"))),
    }
}

/// Error probability on a shared block structure for every grid purity.
fn along_purity(structure: &BlockStructure, grid: &[f64], exec: Execution) -> Result<Vec<f64>> {
    map_collect(exec, grid, |&r| {
        structure.error_probability(&CoeffSource::FixedPurity(r), Execution::Sequential)
    })
    .into_iter()
    .collect()
}

fn purity_sweep(exec: Execution) -> Result<Table> {
    let mut table = Table::new(&["n", "r", "p_me", "gaussian_fit", "high_purity_fit"]);
    let grid = purity_grid();
    for n in FIG1_COPIES {
        let structure = BlockStructure::with_execution(n, n, exec)?;
        let values = along_purity(&structure, &grid, exec)?;
        for (&r, p) in grid.iter().zip(values) {
            table.push(vec![
                n.into(),
                r.into(),
                p.into(),
                mixed_gaussian_fit(n, r)?.into(),
                high_purity_fit(n, r)?.into(),
            ]);
        }
    }
    Ok(table)
}

fn copy_sweep(exec: Execution) -> Result<Table> {
    let mut table = Table::new(&["r", "n", "p_me", "high_purity_fit"]);
    let copies: Vec<u32> = (1..=FIG2_MAX_COPIES).collect();
    let rows = map_collect(exec, &copies, |&n| -> Result<Vec<f64>> {
        let structure = BlockStructure::with_execution(n, n, Execution::Sequential)?;
        FIG2_PURITIES
            .iter()
            .map(|&r| structure.error_probability(&CoeffSource::FixedPurity(r), Execution::Sequential))
            .collect()
    });
    let rows: Vec<Vec<f64>> = rows.into_iter().collect::<Result<_>>()?;
    for (i, &r) in FIG2_PURITIES.iter().enumerate() {
        for (&n, values) in copies.iter().zip(&rows) {
            table.push(vec![r.into(), n.into(), values[i].into(), high_purity_fit(n, r)?.into()]);
        }
    }
    Ok(table)
}

fn data_one_sweep(exec: Execution) -> Result<Table> {
    let mut table = Table::new(&["n", "r", "p_me", "subleading", "leading"]);
    let grid = purity_grid();
    for n in FIG3_COPIES {
        let structure = BlockStructure::with_execution(n, 1, exec)?;
        let values = along_purity(&structure, &grid, exec)?;
        for (&r, p) in grid.iter().zip(values) {
            table.push(vec![
                n.into(),
                r.into(),
                p.into(),
                Cell::from(mixed_asymptote(n, r, Order::Subleading).ok()),
                mixed_asymptote(n, r, Order::Leading)?.into(),
            ]);
        }
    }
    Ok(table)
}

fn priors(exec: Execution) -> Result<Table> {
    let mut table = Table::new(&["n", "p_hard_sphere", "p_bures", "p_chernoff"]);
    let copies: Vec<u32> = (1..=FIG4_MAX_COPIES).collect();
    let rows = map_collect(exec, &copies, |&n| me_universal_all(n, n, Execution::Sequential));
    for (&n, row) in copies.iter().zip(rows) {
        let [hard, bures, chernoff] = row?;
        table.push(vec![n.into(), hard.into(), bures.into(), chernoff.into()]);
    }
    Ok(table)
}
