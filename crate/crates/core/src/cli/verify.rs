use serde::Serialize;

use super::table::Table;
use crate::error::{Error, Result};
use crate::mixed::me_mixed;
use crate::oracle::{self, Hypothesis, MIXED_QUBIT_LIMIT};
use crate::par::{map_collect, Execution};
use crate::pure::{me_asymmetric, me_symmetric, ua_asymmetric, ua_symmetric, PortLoad};
use crate::universal::CoeffSource;

/// Purities checked against the quadrature-built matrices.
pub const VERIFY_PURITIES: [f64; 3] = [0.2, 0.5, 0.9];

/// One closed-form value against its brute-force counterpart.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub load: (u32, u32, u32),
    pub r: Option<f64>,
    pub closed_form: f64,
    pub oracle: f64,
}

impl Check {
    pub fn abs_diff(&self) -> f64 {
        (self.closed_form - self.oracle).abs()
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.abs_diff() <= tol
    }
}

/// Every load with `n_a + n_b + n_c <= max_total`, in increasing total.
pub fn pure_loads(max_total: u32) -> Vec<PortLoad> {
    let mut loads = Vec::new();
    for total in 3..=max_total {
        for a in 1..total - 1 {
            for b in 1..total - a {
                loads.push(PortLoad { n_a: a, n_b: b, n_c: total - a - b });
            }
        }
    }
    loads
}

/// Every `(n, m)` with `2n + m <= max_total`.
pub fn mixed_loads(max_total: u32) -> Vec<(u32, u32)> {
    let mut loads = Vec::new();
    for n in 1..max_total.saturating_sub(1) / 2 + 1 {
        for m in 1..=max_total.saturating_sub(2 * n) {
            loads.push((n, m));
        }
    }
    loads
}

fn pure_checks(load: PortLoad) -> Result<Vec<Check>> {
    let triple = (load.n_a, load.n_b, load.n_c);
    let (s1, s2) = oracle::pure_pair(load)?;
    let ua = oracle::pure_ua(load)?;
    let me = oracle::helstrom(&s1, &s2)?;
    let check = |name, closed_form, oracle| Check {
        name,
        load: triple,
        r: None,
        closed_form,
        oracle,
    };
    let mut out = vec![
        check("pure-ua", ua_asymmetric(load)?, ua),
        check("pure-me", me_asymmetric(load)?, me),
    ];
    if load.n_a == load.n_c {
        let fid = oracle::fidelity(&s1, &s2)?;
        out.push(check("pure-ua-fidelity", ua_symmetric(load.n_a, load.n_b)?, fid));
        out.push(check("pure-me-symmetric", me_symmetric(load.n_a, load.n_b)?, me));
    }
    Ok(out)
}

fn mixed_checks(n: u32, m: u32) -> Result<Vec<Check>> {
    VERIFY_PURITIES
        .iter()
        .map(|&r| {
            let s1 = oracle::mixed_sigma_with(n, m, r, Hypothesis::First, 1, Execution::Sequential)?;
            let s2 = oracle::mixed_sigma_with(n, m, r, Hypothesis::Second, 1, Execution::Sequential)?;
            Ok(Check {
                name: "mixed-me",
                load: (n, m, n),
                r: Some(r),
                closed_form: me_mixed(n, m, CoeffSource::FixedPurity(r))?,
                oracle: oracle::helstrom_with(&s1, &s2, Execution::Sequential)?,
            })
        })
        .collect()
}

/// Closed forms against the brute-force oracle for all loads up to `max_total`
/// copies. Exceeding the oracle's dimension cap is an error before any work.
pub fn verification_sweep(max_total: u32, exec: Execution) -> Result<Vec<Check>> {
    if max_total > MIXED_QUBIT_LIMIT {
        return Err(Error::DimensionCap {
            qubits: max_total,
            limit: MIXED_QUBIT_LIMIT,
        });
    }
    let mut checks = Vec::new();
    for batch in map_collect(exec, &pure_loads(max_total), |&l| pure_checks(l)) {
        checks.extend(batch?);
    }
    for batch in map_collect(exec, &mixed_loads(max_total), |&(n, m)| mixed_checks(n, m)) {
        checks.extend(batch?);
    }
    Ok(checks)
}

pub fn checks_table(checks: &[Check], tol: f64) -> Table {
    let mut table = Table::new(&[
        "check",
        "n_a",
        "n_b",
        "n_c",
        "r",
        "closed_form",
        "oracle",
        "abs_diff",
        "pass",
    ]);
    for c in checks {
        table.push(vec![
            c.name.into(),
            c.load.0.into(),
            c.load.1.into(),
            c.load.2.into(),
            c.r.into(),
            c.closed_form.into(),
            c.oracle.into(),
            c.abs_diff().into(),
            c.passes(tol).into(),
        ]);
    }
    table
}
