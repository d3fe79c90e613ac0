//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the
//! libtest harness so the report is always printed; exits non-zero on failure.

mod common;

use std::time::Instant;

use num_rational::BigRational;
use num_traits::{One, Zero};

use common::{coeff_direct, prior_average, Weight};
use progdisc::angular::{triangle, wigner6j, HalfInt};
use progdisc::asym::symmetric_error_constant;
use progdisc::cli::verification_sweep;
use progdisc::mixed::{me_mixed, BlockStructure, CoeffTable};
use progdisc::pure::{me_asymmetric, me_symmetric, ua_asymmetric, ua_symmetric, ua_symmetric_exact, PortLoad};
use progdisc::universal::{me_universal, CoeffSource, Prior};
use progdisc::Execution;

type Criterion = fn() -> Result<String, String>;

struct Report {
    results: Vec<(u32, bool)>,
}

impl Report {
    fn record(&mut self, id: u32, start: Instant, outcome: Result<String, String>) {
        let secs = start.elapsed().as_secs_f64();
        let (ok, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        println!("criterion {id}: {} ({detail}; {secs:.1} s)", if ok { "PASS" } else { "FAIL" });
        self.results.push((id, ok));
    }
}

fn check(cond: bool, detail: String) -> Result<String, String> {
    if cond {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn sci(values: &[f64]) -> String {
    values.iter().map(|v| format!("{v:.2e}")).collect::<Vec<_>>().join(" ")
}

fn golden_values() -> Result<String, String> {
    let ua = ua_symmetric_exact(1, 1).map_err(|e| e.to_string())?;
    let five_sixths = BigRational::new(5.into(), 6.into());
    let me = me_symmetric(1, 1).map_err(|e| e.to_string())?;
    let gap = (me - 0.5 * (1.0 - 1.0 / (2.0 * 3f64.sqrt()))).abs();
    check(ua == five_sixths && gap <= 1e-12, format!("P? = {ua}, ME gap {gap:.1e}"))
}

fn single_copy_mixed() -> Result<String, String> {
    let mut worst = 0.0f64;
    for i in 0..=100 {
        let r = f64::from(i) / 100.0;
        let p = me_mixed(1, 1, CoeffSource::FixedPurity(r)).map_err(|e| e.to_string())?;
        worst = worst.max((p - 0.5 * (1.0 - r * r / (2.0 * 3f64.sqrt()))).abs());
    }
    check(worst <= 1e-12, format!("max gap {worst:.1e} over 101 purities"))
}

fn oracle_equivalence() -> Result<String, String> {
    let checks = verification_sweep(12, Execution::Parallel).map_err(|e| e.to_string())?;
    let worst = checks.iter().map(|c| c.abs_diff()).fold(0.0, f64::max);
    let failed = checks.iter().filter(|c| !c.passes(1e-8)).count();
    check(failed == 0, format!("{} checks, {failed} failed, max diff {worst:.1e}", checks.len()))
}

fn program_port_limit() -> Result<String, String> {
    let mut ua_worst = 0.0f64;
    for m in [1u32, 2, 4] {
        let p = ua_symmetric(10_000, m).map_err(|e| e.to_string())?;
        ua_worst = ua_worst.max((p - 2.0 / (f64::from(m) + 2.0)).abs());
    }
    let gaps: Vec<f64> = [25u32, 50, 100]
        .iter()
        .map(|&n| {
            let n_f = f64::from(n);
            (me_symmetric(n, 1).unwrap() - (0.5 - (1.0 - 1.0 / n_f) / 3.0)).abs()
        })
        .collect();
    let shrinking = gaps.windows(2).all(|w| w[1] < w[0]);
    check(
        ua_worst < 1e-3 && shrinking && gaps[2] < 1e-3,
        format!("UA gap {ua_worst:.1e}, ME gaps {}", sci(&gaps)),
    )
}

fn data_port_limit() -> Result<String, String> {
    let mut worst = 0.0f64;
    for n in [1u32, 3, 7] {
        let n_f = f64::from(n);
        let ua = ua_symmetric(n, 1_000_000).map_err(|e| e.to_string())?;
        let me = me_symmetric(n, 1_000_000).map_err(|e| e.to_string())?;
        worst = worst.max((ua - 1.0 / (n_f + 1.0)).abs()).max((me - 0.5 / (n_f + 1.0)).abs());
    }
    check(worst < 1e-5, format!("max gap {worst:.1e}"))
}

fn symmetric_asymptote() -> Result<String, String> {
    let c = symmetric_error_constant();
    let rel: Vec<f64> = [125u32, 250, 500]
        .iter()
        .map(|&n| (f64::from(n) * me_symmetric(n, n).unwrap() - c).abs() / c)
        .collect();
    let shrinking = rel.windows(2).all(|w| w[1] < w[0]);
    check(shrinking && rel[2] < 0.02, format!("constant {c:.6}, relative gaps {}", sci(&rel)))
}

fn mixed_asymptote() -> Result<String, String> {
    let mut worst = 0.0f64;
    for r in [0.3, 0.5, 0.7, 0.9] {
        let p = me_mixed(79, 1, CoeffSource::FixedPurity(r)).map_err(|e| e.to_string())?;
        worst = worst.max((p - (0.5 - r / 3.0 + 1.0 / (3.0 * 79.0 * r))).abs());
    }
    check(worst < 1e-3, format!("max gap {worst:.1e}"))
}

fn universal_machine() -> Result<String, String> {
    let mut ordered = true;
    for n in 1..=10u32 {
        let [hard, bures, chernoff] = Prior::ALL.map(|p| me_universal(n, n, p).unwrap());
        ordered &= chernoff < bures && bures < hard;
    }
    let mut worst = 0.0f64;
    for n_total in 1..=8u32 {
        for tj in (n_total % 2..=n_total).step_by(2) {
            let j = HalfInt::from_twice(tj);
            for (prior, weight) in [
                (Prior::HardSphere, Weight::HardSphere),
                (Prior::Bures, Weight::Bures),
                (Prior::Chernoff, Weight::Chernoff),
            ] {
                let closed = prior.average_coeff(n_total, j).unwrap();
                let quad = prior_average(|r| coeff_direct(n_total, tj, r), weight);
                worst = worst.max((closed - quad).abs());
            }
        }
    }
    check(ordered && worst < 1e-10, format!("ordering {ordered}, max coefficient gap {worst:.1e}"))
}

fn six_j_orthogonality(max: u32) -> bool {
    let h = HalfInt::from_twice;
    for a in 0..=max {
        for b in 0..=max {
            for d in 0..=max {
                for e in 0..=max {
                    for c in 0..=max {
                        if !triangle(h(a), h(e), h(c)) || !triangle(h(d), h(b), h(c)) {
                            continue;
                        }
                        let mut sum = BigRational::zero();
                        for x in 0..=2 * max {
                            let w = BigRational::from_integer(((x + 1) * (c + 1)).into());
                            sum += w * wigner6j(h(a), h(b), h(x), h(d), h(e), h(c)).square();
                        }
                        if !sum.is_one() {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn structural_properties() -> Result<String, String> {
    let mut failures = Vec::new();
    let mut lambda_defect = 0.0f64;
    let mut trace_defect = 0.0f64;
    for n in 1..=12u32 {
        let s = BlockStructure::new(n, n).unwrap();
        for b in s.blocks() {
            if b.labels_ab.len() != b.labels_bc.len() {
                failures.push(format!("non-square block {:?}", b.label));
            }
            let d = b.dim();
            lambda_defect =
                lambda_defect.max((&b.lambda * b.lambda.transpose() - nalgebra::DMatrix::identity(d, d)).amax());
        }
        for r in [0.0, 0.3, 0.7, 1.0] {
            let (t1, t2) = s.traces(&s.table(&CoeffSource::FixedPurity(r)).unwrap());
            trace_defect = trace_defect.max((t1 - 1.0).abs()).max((t2 - 1.0).abs());
        }
        if n <= 8 {
            let p: Vec<f64> = (0..=20)
                .map(|i| s.error_probability(&CoeffSource::FixedPurity(f64::from(i) * 0.05), Execution::Parallel).unwrap())
                .collect();
            if !p.windows(2).all(|w| w[1] <= w[0] + 1e-15) {
                failures.push(format!("purity monotonicity at n={n}"));
            }
        }
    }
    let mut prior_defect = 0.0f64;
    for prior in Prior::ALL {
        for n_total in 1..=12u32 {
            let t = CoeffTable::build(&CoeffSource::from(prior), &[n_total]).unwrap();
            prior_defect = prior_defect.max((t.unit_trace(n_total) - 1.0).abs());
        }
    }
    for a in 1..=8u32 {
        for b in 1..=8u32 {
            for c in 1..=8u32 {
                let l = PortLoad::new(a, b, c).unwrap();
                if ua_asymmetric(l).unwrap() != ua_asymmetric(l.swapped()).unwrap()
                    || me_asymmetric(l).unwrap() != me_asymmetric(l.swapped()).unwrap()
                {
                    failures.push(format!("port swap at {a},{b},{c}"));
                }
            }
        }
    }
    if lambda_defect >= 1e-12 {
        failures.push(format!("recoupling orthogonality {lambda_defect:.1e}"));
    }
    if trace_defect >= 1e-12 || prior_defect >= 1e-10 {
        failures.push(format!("unit trace {trace_defect:.1e} / {prior_defect:.1e}"));
    }
    if !six_j_orthogonality(12) {
        failures.push("6-j orthogonality".into());
    }
    check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("recoupling defect {lambda_defect:.1e}, trace defects {trace_defect:.1e} / {prior_defect:.1e}")
        } else {
            failures.join("; ")
        },
    )
}

fn main() {
    let mut report = Report { results: Vec::new() };
    let criteria: [(u32, Criterion); 9] = [
        (1, golden_values),
        (2, single_copy_mixed),
        (3, oracle_equivalence),
        (4, program_port_limit),
        (5, data_port_limit),
        (6, symmetric_asymptote),
        (7, mixed_asymptote),
        (8, universal_machine),
        (9, structural_properties),
    ];
    for (id, run) in criteria {
        let start = Instant::now();
        report.record(id, start, run());
    }
    let failed: Vec<u32> = report.results.iter().filter(|(_, ok)| !ok).map(|(id, _)| *id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", report.results.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
