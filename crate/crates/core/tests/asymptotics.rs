//! Each closed-form limit is approached by the exact result along a sweep of
//! copy numbers, with gaps that shrink monotonically.

use progdisc::asym::{
    me_data_limit, me_program_limit, me_symmetric_asymptote, mixed_asymptote, symmetric_error_constant,
    ua_data_limit, ua_program_limit, Order,
};
use progdisc::mixed::me_mixed;
use progdisc::pure::{me_symmetric, ua_symmetric};
use progdisc::universal::CoeffSource;

fn assert_shrinking(what: &str, gaps: &[f64]) {
    assert!(gaps.windows(2).all(|w| w[1] < w[0]), "{what}: gaps {gaps:?}");
}

#[test]
fn infinite_program_ports() {
    for m in [1u32, 2, 4] {
        let limit = ua_program_limit(m).unwrap();
        let gaps: Vec<f64> = [100u32, 1000, 10_000]
            .iter()
            .map(|&n| (ua_symmetric(n, m).unwrap() - limit).abs())
            .collect();
        assert_shrinking(&format!("ua m={m}"), &gaps);

        let limit = me_program_limit(m, None).unwrap();
        let gaps: Vec<f64> = [25u32, 50, 100]
            .iter()
            .map(|&n| (me_symmetric(n, m).unwrap() - limit).abs())
            .collect();
        assert_shrinking(&format!("me m={m}"), &gaps);
    }
}

#[test]
fn first_correction_in_program_copies() {
    let gaps: Vec<f64> = [25u32, 50, 100]
        .iter()
        .map(|&n| (me_symmetric(n, 1).unwrap() - me_program_limit(1, Some(n)).unwrap()).abs())
        .collect();
    assert_shrinking("me subleading", &gaps);
    let leading = (me_symmetric(100, 1).unwrap() - me_program_limit(1, None).unwrap()).abs();
    assert!(gaps[2] < leading);
}

#[test]
fn infinite_data_port() {
    for n in [1u32, 3, 7] {
        let (ua, me) = (ua_data_limit(n).unwrap(), me_data_limit(n).unwrap());
        let ms = [10_000u32, 100_000, 1_000_000];
        let ua_gaps: Vec<f64> = ms.iter().map(|&m| (ua_symmetric(n, m).unwrap() - ua).abs()).collect();
        let me_gaps: Vec<f64> = ms.iter().map(|&m| (me_symmetric(n, m).unwrap() - me).abs()).collect();
        assert_shrinking(&format!("ua n={n}"), &ua_gaps);
        assert_shrinking(&format!("me n={n}"), &me_gaps);
    }
}

#[test]
fn equal_copies_everywhere() {
    let gaps: Vec<f64> = [125u32, 250, 500]
        .iter()
        .map(|&n| (f64::from(n) * me_symmetric(n, n).unwrap() - symmetric_error_constant()).abs())
        .collect();
    assert_shrinking("symmetric", &gaps);
    assert!((me_symmetric_asymptote(4).unwrap() - symmetric_error_constant() / 4.0).abs() < 1e-16);
}

#[test]
fn mixed_program_ports() {
    for r in [0.5, 0.9] {
        let ns = [20u32, 40, 80];
        let exact: Vec<f64> = ns
            .iter()
            .map(|&n| me_mixed(n, 1, CoeffSource::FixedPurity(r)).unwrap())
            .collect();
        let leading = mixed_asymptote(1, r, Order::Leading).unwrap();
        let lead_gaps: Vec<f64> = exact.iter().map(|p| (p - leading).abs()).collect();
        let sub_gaps: Vec<f64> = ns
            .iter()
            .zip(&exact)
            .map(|(&n, p)| (p - mixed_asymptote(n, r, Order::Subleading).unwrap()).abs())
            .collect();
        assert_shrinking(&format!("leading r={r}"), &lead_gaps);
        assert_shrinking(&format!("subleading r={r}"), &sub_gaps);
        assert!(sub_gaps.iter().zip(&lead_gaps).all(|(s, l)| s < l));
    }
    let pure = mixed_asymptote(7, 1.0, Order::Leading).unwrap();
    assert!((pure - me_program_limit(1, None).unwrap()).abs() < 1e-15);
}
