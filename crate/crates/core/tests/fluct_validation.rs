//! Statistical validation of the parameter-instability tests: p-values
//! must be uniform when the model is stable, detect real coefficient
//! shifts, and ignore transformations that cannot carry information.

use ndarray::{Array1, Array2};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use palmgrove_core::family::Family;
use palmgrove_core::fluct::select_split_variable;
use palmgrove_core::glm::fit_glm;
use palmgrove_core::{Column, Dataset};

const ALPHA: f64 = 0.05;
const TRIM: f64 = 0.1;

fn design_with_slope(x1: &[f64]) -> Array2<f64> {
    let n = x1.len();
    let mut x = Array2::zeros((n, 2));
    for i in 0..n {
        x[[i, 0]] = 1.0;
        x[[i, 1]] = x1[i];
    }
    x
}

/// Kolmogorov-Smirnov distance against the uniform distribution.
fn ks_uniform(pvals: &mut [f64]) -> f64 {
    pvals.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = pvals.len() as f64;
    pvals
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let hi = ((i + 1) as f64 / n - p).abs();
            let lo = (p - i as f64 / n).abs();
            hi.max(lo)
        })
        .fold(0.0, f64::max)
}

fn null_pvalue(rng: &mut ChaCha8Rng, n: usize, categorical: bool) -> f64 {
    let x1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let y: Vec<f64> = x1
        .iter()
        .map(|&v| 0.5 + v + rng.sample::<f64, _>(StandardNormal))
        .collect();
    let z_col = if categorical {
        let names = ["a", "b", "c", "d"];
        let z: Vec<&str> = (0..n).map(|_| names[rng.gen_range(0..4)]).collect();
        Column::categorical("z1", &z)
    } else {
        Column::numeric("z1", (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect())
    };
    let ds = Dataset::new(vec![
        Column::numeric("y", y.clone()),
        Column::numeric("x1", x1.clone()),
        z_col,
    ])
    .unwrap();
    let fit = fit_glm(
        &design_with_slope(&x1),
        &Array1::from(y),
        Family::Gaussian,
        None,
        None,
        None,
    )
    .unwrap();
    let (_, results) =
        select_split_variable(&fit, &ds, &["z1".to_string()], ALPHA, TRIM).unwrap();
    assert!(results[0].testable);
    results[0].p_value
}

#[test]
fn ordered_test_pvalues_uniform_under_stability() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    // Moderate n keeps the asymptotic approximation tight enough for a
    // sharp uniformity bound; small samples are visibly conservative.
    let mut pvals: Vec<f64> = (0..500).map(|_| null_pvalue(&mut rng, 400, false)).collect();
    let ks = ks_uniform(&mut pvals);
    assert!(ks < 0.08, "KS distance {ks} too large for a uniform sample");
    // No gross tail distortion either.
    let small = pvals.iter().filter(|&&p| p < 0.05).count() as f64 / 500.0;
    assert!((0.01..=0.10).contains(&small), "rejection rate {small}");
}

#[test]
fn categorical_test_pvalues_uniform_under_stability() {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut pvals: Vec<f64> = (0..500).map(|_| null_pvalue(&mut rng, 100, true)).collect();
    let ks = ks_uniform(&mut pvals);
    assert!(ks < 0.08, "KS distance {ks} too large for a uniform sample");
}

#[test]
fn coefficient_shift_is_detected() {
    let mut rng = ChaCha8Rng::seed_from_u64(103);
    let mut rejections = 0;
    let reps = 100;
    for _ in 0..reps {
        let n = 200;
        let x1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let z1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let y: Vec<f64> = (0..n)
            .map(|i| {
                let shift = if z1[i] > 0.0 { 0.8 } else { 0.0 };
                0.5 + (1.0 + shift) * x1[i] + rng.sample::<f64, _>(StandardNormal)
            })
            .collect();
        let ds = Dataset::new(vec![
            Column::numeric("y", y.clone()),
            Column::numeric("x1", x1.clone()),
            Column::numeric("z1", z1),
        ])
        .unwrap();
        let fit = fit_glm(
            &design_with_slope(&x1),
            &Array1::from(y),
            Family::Gaussian,
            None,
            None,
            None,
        )
        .unwrap();
        let (winner, _) =
            select_split_variable(&fit, &ds, &["z1".to_string()], ALPHA, TRIM).unwrap();
        if winner.is_some() {
            rejections += 1;
        }
    }
    let rate = rejections as f64 / reps as f64;
    assert!(rate > 0.9, "power {rate} too low for a 0.8 slope shift");
}

#[test]
fn statistic_invariant_under_monotone_transform_of_z() {
    let mut rng = ChaCha8Rng::seed_from_u64(104);
    let n = 150;
    let x1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let z1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let y: Vec<f64> = (0..n)
        .map(|i| 0.5 + x1[i] + 0.5 * z1[i] * x1[i] + rng.sample::<f64, _>(StandardNormal))
        .collect();
    let fit = fit_glm(
        &design_with_slope(&x1),
        &Array1::from(y.clone()),
        Family::Gaussian,
        None,
        None,
        None,
    )
    .unwrap();

    let run = |z: Vec<f64>| {
        let ds = Dataset::new(vec![
            Column::numeric("y", y.clone()),
            Column::numeric("x1", x1.clone()),
            Column::numeric("z1", z),
        ])
        .unwrap();
        let (_, results) =
            select_split_variable(&fit, &ds, &["z1".to_string()], ALPHA, TRIM).unwrap();
        (results[0].statistic, results[0].p_value)
    };

    let (stat_raw, p_raw) = run(z1.clone());
    // The test only sees the ordering of z, so a strictly increasing
    // transform changes nothing at all.
    let (stat_exp, p_exp) = run(z1.iter().map(|&v| (v / 3.0).exp()).collect());
    assert_eq!(stat_raw, stat_exp);
    assert_eq!(p_raw, p_exp);
    let (stat_lin, p_lin) = run(z1.iter().map(|&v| 100.0 + 2.0 * v).collect());
    assert_eq!(stat_raw, stat_lin);
    assert_eq!(p_raw, p_lin);
}

#[test]
fn statistic_invariant_under_response_rescaling() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let n = 150;
    let x1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let z1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let y: Vec<f64> = (0..n)
        .map(|i| 0.5 + x1[i] + rng.sample::<f64, _>(StandardNormal))
        .collect();

    let stat_for = |scale: f64| {
        let ys: Vec<f64> = y.iter().map(|&v| scale * v).collect();
        let ds = Dataset::new(vec![
            Column::numeric("y", ys.clone()),
            Column::numeric("x1", x1.clone()),
            Column::numeric("z1", z1.clone()),
        ])
        .unwrap();
        let fit = fit_glm(
            &design_with_slope(&x1),
            &Array1::from(ys),
            Family::Gaussian,
            None,
            None,
            None,
        )
        .unwrap();
        let (_, results) =
            select_split_variable(&fit, &ds, &["z1".to_string()], ALPHA, TRIM).unwrap();
        results[0].statistic
    };

    let s1 = stat_for(1.0);
    let s5 = stat_for(5.0);
    // Scores scale with y but the whitening step removes the scale.
    assert!(
        (s1 - s5).abs() < 1e-8 * (1.0 + s1.abs()),
        "statistic changed under rescaling: {s1} vs {s5}"
    );
}

#[test]
fn bonferroni_counts_only_testable_variables() {
    let mut rng = ChaCha8Rng::seed_from_u64(106);
    let n = 120;
    let x1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let y: Vec<f64> = x1
        .iter()
        .map(|&v| 0.5 + v + rng.sample::<f64, _>(StandardNormal))
        .collect();
    let z1: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let z2: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let ds = Dataset::new(vec![
        Column::numeric("y", y.clone()),
        Column::numeric("x1", x1.clone()),
        Column::numeric("z1", z1),
        Column::numeric("z2", z2),
        Column::numeric("z3", vec![7.0; n]),
    ])
    .unwrap();
    let fit = fit_glm(
        &design_with_slope(&x1),
        &Array1::from(y),
        Family::Gaussian,
        None,
        None,
        None,
    )
    .unwrap();
    let vars: Vec<String> = vec!["z1".into(), "z2".into(), "z3".into()];
    let (_, results) = select_split_variable(&fit, &ds, &vars, ALPHA, TRIM).unwrap();

    // The constant column is untestable and must not inflate the
    // correction factor for the others.
    assert!(!results[2].testable);
    let j = results.iter().filter(|r| r.testable).count();
    assert_eq!(j, 2);
    for r in &results[..2] {
        assert!(r.testable);
        let expected = (j as f64 * r.p_value).min(1.0);
        assert!((r.p_adjusted - expected).abs() < 1e-15);
    }
}

