//! Statistical checks of the data generator: the characteristic
//! correlation structure, response composition, and effect chains across
//! settings.

use palmgrove_sim::{gen_dataset, SimConfig};

fn column(ds: &palmgrove_core::Dataset, name: &str) -> Vec<f64> {
    ds.numeric_column(name).unwrap().to_vec()
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

fn correlation(a: &[f64], b: &[f64]) -> f64 {
    let (ma, mb) = (mean(a), mean(b));
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for i in 0..a.len() {
        let (da, db) = (a[i] - ma, b[i] - mb);
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    cov / (va * vb).sqrt()
}

#[test]
fn characteristics_are_standard_with_pairwise_correlation_point_two() {
    let cfg = SimConfig {
        n: 100_000,
        m: 5,
        p: 2,
        q: 2,
        seed: 424242,
        ..SimConfig::default()
    };
    let (ds, _) = gen_dataset(&cfg).unwrap();
    let z: Vec<Vec<f64>> = (1..=5).map(|j| column(&ds, &format!("z{j}"))).collect();
    for j in 0..5 {
        let mu = mean(&z[j]);
        let var = z[j].iter().map(|v| (v - mu).powi(2)).sum::<f64>() / (cfg.n - 1) as f64;
        assert!(mu.abs() < 0.02, "mean of z{} is {mu}", j + 1);
        assert!((var - 1.0).abs() < 0.02, "variance of z{} is {var}", j + 1);
        for k in j + 1..5 {
            let r = correlation(&z[j], &z[k]);
            assert!(
                (r - 0.2).abs() < 0.01,
                "corr(z{}, z{}) = {r}",
                j + 1,
                k + 1
            );
        }
    }
}

#[test]
fn response_matches_its_construction_within_noise() {
    // With a huge n the group means identify the effect chain: the
    // treated-minus-control contrast inside each true subgroup, after
    // removing the prognostic part, estimates beta_b.
    let cfg = SimConfig {
        n: 200_000,
        m: 6,
        delta_beta: 0.5,
        seed: 99,
        ..SimConfig::default()
    };
    let (ds, truth) = gen_dataset(&cfg).unwrap();
    let y = column(&ds, "y");
    let xa = column(&ds, "xa");
    let z3 = column(&ds, "z3");
    let z4 = column(&ds, "z4");
    let chain = cfg.effect_chain();
    for b in 1..=3usize {
        let mut treated = Vec::new();
        let mut control = Vec::new();
        for i in 0..cfg.n {
            if truth.true_partition[i] != b {
                continue;
            }
            let resid = y[i] - z3[i] - z4[i];
            if xa[i] == 1.0 {
                treated.push(resid);
            } else {
                control.push(resid);
            }
        }
        let contrast = mean(&treated) - mean(&control);
        assert!(
            (contrast - chain[b - 1]).abs() < 0.05,
            "subgroup {b}: contrast {contrast} vs effect {}",
            chain[b - 1]
        );
        assert!(
            control.iter().sum::<f64>() / control.len() as f64 - 0.0 < 0.05,
            "control residual mean should be near zero"
        );
    }
}

#[test]
fn error_scale_controls_residual_variance() {
    for &scale in &[0.5, 1.5, 3.0] {
        let cfg = SimConfig {
            n: 120_000,
            m: 3,
            p: 0,
            q: 1,
            error_scale: scale,
            seed: 5,
            ..SimConfig::default()
        };
        let (ds, _) = gen_dataset(&cfg).unwrap();
        let y = column(&ds, "y");
        let xa = column(&ds, "xa");
        let z1 = column(&ds, "z1");
        // p = 0: y = 0.5 xa + z1 + u, so the residual is pure noise.
        let resid: Vec<f64> = (0..cfg.n).map(|i| y[i] - 0.5 * xa[i] - z1[i]).collect();
        let mu = mean(&resid);
        let var = resid.iter().map(|v| (v - mu).powi(2)).sum::<f64>() / (cfg.n - 1) as f64;
        assert!(
            (var - scale).abs() < 0.05 * scale.max(1.0),
            "error_scale {scale}: residual variance {var}"
        );
    }
}

#[test]
fn effect_chains_cover_all_grid_settings() {
    for p in 1..=4usize {
        for qualitative in [true, false] {
            for &delta in &[0.1, 0.7, 1.5] {
                let cfg = SimConfig {
                    p,
                    q: 1,
                    m: 10,
                    qualitative,
                    delta_beta: delta,
                    ..SimConfig::default()
                };
                let chain = cfg.effect_chain();
                assert_eq!(chain.len(), p + 1);
                for w in chain.windows(2) {
                    assert!((w[1] - w[0] - delta).abs() < 1e-12);
                }
                if qualitative {
                    assert!(chain[0] < 0.0 && chain[1] > 0.0);
                } else {
                    assert!(chain.iter().all(|&b| b > 0.0));
                }
            }
        }
    }
}

#[test]
fn partition_sizes_follow_the_recursive_halving() {
    // P(group 1) = P(z1 <= 0) = 1/2; group 2 is about a quarter under
    // correlation 0.2, and the overflow group takes the rest.
    let cfg = SimConfig {
        n: 100_000,
        m: 4,
        seed: 1234,
        ..SimConfig::default()
    };
    let (_, truth) = gen_dataset(&cfg).unwrap();
    let mut counts = [0usize; 3];
    for &b in &truth.true_partition {
        counts[b - 1] += 1;
    }
    let share1 = counts[0] as f64 / cfg.n as f64;
    assert!((share1 - 0.5).abs() < 0.01, "group 1 share {share1}");
    let share2 = counts[1] as f64 / cfg.n as f64;
    // Positive equicorrelation tilts P(z2 <= 0 | z1 > 0) below one half.
    assert!(share2 > 0.15 && share2 < 0.30, "group 2 share {share2}");
    assert!(counts[2] > 0);
}
