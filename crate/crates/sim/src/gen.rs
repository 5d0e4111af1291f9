//! Dataset generation: a balanced binary treatment, equicorrelated
//! gaussian characteristics, and a gaussian response whose treatment
//! effect follows a tree over the predictive factors.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use palmgrove_core::{Column, Dataset};

use crate::config::{SimConfig, SimTruth};
use crate::error::Result;

/// Correlation between any two distinct characteristics.
pub const Z_CORRELATION: f64 = 0.2;

/// Draws one dataset with columns `y`, `xa`, `z1..zm`. Identical configs
/// (seed included) produce bit-identical datasets.
pub fn gen_dataset(cfg: &SimConfig) -> Result<(Dataset, SimTruth)> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (n, m) = (cfg.n, cfg.m);

    let xa: Vec<f64> = (0..n)
        .map(|_| if rng.gen::<bool>() { 1.0 } else { 0.0 })
        .collect();

    // Equicorrelated draws via the symmetric square root of
    // (1 - rho) I + rho 11^T: scale the mean direction by
    // sqrt(1 + (m - 1) rho) and the rest by sqrt(1 - rho).
    let c_mean = (1.0 + (m as f64 - 1.0) * Z_CORRELATION).sqrt();
    let c_resid = (1.0 - Z_CORRELATION).sqrt();
    let mut z = vec![vec![0.0f64; n]; m];
    let mut eps = vec![0.0f64; m];
    for i in 0..n {
        for e in eps.iter_mut() {
            *e = rng.sample(StandardNormal);
        }
        let mean = eps.iter().sum::<f64>() / m as f64;
        for j in 0..m {
            z[j][i] = c_resid * eps[j] + (c_mean - c_resid) * mean;
        }
    }

    let chain = cfg.effect_chain();
    let error_sd = cfg.error_scale.sqrt();
    let mut true_effects = Vec::with_capacity(n);
    let mut true_partition = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    let mut z_row = vec![0.0f64; cfg.p];
    for i in 0..n {
        for j in 0..cfg.p {
            z_row[j] = z[j][i];
        }
        let group = cfg.subgroup_of(&z_row);
        let beta = chain[group - 1];
        let mut mean = xa[i] * beta;
        for k in 0..cfg.q {
            mean += z[cfg.p + k][i];
        }
        let u: f64 = rng.sample(StandardNormal);
        y.push(mean + error_sd * u);
        true_effects.push(beta);
        true_partition.push(group);
    }

    let mut columns = Vec::with_capacity(m + 2);
    columns.push(Column::numeric("y", y));
    columns.push(Column::numeric("xa", xa));
    for (j, values) in z.into_iter().enumerate() {
        columns.push(Column::numeric(format!("z{}", j + 1), values));
    }
    let dataset = Dataset::new(columns)?;
    let truth = SimTruth {
        true_effects,
        true_partition,
        gamma: vec![1.0; cfg.q],
    };
    Ok((dataset, truth))
}
