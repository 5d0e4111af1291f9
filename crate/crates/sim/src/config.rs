//! Simulation settings and the ground truth they induce.

use crate::error::{Result, SimError};

/// One simulation setting. Characteristics are named `z1..zm`; the first
/// `p` interact with the treatment, the next `q` act prognostically, the
/// rest are noise.
#[derive(Debug, Clone, PartialEq)]
pub struct SimConfig {
    /// Difference between treatment effects of adjacent subgroups.
    pub delta_beta: f64,
    pub n: usize,
    /// Whether the treatment effect changes sign across the first split.
    pub qualitative: bool,
    /// Number of characteristics.
    pub m: usize,
    /// Number of predictive factors; 0 yields a constant effect.
    pub p: usize,
    /// Number of prognostic factors.
    pub q: usize,
    /// Variance of the additive gaussian error.
    pub error_scale: f64,
    pub seed: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            delta_beta: 0.5,
            n: 300,
            qualitative: true,
            m: 30,
            p: 2,
            q: 2,
            error_scale: 1.5,
            seed: 0,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(SimError::InvalidConfig("n must be positive".into()));
        }
        if self.m == 0 {
            return Err(SimError::InvalidConfig("m must be positive".into()));
        }
        if self.p + self.q > self.m {
            return Err(SimError::InvalidConfig(format!(
                "p + q = {} exceeds m = {}",
                self.p + self.q,
                self.m
            )));
        }
        if !self.delta_beta.is_finite() {
            return Err(SimError::InvalidConfig(format!(
                "delta_beta {} is not finite",
                self.delta_beta
            )));
        }
        if !(self.error_scale > 0.0 && self.error_scale.is_finite()) {
            return Err(SimError::InvalidConfig(format!(
                "error_scale {} must be positive",
                self.error_scale
            )));
        }
        Ok(())
    }

    /// Subgroup treatment effects beta_1..beta_{p+1}. The first effect is
    /// -3/4 delta_beta in the qualitative case (so the chain crosses zero
    /// between the first two subgroups) and 0.5 otherwise; consecutive
    /// effects step by delta_beta. With p = 0 the effect is constant 0.5.
    pub fn effect_chain(&self) -> Vec<f64> {
        if self.p == 0 {
            return vec![0.5];
        }
        let beta1 = if self.qualitative {
            -0.75 * self.delta_beta
        } else {
            0.5
        };
        (0..=self.p)
            .map(|b| beta1 + b as f64 * self.delta_beta)
            .collect()
    }

    /// Subgroup label of one observation: the first predictive factor at
    /// or below zero decides, otherwise the overflow group p + 1. Label 1
    /// means z1 <= 0; label 2 means z1 > 0 and z2 <= 0; and so on.
    pub fn subgroup_of(&self, z_row: &[f64]) -> usize {
        debug_assert!(z_row.len() >= self.p);
        for j in 0..self.p {
            if z_row[j] <= 0.0 {
                return j + 1;
            }
        }
        self.p + 1
    }
}

/// Ground truth attached to a generated dataset.
#[derive(Debug, Clone)]
pub struct SimTruth {
    /// Per-observation treatment effect.
    pub true_effects: Vec<f64>,
    /// Per-observation subgroup label in 1..=p+1.
    pub true_partition: Vec<usize>,
    /// Prognostic coefficients, all ones.
    pub gamma: Vec<f64>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_chain_matches_handworked_values() {
        let cfg = SimConfig::default();
        let chain = cfg.effect_chain();
        assert_eq!(chain.len(), 3);
        assert!((chain[0] - -0.375).abs() < 1e-15);
        assert!((chain[1] - 0.125).abs() < 1e-15);
        assert!((chain[2] - 0.625).abs() < 1e-15);
    }

    #[test]
    fn quantitative_chain_starts_at_half() {
        let cfg = SimConfig {
            qualitative: false,
            delta_beta: 0.3,
            p: 3,
            ..SimConfig::default()
        };
        let chain = cfg.effect_chain();
        assert_eq!(chain.len(), 4);
        assert!((chain[0] - 0.5).abs() < 1e-15);
        for w in chain.windows(2) {
            assert!((w[1] - w[0] - 0.3).abs() < 1e-12);
            assert!(w[0] > 0.0 && w[1] > 0.0, "quantitative effects keep one sign");
        }
    }

    #[test]
    fn qualitative_chain_crosses_zero_exactly_once() {
        for &delta in &[0.1, 0.5, 1.5] {
            let cfg = SimConfig {
                delta_beta: delta,
                p: 4,
                m: 10,
                ..SimConfig::default()
            };
            let chain = cfg.effect_chain();
            let crossings = chain
                .windows(2)
                .filter(|w| (w[0] > 0.0) != (w[1] > 0.0))
                .count();
            assert_eq!(crossings, 1);
            assert!(chain[0] < 0.0 && chain[1] > 0.0);
        }
    }

    #[test]
    fn no_predictive_factors_yield_constant_half() {
        let cfg = SimConfig {
            p: 0,
            ..SimConfig::default()
        };
        assert_eq!(cfg.effect_chain(), vec![0.5]);
    }

    #[test]
    fn subgroup_rule_uses_first_nonpositive_factor() {
        let cfg = SimConfig {
            p: 2,
            ..SimConfig::default()
        };
        assert_eq!(cfg.subgroup_of(&[-0.1, 5.0]), 1);
        assert_eq!(cfg.subgroup_of(&[0.0, 5.0]), 1);
        assert_eq!(cfg.subgroup_of(&[0.4, -2.0]), 2);
        assert_eq!(cfg.subgroup_of(&[0.4, 0.7]), 3);
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut cfg = SimConfig::default();
        cfg.p = 20;
        cfg.q = 20;
        assert!(cfg.validate().is_err());
        let mut cfg = SimConfig::default();
        cfg.error_scale = 0.0;
        assert!(cfg.validate().is_err());
        let mut cfg = SimConfig::default();
        cfg.n = 0;
        assert!(cfg.validate().is_err());
        assert!(SimConfig::default().validate().is_ok());
    }
}
