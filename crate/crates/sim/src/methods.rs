//! Competing estimators and per-replication scoring.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use palmgrove_core::{
    adjusted_rand_index, fit_otr, fit_palm, grow_tree, otr_partition, otr_regime,
    predict_partition, regime_accuracy, treatment_effects, treatment_effects_tree, treatment_mae,
    Dataset, Family, OtrControl, PalmControl, RoleSpec, TreeControl,
};

use crate::config::{SimConfig, SimTruth};
use crate::error::{Result, SimError};

/// The estimators under comparison. `LmTree1` fits (1, xa) per leaf,
/// `LmTree2` additionally lets the prognostic coefficients vary per leaf,
/// `Palm` keeps them global, and `Otr` classifies the predicted benefit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Palm,
    LmTree1,
    LmTree2,
    Otr,
}

pub const ALL_METHODS: [Method; 4] = [Method::Palm, Method::LmTree1, Method::LmTree2, Method::Otr];

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Palm => "palm",
            Method::LmTree1 => "lmtree1",
            Method::LmTree2 => "lmtree2",
            Method::Otr => "otr",
        }
    }

    /// Whether the method estimates effect magnitudes; classification-only
    /// methods report no mean absolute error.
    pub fn estimates_effects(self) -> bool {
        self != Method::Otr
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = SimError;

    fn from_str(s: &str) -> Result<Method> {
        match s.to_ascii_lowercase().as_str() {
            "palm" => Ok(Method::Palm),
            "lmtree1" => Ok(Method::LmTree1),
            "lmtree2" => Ok(Method::LmTree2),
            "otr" => Ok(Method::Otr),
            other => Err(SimError::InvalidConfig(format!(
                "unknown method '{other}' (expected palm, lmtree1, lmtree2 or otr)"
            ))),
        }
    }
}

/// Model roles for a method under a setting. Every characteristic is a
/// split candidate for every method; prognostic columns additionally
/// enter as regressors where the method models them, hence the overlap.
pub fn role_spec(method: Method, cfg: &SimConfig) -> RoleSpec {
    let split_vars: Vec<String> = (1..=cfg.m).map(|j| format!("z{j}")).collect();
    let prognostic: Vec<String> = (0..cfg.q).map(|k| format!("z{}", cfg.p + k + 1)).collect();
    let mut spec = match method {
        Method::Palm | Method::Otr => RoleSpec::new(
            "y",
            vec!["xa".into()],
            prognostic,
            split_vars,
            Family::Gaussian,
        ),
        Method::LmTree1 => RoleSpec::new(
            "y",
            vec!["xa".into()],
            Vec::new(),
            split_vars,
            Family::Gaussian,
        ),
        Method::LmTree2 => {
            let mut varying = vec!["xa".to_string()];
            varying.extend(prognostic);
            RoleSpec::new("y", varying, Vec::new(), split_vars, Family::Gaussian)
        }
    };
    spec.allow_overlap = true;
    spec
}

/// Scores of one fitted model against the generating truth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepMetrics {
    pub subgroups: usize,
    pub ari: f64,
    pub regime_accuracy: f64,
    /// Absent for methods without effect estimates.
    pub treatment_mae: Option<f64>,
    /// Wall time of the model fit alone.
    pub fit_seconds: f64,
}

/// Fits one method on one dataset and scores it. `seed` feeds internal
/// randomness (the OTR cross-validation shuffle); the tree-based methods
/// are deterministic given the data.
pub fn evaluate_method(
    method: Method,
    ds: &Dataset,
    truth: &SimTruth,
    cfg: &SimConfig,
    seed: u64,
) -> Result<RepMetrics> {
    let spec = role_spec(method, cfg);
    match method {
        Method::Palm => {
            let control = PalmControl::default();
            let started = Instant::now();
            let model = fit_palm(ds, &spec, &control)?;
            let fit_seconds = started.elapsed().as_secs_f64();
            let partition = predict_partition(&model.tree, ds)?;
            let effects = treatment_effects(&model, ds, "xa")?;
            score_effect_model(
                &partition.labels,
                effects.as_slice().expect("contiguous"),
                model.n_leaves(),
                truth,
                fit_seconds,
            )
        }
        Method::LmTree1 | Method::LmTree2 => {
            let control = TreeControl::default();
            let started = Instant::now();
            let tree = grow_tree(ds, &spec, &control, None)?;
            let fit_seconds = started.elapsed().as_secs_f64();
            let partition = predict_partition(&tree, ds)?;
            let effects = treatment_effects_tree(&tree, ds, "xa", None)?;
            score_effect_model(
                &partition.labels,
                effects.as_slice().expect("contiguous"),
                tree.n_leaves(),
                truth,
                fit_seconds,
            )
        }
        Method::Otr => {
            let control = OtrControl {
                seed,
                ..OtrControl::default()
            };
            let started = Instant::now();
            let model = fit_otr(ds, &spec, &control)?;
            let fit_seconds = started.elapsed().as_secs_f64();
            let labels = otr_partition(&model.tree, ds)?;
            let regime = otr_regime(&model.tree, ds)?;
            let est: Vec<f64> = regime.iter().map(|&t| if t { 1.0 } else { -1.0 }).collect();
            Ok(RepMetrics {
                subgroups: model.tree.n_leaves(),
                ari: adjusted_rand_index(&labels, &truth.true_partition)?,
                regime_accuracy: regime_accuracy(&est, &truth.true_effects),
                treatment_mae: None,
                fit_seconds,
            })
        }
    }
}

fn score_effect_model(
    labels: &[usize],
    effects: &[f64],
    n_leaves: usize,
    truth: &SimTruth,
    fit_seconds: f64,
) -> Result<RepMetrics> {
    Ok(RepMetrics {
        subgroups: n_leaves,
        ari: adjusted_rand_index(labels, &truth.true_partition)?,
        regime_accuracy: regime_accuracy(effects, &truth.true_effects),
        treatment_mae: Some(treatment_mae(effects, &truth.true_effects)),
        fit_seconds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::gen_dataset;

    #[test]
    fn role_specs_assign_prognostic_columns_by_method() {
        let cfg = SimConfig::default();
        let palm = role_spec(Method::Palm, &cfg);
        assert_eq!(palm.varying, vec!["xa"]);
        assert_eq!(palm.fixed, vec!["z3", "z4"]);
        assert_eq!(palm.split_vars.len(), 30);
        assert!(palm.allow_overlap);

        let lm1 = role_spec(Method::LmTree1, &cfg);
        assert_eq!(lm1.varying, vec!["xa"]);
        assert!(lm1.fixed.is_empty());

        let lm2 = role_spec(Method::LmTree2, &cfg);
        assert_eq!(lm2.varying, vec!["xa", "z3", "z4"]);
        assert!(lm2.fixed.is_empty());

        let otr = role_spec(Method::Otr, &cfg);
        assert_eq!(otr.varying, vec!["xa"]);
        assert_eq!(otr.fixed, vec!["z3", "z4"]);
    }

    #[test]
    fn method_names_round_trip() {
        for m in ALL_METHODS {
            assert_eq!(m.name().parse::<Method>().unwrap(), m);
        }
        assert!("stima".parse::<Method>().is_err());
    }

    #[test]
    fn strong_signal_is_found_by_every_method() {
        let cfg = SimConfig {
            delta_beta: 1.5,
            n: 400,
            m: 6,
            seed: 5,
            ..SimConfig::default()
        };
        let (ds, truth) = gen_dataset(&cfg).unwrap();
        for method in ALL_METHODS {
            let metrics = evaluate_method(method, &ds, &truth, &cfg, 5).unwrap();
            assert!(metrics.subgroups >= 2, "{method} found no subgroups");
            assert!(metrics.ari.is_finite());
            assert!(metrics.regime_accuracy > 0.6, "{method} regime accuracy");
            assert_eq!(metrics.treatment_mae.is_some(), method.estimates_effects());
            assert!(metrics.fit_seconds >= 0.0);
        }
    }
}
