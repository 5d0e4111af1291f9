//! Result rows, aggregation and CSV emission.

use std::collections::BTreeMap;
use std::path::Path;

use crate::config::SimConfig;
use crate::error::Result;
use crate::methods::{Method, RepMetrics};

/// One (scenario, method, replication) outcome. Failures carry the error
/// text and are excluded from every aggregate except the failure count.
#[derive(Debug, Clone)]
pub struct RawRow {
    pub scenario_id: usize,
    pub label: String,
    pub config: SimConfig,
    pub method: Method,
    pub rep: usize,
    /// Seed of this replication's data stream.
    pub seed: u64,
    pub outcome: std::result::Result<RepMetrics, String>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanSe {
    pub mean: f64,
    /// Standard error of the mean; absent with fewer than two values.
    pub se: Option<f64>,
}

/// Per-(scenario, method) summary over successful replications.
#[derive(Debug, Clone)]
pub struct AggregateRow {
    pub scenario_id: usize,
    pub label: String,
    pub config: SimConfig,
    pub method: Method,
    pub n_ok: usize,
    pub n_failed: usize,
    pub subgroups: Option<MeanSe>,
    pub ari: Option<MeanSe>,
    pub regime_accuracy: Option<MeanSe>,
    pub treatment_mae: Option<MeanSe>,
    pub fit_seconds: Option<MeanSe>,
}

pub fn mean_se(values: &[f64]) -> Option<MeanSe> {
    if values.is_empty() {
        return None;
    }
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    let se = if values.len() >= 2 {
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
        Some((var / k).sqrt())
    } else {
        None
    };
    Some(MeanSe { mean, se })
}

/// Linear-interpolation quantile of an ascending slice.
pub fn quantile(sorted: &[f64], p: f64) -> f64 {
    assert!(!sorted.is_empty(), "quantile of empty slice");
    assert!((0.0..=1.0).contains(&p), "p {p} outside [0, 1]");
    let h = p * (sorted.len() - 1) as f64;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Folds sorted raw rows into per-(scenario, method) aggregates, ordered
/// by scenario id then method.
pub fn aggregate_rows(raw: &[RawRow]) -> Vec<AggregateRow> {
    let mut groups: BTreeMap<(usize, Method), Vec<&RawRow>> = BTreeMap::new();
    for row in raw {
        groups.entry((row.scenario_id, row.method)).or_default().push(row);
    }
    groups
        .into_iter()
        .map(|((scenario_id, method), rows)| {
            let ok: Vec<&RepMetrics> = rows.iter().filter_map(|r| r.outcome.as_ref().ok()).collect();
            let n_failed = rows.len() - ok.len();
            let collect = |f: &dyn Fn(&RepMetrics) -> f64| -> Vec<f64> { ok.iter().map(|m| f(m)).collect() };
            let maes: Vec<f64> = ok.iter().filter_map(|m| m.treatment_mae).collect();
            AggregateRow {
                scenario_id,
                label: rows[0].label.clone(),
                config: rows[0].config.clone(),
                method,
                n_ok: ok.len(),
                n_failed,
                subgroups: mean_se(&collect(&|m| m.subgroups as f64)),
                ari: mean_se(&collect(&|m| m.ari)),
                regime_accuracy: mean_se(&collect(&|m| m.regime_accuracy)),
                treatment_mae: mean_se(&maes),
                fit_seconds: mean_se(&collect(&|m| m.fit_seconds)),
            }
        })
        .collect()
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn qual_str(qualitative: bool) -> &'static str {
    if qualitative {
        "yes"
    } else {
        "no"
    }
}

fn config_fields(cfg: &SimConfig) -> [String; 7] {
    [
        cfg.delta_beta.to_string(),
        cfg.n.to_string(),
        qual_str(cfg.qualitative).to_string(),
        cfg.m.to_string(),
        cfg.p.to_string(),
        cfg.q.to_string(),
        cfg.error_scale.to_string(),
    ]
}

pub const RAW_HEADER: [&str; 18] = [
    "scenario_id",
    "label",
    "delta_beta",
    "n",
    "qualitative",
    "m",
    "p",
    "q",
    "error_scale",
    "method",
    "rep",
    "seed",
    "subgroups",
    "ari",
    "regime_accuracy",
    "treatment_mae",
    "fit_seconds",
    "error",
];

pub fn write_raw_csv(path: &Path, rows: &[RawRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(RAW_HEADER)?;
    for row in rows {
        let cfg = config_fields(&row.config);
        let mut record: Vec<String> = vec![row.scenario_id.to_string(), row.label.clone()];
        record.extend(cfg);
        record.push(row.method.to_string());
        record.push(row.rep.to_string());
        record.push(row.seed.to_string());
        match &row.outcome {
            Ok(m) => {
                record.push(m.subgroups.to_string());
                record.push(m.ari.to_string());
                record.push(m.regime_accuracy.to_string());
                record.push(fmt_opt(m.treatment_mae));
                record.push(m.fit_seconds.to_string());
                record.push(String::new());
            }
            Err(reason) => {
                record.extend(std::iter::repeat(String::new()).take(5));
                record.push(reason.clone());
            }
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub const AGGREGATE_HEADER: [&str; 22] = [
    "scenario_id",
    "label",
    "delta_beta",
    "n",
    "qualitative",
    "m",
    "p",
    "q",
    "error_scale",
    "method",
    "n_reps",
    "n_failed",
    "mean_subgroups",
    "se_subgroups",
    "mean_ari",
    "se_ari",
    "mean_regime_accuracy",
    "se_regime_accuracy",
    "mean_treatment_mae",
    "se_treatment_mae",
    "mean_fit_seconds",
    "se_fit_seconds",
];

pub fn write_aggregate_csv(path: &Path, rows: &[AggregateRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(AGGREGATE_HEADER)?;
    for row in rows {
        let cfg = config_fields(&row.config);
        let mut record: Vec<String> = vec![row.scenario_id.to_string(), row.label.clone()];
        record.extend(cfg);
        record.push(row.method.to_string());
        record.push(row.n_ok.to_string());
        record.push(row.n_failed.to_string());
        for stat in [
            &row.subgroups,
            &row.ari,
            &row.regime_accuracy,
            &row.treatment_mae,
            &row.fit_seconds,
        ] {
            record.push(fmt_opt(stat.map(|s| s.mean)));
            record.push(fmt_opt(stat.and_then(|s| s.se)));
        }
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub const TIMING_HEADER: [&str; 7] = [
    "method",
    "n_fits",
    "min_seconds",
    "q25_seconds",
    "median_seconds",
    "q75_seconds",
    "max_seconds",
];

/// Per-method fit-time quantiles (0/25/50/75/100%) over successful rows.
pub fn write_timing_csv(path: &Path, raw: &[RawRow]) -> Result<()> {
    let mut times: BTreeMap<Method, Vec<f64>> = BTreeMap::new();
    for row in raw {
        if let Ok(m) = &row.outcome {
            times.entry(row.method).or_default().push(m.fit_seconds);
        }
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(TIMING_HEADER)?;
    for (method, mut secs) in times {
        secs.sort_by(|a, b| a.partial_cmp(b).expect("finite times"));
        let record = vec![
            method.to_string(),
            secs.len().to_string(),
            quantile(&secs, 0.0).to_string(),
            quantile(&secs, 0.25).to_string(),
            quantile(&secs, 0.5).to_string(),
            quantile(&secs, 0.75).to_string(),
            quantile(&secs, 1.0).to_string(),
        ];
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}

pub const MARGINAL_HEADER: [&str; 10] = [
    "p",
    "delta_beta",
    "n",
    "qualitative",
    "method",
    "n_reps",
    "mean_subgroups",
    "mean_ari",
    "mean_regime_accuracy",
    "mean_treatment_mae",
];

/// Aggregates over m and q: means per (p, delta_beta, n, qualitative,
/// method) cell for the factorial report.
pub fn write_marginal_csv(path: &Path, raw: &[RawRow]) -> Result<()> {
    // Positive floats order the same as their bit patterns.
    type Key = (usize, u64, usize, bool, Method);
    let mut groups: BTreeMap<Key, Vec<&RepMetrics>> = BTreeMap::new();
    for row in raw {
        if let Ok(m) = &row.outcome {
            let cfg = &row.config;
            let key = (cfg.p, cfg.delta_beta.to_bits(), cfg.n, cfg.qualitative, row.method);
            groups.entry(key).or_default().push(m);
        }
    }
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(MARGINAL_HEADER)?;
    for ((p, delta_bits, n, qualitative, method), ms) in groups {
        let mean = |f: &dyn Fn(&RepMetrics) -> f64| -> f64 {
            ms.iter().map(|m| f(m)).sum::<f64>() / ms.len() as f64
        };
        let maes: Vec<f64> = ms.iter().filter_map(|m| m.treatment_mae).collect();
        let record = vec![
            p.to_string(),
            f64::from_bits(delta_bits).to_string(),
            n.to_string(),
            qual_str(qualitative).to_string(),
            method.to_string(),
            ms.len().to_string(),
            mean(&|m| m.subgroups as f64).to_string(),
            mean(&|m| m.ari).to_string(),
            mean(&|m| m.regime_accuracy).to_string(),
            fmt_opt(mean_se(&maes).map(|s| s.mean)),
        ];
        w.write_record(&record)?;
    }
    w.flush()?;
    Ok(())
}
