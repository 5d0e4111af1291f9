//! Experiment execution: deterministic per-replication seeds, a bounded
//! worker pool, and the design runners that write the report files.

use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::config::SimConfig;
use crate::design::{factorial_scenarios, star_scenarios, subsample_scenarios, type1_scenarios, Scenario};
use crate::error::{Result, SimError};
use crate::gen::gen_dataset;
use crate::methods::{evaluate_method, Method, ALL_METHODS};
use crate::report::{
    aggregate_rows, write_aggregate_csv, write_marginal_csv, write_raw_csv, write_timing_csv,
    AggregateRow, RawRow,
};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Seed of one replication's data stream. Mixing each key through a
/// finalizer keeps neighboring (scenario, rep) pairs uncorrelated and
/// makes results independent of execution order and worker count.
pub fn rep_seed(master: u64, scenario: u64, rep: u64) -> u64 {
    let s = splitmix64(master);
    let s = splitmix64(s ^ scenario);
    splitmix64(s ^ rep)
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub reps: usize,
    pub methods: Vec<Method>,
    /// Worker threads; 0 uses all available cores.
    pub jobs: usize,
    pub master_seed: u64,
    /// Print completion counts to stderr.
    pub progress: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            reps: 1,
            methods: ALL_METHODS.to_vec(),
            jobs: 0,
            master_seed: 0,
            progress: false,
        }
    }
}

impl RunOptions {
    pub fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            return Err(SimError::InvalidConfig("reps must be at least 1".into()));
        }
        if self.methods.is_empty() {
            return Err(SimError::InvalidConfig("no methods selected".into()));
        }
        Ok(())
    }
}

fn run_unit(sc: &Scenario, rep: usize, seed: u64, methods: &[Method]) -> Vec<RawRow> {
    let cfg = SimConfig {
        seed,
        ..sc.config.clone()
    };
    let generated = gen_dataset(&cfg);
    methods
        .iter()
        .map(|&method| {
            let outcome = match &generated {
                Ok((ds, truth)) => {
                    evaluate_method(method, ds, truth, &cfg, seed).map_err(|e| e.to_string())
                }
                Err(e) => Err(format!("data generation failed: {e}")),
            };
            RawRow {
                scenario_id: sc.id,
                label: sc.label.clone(),
                config: sc.config.clone(),
                method,
                rep,
                seed,
                outcome,
            }
        })
        .collect()
}

/// Runs every (scenario, replication) unit on a bounded worker pool. All
/// selected methods share each unit's dataset. Rows come back sorted by
/// (scenario, rep, method) regardless of scheduling.
pub fn run_design(scenarios: &[Scenario], opts: &RunOptions) -> Result<Vec<RawRow>> {
    opts.validate()?;
    for sc in scenarios {
        sc.config.validate()?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| SimError::Pool(e.to_string()))?;

    let units: Vec<(&Scenario, usize)> = scenarios
        .iter()
        .flat_map(|sc| (0..opts.reps).map(move |rep| (sc, rep)))
        .collect();
    let total = units.len();
    let done = AtomicUsize::new(0);
    let step = (total / 20).max(1);

    let mut rows: Vec<RawRow> = pool.install(|| {
        units
            .par_iter()
            .flat_map_iter(|&(sc, rep)| {
                let seed = rep_seed(opts.master_seed, sc.id as u64, rep as u64);
                let unit_rows = run_unit(sc, rep, seed, &opts.methods);
                let finished = done.fetch_add(1, Ordering::Relaxed) + 1;
                if opts.progress && (finished % step == 0 || finished == total) {
                    eprintln!("[sim] {finished}/{total} replications done");
                }
                unit_rows
            })
            .collect()
    });
    rows.sort_by(|a, b| {
        (a.scenario_id, a.rep, a.method).cmp(&(b.scenario_id, b.rep, b.method))
    });
    Ok(rows)
}

/// A completed design run plus where its report files went.
#[derive(Debug)]
pub struct DesignReport {
    pub raw: Vec<RawRow>,
    pub aggregate: Vec<AggregateRow>,
    pub files: Vec<PathBuf>,
}

fn write_reports(
    prefix: &str,
    raw: Vec<RawRow>,
    out_dir: &Path,
    with_marginal: bool,
) -> Result<DesignReport> {
    std::fs::create_dir_all(out_dir)?;
    let aggregate = aggregate_rows(&raw);
    let mut files = Vec::new();

    let raw_path = out_dir.join(format!("{prefix}_raw.csv"));
    write_raw_csv(&raw_path, &raw)?;
    files.push(raw_path);

    let agg_path = out_dir.join(format!("{prefix}_aggregate.csv"));
    write_aggregate_csv(&agg_path, &aggregate)?;
    files.push(agg_path);

    let timing_path = out_dir.join(format!("{prefix}_timing.csv"));
    write_timing_csv(&timing_path, &raw)?;
    files.push(timing_path);

    if with_marginal {
        let marginal_path = out_dir.join(format!("{prefix}_marginal.csv"));
        write_marginal_csv(&marginal_path, &raw)?;
        files.push(marginal_path);
    }

    Ok(DesignReport {
        raw,
        aggregate,
        files,
    })
}

/// One-variable-at-a-time design; writes star_raw.csv, star_aggregate.csv
/// and star_timing.csv under `out_dir`.
pub fn run_star_design(opts: &RunOptions, out_dir: &Path) -> Result<DesignReport> {
    let raw = run_design(&star_scenarios(), opts)?;
    write_reports("star", raw, out_dir, false)
}

/// Null design (p = 0) across sample sizes; any split is a false split.
pub fn run_type1_design(opts: &RunOptions, out_dir: &Path) -> Result<DesignReport> {
    let raw = run_design(&type1_scenarios(), opts)?;
    write_reports("type1", raw, out_dir, false)
}

/// Full factorial grid, optionally thinned to a seeded scenario
/// subsample; also writes the marginal table grouped by
/// (p, delta_beta, n, qualitative).
pub fn run_full_factorial(
    opts: &RunOptions,
    subsample: Option<(f64, u64)>,
    out_dir: &Path,
) -> Result<DesignReport> {
    let mut scenarios = factorial_scenarios();
    if let Some((fraction, seed)) = subsample {
        if !(0.0..=1.0).contains(&fraction) {
            return Err(SimError::InvalidConfig(format!(
                "subsample fraction {fraction} outside [0, 1]"
            )));
        }
        scenarios = subsample_scenarios(scenarios, fraction, seed);
    }
    let raw = run_design(&scenarios, opts)?;
    write_reports("factorial", raw, out_dir, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_differ_across_keys() {
        let mut seen = std::collections::HashSet::new();
        for scenario in 0..40u64 {
            for rep in 0..40u64 {
                assert!(seen.insert(rep_seed(7, scenario, rep)));
            }
        }
        assert_ne!(rep_seed(0, 0, 0), rep_seed(0, 0, 1));
        assert_ne!(rep_seed(0, 0, 0), rep_seed(0, 1, 0));
        assert_ne!(rep_seed(0, 0, 0), rep_seed(1, 0, 0));
    }

    #[test]
    fn rows_come_back_sorted_with_shared_seeds() {
        let scenarios = vec![
            Scenario {
                id: 1,
                label: "b".into(),
                config: SimConfig {
                    n: 120,
                    m: 4,
                    delta_beta: 1.5,
                    ..SimConfig::default()
                },
            },
            Scenario {
                id: 0,
                label: "a".into(),
                config: SimConfig {
                    n: 120,
                    m: 4,
                    delta_beta: 1.5,
                    ..SimConfig::default()
                },
            },
        ];
        let opts = RunOptions {
            reps: 2,
            methods: vec![Method::LmTree2, Method::Palm],
            jobs: 1,
            ..RunOptions::default()
        };
        let rows = run_design(&scenarios, &opts).unwrap();
        assert_eq!(rows.len(), 8);
        let keys: Vec<(usize, usize, Method)> =
            rows.iter().map(|r| (r.scenario_id, r.rep, r.method)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        // Methods within one unit share the replication seed.
        assert_eq!(rows[0].seed, rows[1].seed);
        assert_ne!(rows[0].seed, rows[2].seed);
        assert!(rows.iter().all(|r| r.outcome.is_ok()));
    }

    #[test]
    fn invalid_options_are_rejected() {
        let no_reps = RunOptions {
            reps: 0,
            ..RunOptions::default()
        };
        assert!(run_design(&[], &no_reps).is_err());
        let no_methods = RunOptions {
            methods: Vec::new(),
            ..RunOptions::default()
        };
        assert!(run_design(&[], &no_methods).is_err());
        let bad_fraction = run_full_factorial(
            &RunOptions::default(),
            Some((1.5, 0)),
            Path::new("/nonexistent"),
        );
        assert!(bad_fraction.is_err());
    }
}
