//! Harness plumbing: worker-count invariance, report files on disk, and
//! deterministic factorial subsampling.

use palmgrove_sim::{
    run_design, run_full_factorial, run_star_design, Method, RawRow, RunOptions, Scenario,
    SimConfig,
};

fn metric_fingerprint(rows: &[RawRow]) -> Vec<(usize, usize, String, u64, String)> {
    // Everything except wall time, which legitimately varies run to run.
    rows.iter()
        .map(|r| {
            let outcome = match &r.outcome {
                Ok(m) => format!(
                    "{}|{}|{}|{:?}",
                    m.subgroups, m.ari, m.regime_accuracy, m.treatment_mae
                ),
                Err(e) => format!("err:{e}"),
            };
            (r.scenario_id, r.rep, r.method.to_string(), r.seed, outcome)
        })
        .collect()
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let scenarios = vec![
        Scenario {
            id: 0,
            label: "a".into(),
            config: SimConfig {
                n: 150,
                m: 5,
                delta_beta: 1.2,
                ..SimConfig::default()
            },
        },
        Scenario {
            id: 1,
            label: "b".into(),
            config: SimConfig {
                n: 150,
                m: 5,
                delta_beta: 0.3,
                ..SimConfig::default()
            },
        },
    ];
    let base = RunOptions {
        reps: 3,
        methods: vec![Method::Palm, Method::Otr],
        master_seed: 17,
        ..RunOptions::default()
    };
    let serial = run_design(&scenarios, &RunOptions { jobs: 1, ..base.clone() }).unwrap();
    let parallel = run_design(&scenarios, &RunOptions { jobs: 4, ..base.clone() }).unwrap();
    assert_eq!(metric_fingerprint(&serial), metric_fingerprint(&parallel));
}

#[test]
fn master_seed_changes_replication_streams() {
    let scenarios = vec![Scenario {
        id: 0,
        label: "a".into(),
        config: SimConfig {
            n: 120,
            m: 4,
            ..SimConfig::default()
        },
    }];
    let opts_a = RunOptions {
        reps: 2,
        methods: vec![Method::LmTree2],
        master_seed: 1,
        ..RunOptions::default()
    };
    let opts_b = RunOptions {
        master_seed: 2,
        ..opts_a.clone()
    };
    let a = run_design(&scenarios, &opts_a).unwrap();
    let b = run_design(&scenarios, &opts_b).unwrap();
    assert_ne!(a[0].seed, b[0].seed);
    let again = run_design(&scenarios, &opts_a).unwrap();
    assert_eq!(metric_fingerprint(&a), metric_fingerprint(&again));
}

#[test]
fn star_run_writes_all_report_files() {
    let dir = tempfile::tempdir().unwrap();
    // repurpose the star runner at minimal cost: one rep, one cheap method
    let opts = RunOptions {
        reps: 1,
        methods: vec![Method::Otr],
        ..RunOptions::default()
    };
    let report = run_star_design(&opts, dir.path()).unwrap();
    assert_eq!(report.raw.len(), 22);
    assert_eq!(report.aggregate.len(), 22);
    let names: Vec<String> = report
        .files
        .iter()
        .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
        .collect();
    assert_eq!(names, vec!["star_raw.csv", "star_aggregate.csv", "star_timing.csv"]);
    for file in &report.files {
        assert!(file.exists());
        let mut reader = csv::Reader::from_path(file).unwrap();
        assert!(reader.records().next().is_some(), "{file:?} has no data rows");
    }
    // One aggregate row per scenario; single rep means no standard error.
    assert!(report.aggregate.iter().all(|a| a.n_ok == 1 && a.n_failed == 0));
    assert!(report.aggregate.iter().all(|a| a.ari.unwrap().se.is_none()));
}

#[test]
fn factorial_subsample_is_reproducible_and_writes_marginals() {
    let dir = tempfile::tempdir().unwrap();
    let opts = RunOptions {
        reps: 1,
        methods: vec![Method::Otr],
        ..RunOptions::default()
    };
    // A tiny fraction keeps the runtime down; the seed pins the subset.
    let report = run_full_factorial(&opts, Some((0.002, 3)), dir.path()).unwrap();
    assert!(!report.raw.is_empty());
    assert!(report.raw.len() < 200);
    let ids: Vec<usize> = report.raw.iter().map(|r| r.scenario_id).collect();
    let report2 = run_full_factorial(&opts, Some((0.002, 3)), dir.path()).unwrap();
    let ids2: Vec<usize> = report2.raw.iter().map(|r| r.scenario_id).collect();
    assert_eq!(ids, ids2);
    assert!(report
        .files
        .iter()
        .any(|p| p.file_name().unwrap() == "factorial_marginal.csv"));
    let marginal = report
        .files
        .iter()
        .find(|p| p.file_name().unwrap() == "factorial_marginal.csv")
        .unwrap();
    let mut reader = csv::Reader::from_path(marginal).unwrap();
    let headers: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(headers[..5], ["p", "delta_beta", "n", "qualitative", "method"]);
    assert!(reader.records().count() >= 1);
}
