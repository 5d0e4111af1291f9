//! Subcommand implementations, kept in the library so tests can call them
//! without spawning the binary.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;

use palmgrove_core::{
    fit_palm, predict_palm, predict_partition, predict_response, read_csv, treatment_effects,
    treatment_effects_tree, Column, Dataset, Family, PalmControl, RoleSpec, TreeControl,
};
use palmgrove_sim::{
    run_full_factorial, run_star_design, run_type1_design, Method, RunOptions, ALL_METHODS,
    DESK_FACTORIAL_REPS, DESK_FACTORIAL_SUBSAMPLE, DESK_STAR_REPS, DESK_TYPE1_REPS,
};

use crate::args::{Cli, Command, DesignName, FitArgs, PredictArgs, SimulateArgs};
use crate::cfgfile::{comma_list, load_config};
use crate::document::{
    document_from_palm, document_to_model, read_document, write_document, LoadedModel, SplitDoc,
    TreeDocument,
};
use crate::error::{output_io, CliError, Result};
use crate::render;

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fit(args) => cmd_fit(args),
        Command::Predict(args) => cmd_predict(args),
        Command::Simulate(args) => cmd_simulate(args),
    }
}

/// Flag value, else config-file value, for string-typed options.
fn str_option(
    flag: Option<String>,
    cfg: &HashMap<String, String>,
    key: &str,
) -> Option<String> {
    flag.or_else(|| cfg.get(key).cloned())
}

/// Flag value, else parsed config-file value, for numeric options.
fn parsed_option<T: std::str::FromStr>(
    flag: Option<T>,
    cfg: &HashMap<String, String>,
    key: &str,
) -> Result<Option<T>> {
    if flag.is_some() {
        return Ok(flag);
    }
    match cfg.get(key) {
        Some(v) => v
            .parse::<T>()
            .map(Some)
            .map_err(|_| CliError::Input(format!("config key `{key}`: cannot parse `{v}`"))),
        None => Ok(None),
    }
}

fn list_option(flag: Option<String>, cfg: &HashMap<String, String>, key: &str) -> Vec<String> {
    match str_option(flag, cfg, key) {
        Some(v) => comma_list(&v),
        None => Vec::new(),
    }
}

pub fn cmd_fit(args: FitArgs) -> Result<()> {
    let file_cfg = match &args.config {
        Some(p) => load_config(p)?,
        None => HashMap::new(),
    };

    let data = args
        .data
        .or_else(|| file_cfg.get("data").map(PathBuf::from))
        .ok_or_else(|| CliError::Input("missing --data (or `data` in the config file)".into()))?;
    let response = str_option(args.response, &file_cfg, "response")
        .ok_or_else(|| CliError::Input("missing --response (or `response` in the config file)".into()))?;
    let varying = list_option(args.varying, &file_cfg, "varying");
    let fixed = list_option(args.fixed, &file_cfg, "fixed");
    let split = list_option(args.split, &file_cfg, "split");
    if split.is_empty() {
        return Err(CliError::Input(
            "missing --split (or `split` in the config file); at least one candidate split variable is required".into(),
        ));
    }
    let family: Family = match str_option(args.family, &file_cfg, "family") {
        Some(s) => s.parse()?,
        None => Family::Gaussian,
    };
    let treatment = str_option(args.treatment, &file_cfg, "treatment");
    let alpha = parsed_option::<f64>(args.alpha, &file_cfg, "alpha")?;
    let min_size = parsed_option::<usize>(args.min_size, &file_cfg, "min-size")?;
    let trim = parsed_option::<f64>(args.trim, &file_cfg, "trim")?;
    let max_iter = parsed_option::<usize>(args.max_iter, &file_cfg, "max-iter")?;
    let out = args
        .out
        .or_else(|| file_cfg.get("out").map(PathBuf::from))
        .ok_or_else(|| CliError::Input("missing --out (or `out` in the config file)".into()))?;
    let dot = args.dot.or_else(|| file_cfg.get("dot").map(PathBuf::from));

    let spec = RoleSpec {
        response,
        varying,
        intercept: true,
        fixed,
        split_vars: split,
        family,
        allow_overlap: true,
    };

    let (ds, report) = read_csv(&data, &spec, &HashMap::new())?;
    if report.rejected_rows > 0 {
        eprintln!("note: skipped {} row(s) with missing values", report.rejected_rows);
    }

    let mut tree_control = TreeControl::default();
    if let Some(a) = alpha {
        tree_control.alpha = a;
    }
    if let Some(m) = min_size {
        tree_control.min_node_size = Some(m);
    }
    if let Some(t) = trim {
        tree_control.trim = t;
    }
    let mut control = PalmControl {
        tree_control,
        ..PalmControl::default()
    };
    if let Some(m) = max_iter {
        control.max_iter = m;
    }

    let model = fit_palm(&ds, &spec, &control)?;
    if let Some(t) = &treatment {
        if !model.tree.design_names.iter().any(|n| n == t) {
            return Err(CliError::Input(format!(
                "treatment `{t}` is not a fitted design column (have: {})",
                model.tree.design_names.join(", ")
            )));
        }
    }
    if !model.converged {
        eprintln!("warning: alternation stopped without converging; the saved model is the last iterate");
    }

    let doc = document_from_palm(&model, treatment.as_deref());
    write_document(&out, &doc)?;
    if let Some(dp) = &dot {
        std::fs::write(dp, render::to_dot(&doc)).map_err(|e| output_io(dp, e))?;
    }

    print!("{}", render::to_text(&doc));
    println!("wrote {}", out.display());
    if let Some(dp) = &dot {
        println!("wrote {}", dp.display());
    }
    Ok(())
}

/// Columns a serialized model needs from a prediction file: every varying
/// and fixed regressor plus every variable referenced by a split rule.
fn required_columns(doc: &TreeDocument) -> Vec<String> {
    fn push(cols: &mut Vec<String>, name: &str) {
        if !cols.iter().any(|c| c == name) {
            cols.push(name.to_string());
        }
    }
    let mut cols = Vec::new();
    for v in &doc.roles.varying {
        push(&mut cols, v);
    }
    for f in &doc.roles.fixed {
        push(&mut cols, f);
    }
    for node in &doc.nodes {
        if let Some(split) = &node.split {
            let var = match split {
                SplitDoc::Numeric { variable, .. } => variable,
                SplitDoc::Categorical { variable, .. } => variable,
            };
            push(&mut cols, var);
        }
    }
    cols
}

/// Columns that must be read as strings: categorical split variables, and
/// regressors whose design columns are `name=level` dummies.
fn categorical_columns(doc: &TreeDocument) -> HashSet<String> {
    let mut cats = HashSet::new();
    for node in &doc.nodes {
        if let Some(SplitDoc::Categorical { variable, .. }) = &node.split {
            cats.insert(variable.clone());
        }
    }
    let mut design_names: HashSet<&str> = HashSet::new();
    if let Some(first) = doc.nodes.first() {
        for c in &first.coefficients {
            design_names.insert(&c.name);
        }
    }
    for g in &doc.gamma {
        design_names.insert(&g.name);
    }
    for col in doc.roles.varying.iter().chain(doc.roles.fixed.iter()) {
        if design_names.contains(col.as_str()) {
            continue;
        }
        let prefix = format!("{col}=");
        if design_names.iter().any(|n| n.starts_with(&prefix)) {
            cats.insert(col.clone());
        }
    }
    cats
}

/// Mirrors the fit-side missing-cell convention.
fn is_missing(cell: &str) -> bool {
    let t = cell.trim();
    t.is_empty() || t.eq_ignore_ascii_case("na") || t.eq_ignore_ascii_case("n/a") || t.eq_ignore_ascii_case("nan")
}

enum Buf {
    Num(Vec<f64>),
    Cat(Vec<String>),
}

struct PredictInput {
    columns: Vec<Column>,
    /// Original 0-based row index of each kept row.
    kept: Vec<usize>,
    dropped: usize,
}

fn read_predict_csv(
    path: &std::path::Path,
    required: &[String],
    categorical: &HashSet<String>,
) -> Result<PredictInput> {
    let mut rdr = csv::Reader::from_path(path)
        .map_err(|e| CliError::Input(format!("cannot read `{}`: {e}", path.display())))?;
    let headers = rdr
        .headers()
        .map_err(|e| CliError::Input(format!("cannot read `{}`: {e}", path.display())))?
        .clone();
    let mut index: HashMap<&str, usize> = HashMap::new();
    for (j, h) in headers.iter().enumerate() {
        index.entry(h).or_insert(j);
    }
    let missing: Vec<&str> = required
        .iter()
        .filter(|c| !index.contains_key(c.as_str()))
        .map(String::as_str)
        .collect();
    if !missing.is_empty() {
        return Err(CliError::Input(format!(
            "`{}` is missing required column(s): {}",
            path.display(),
            missing.join(", ")
        )));
    }
    let positions: Vec<usize> = required.iter().map(|c| index[c.as_str()]).collect();
    let mut bufs: Vec<Buf> = required
        .iter()
        .map(|c| {
            if categorical.contains(c) {
                Buf::Cat(Vec::new())
            } else {
                Buf::Num(Vec::new())
            }
        })
        .collect();

    let mut kept = Vec::new();
    let mut dropped = 0usize;
    for (i, record) in rdr.records().enumerate() {
        let record =
            record.map_err(|e| CliError::Input(format!("`{}` row {}: {e}", path.display(), i + 1)))?;
        if positions.iter().any(|&j| is_missing(record.get(j).unwrap_or(""))) {
            dropped += 1;
            continue;
        }
        for ((buf, &j), name) in bufs.iter_mut().zip(&positions).zip(required) {
            let cell = record.get(j).unwrap_or("");
            match buf {
                Buf::Num(values) => {
                    let v: f64 = cell.trim().parse().map_err(|_| {
                        CliError::Input(format!(
                            "row {}, column `{name}`: cannot parse `{cell}` as a number",
                            i + 1
                        ))
                    })?;
                    if !v.is_finite() {
                        return Err(CliError::Input(format!(
                            "row {}, column `{name}`: non-finite value `{cell}`",
                            i + 1
                        )));
                    }
                    values.push(v);
                }
                Buf::Cat(values) => values.push(cell.to_string()),
            }
        }
        kept.push(i);
    }

    let columns = required
        .iter()
        .zip(bufs)
        .map(|(name, buf)| match buf {
            Buf::Num(values) => Column::numeric(name.clone(), values),
            Buf::Cat(values) => {
                let refs: Vec<&str> = values.iter().map(String::as_str).collect();
                Column::categorical(name.clone(), &refs)
            }
        })
        .collect();
    Ok(PredictInput { columns, kept, dropped })
}

pub fn cmd_predict(args: PredictArgs) -> Result<()> {
    let doc = read_document(&args.model)?;
    let model = document_to_model(&doc)?;
    let required = required_columns(&doc);
    let categorical = categorical_columns(&doc);
    let input = read_predict_csv(&args.data, &required, &categorical)?;

    let with_effect = doc.roles.treatment.is_some();
    let mut writer = csv::Writer::from_path(&args.out)
        .map_err(|e| CliError::Internal(format!("cannot write `{}`: {e}", args.out.display())))?;
    let mut header = vec!["row", "leaf_id", "mu_hat"];
    if with_effect {
        header.push("treatment_effect");
    }
    writer
        .write_record(&header)
        .map_err(|e| CliError::Internal(format!("cannot write `{}`: {e}", args.out.display())))?;

    if input.kept.is_empty() {
        writer
            .flush()
            .map_err(|e| output_io(&args.out, e))?;
        if input.dropped > 0 {
            eprintln!("note: skipped {} row(s) with missing values", input.dropped);
        }
        println!("scored 0 rows into {}", args.out.display());
        return Ok(());
    }

    let ds = Dataset::new(input.columns)?;
    let partition = predict_partition(model.tree(), &ds)?;
    let mu = match &model {
        LoadedModel::Palm(m) => predict_palm(m, &ds)?,
        LoadedModel::Tree(t) => predict_response(t, &ds, None)?,
    };
    let effects = match &doc.roles.treatment {
        Some(t) => Some(match &model {
            LoadedModel::Palm(m) => treatment_effects(m, &ds, t)?,
            LoadedModel::Tree(tree) => treatment_effects_tree(tree, &ds, t, None)?,
        }),
        None => None,
    };

    for (i, &orig) in input.kept.iter().enumerate() {
        let leaf = partition.leaf_node_ids[partition.labels[i] - 1];
        // 1-based, matching the reader's row numbering in notes and errors.
        let mut record = vec![(orig + 1).to_string(), leaf.to_string(), mu[i].to_string()];
        if let Some(e) = &effects {
            record.push(e[i].to_string());
        }
        writer
            .write_record(&record)
            .map_err(|e| CliError::Internal(format!("cannot write `{}`: {e}", args.out.display())))?;
    }
    writer.flush().map_err(|e| output_io(&args.out, e))?;

    if input.dropped > 0 {
        eprintln!("note: skipped {} row(s) with missing values", input.dropped);
    }
    if partition.unseen_fallbacks > 0 {
        eprintln!(
            "note: {} row(s) had split levels unseen at fit time and took the fallback branch",
            partition.unseen_fallbacks
        );
    }
    println!("scored {} row(s) into {}", input.kept.len(), args.out.display());
    Ok(())
}

fn design_label(design: DesignName) -> &'static str {
    match design {
        DesignName::Star => "star",
        DesignName::Type1 => "type1",
        DesignName::Factorial => "factorial",
    }
}

pub fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let methods: Vec<Method> = match &args.methods {
        Some(list) => {
            let mut out: Vec<Method> = Vec::new();
            for token in comma_list(list) {
                let m: Method = token.parse()?;
                if !out.contains(&m) {
                    out.push(m);
                }
            }
            if out.is_empty() {
                return Err(CliError::Input("--methods given but empty".into()));
            }
            out
        }
        None => ALL_METHODS.to_vec(),
    };

    let reps = args.reps.unwrap_or(match args.design {
        DesignName::Star => DESK_STAR_REPS,
        DesignName::Type1 => DESK_TYPE1_REPS,
        DesignName::Factorial => DESK_FACTORIAL_REPS,
    });
    if reps == 0 {
        return Err(CliError::Input("--reps must be at least 1".into()));
    }
    if args.design != DesignName::Factorial && args.subsample.is_some() {
        return Err(CliError::Input(
            "--subsample only applies to the factorial design".into(),
        ));
    }

    let opts = RunOptions {
        reps,
        methods,
        jobs: args.jobs,
        master_seed: args.seed,
        progress: true,
    };
    let report = match args.design {
        DesignName::Star => run_star_design(&opts, &args.out_dir)?,
        DesignName::Type1 => run_type1_design(&opts, &args.out_dir)?,
        DesignName::Factorial => {
            let fraction = args.subsample.unwrap_or(DESK_FACTORIAL_SUBSAMPLE);
            if !(fraction > 0.0 && fraction <= 1.0) {
                return Err(CliError::Input(format!(
                    "--subsample must be in (0, 1], got {fraction}"
                )));
            }
            let subsample = (fraction < 1.0).then_some((fraction, args.seed));
            run_full_factorial(&opts, subsample, &args.out_dir)?
        }
    };

    let total = report.raw.len();
    let failed = report.raw.iter().filter(|r| r.outcome.is_err()).count();
    let settings: BTreeSet<usize> = report.raw.iter().map(|r| r.scenario_id).collect();
    println!(
        "design={} settings={} reps={} rows={} failures={}",
        design_label(args.design),
        settings.len(),
        reps,
        total,
        failed
    );
    if failed > 0 {
        let mut reasons: Vec<&str> = Vec::new();
        for row in &report.raw {
            if let Err(msg) = &row.outcome {
                if !reasons.contains(&msg.as_str()) {
                    reasons.push(msg);
                    if reasons.len() == 5 {
                        break;
                    }
                }
            }
        }
        for reason in reasons {
            eprintln!("failure: {reason}");
        }
    }
    for file in &report.files {
        println!("wrote {}", file.display());
    }

    // Isolated fit failures are tolerated; a broad failure is an error.
    if total > 0 && (total - failed) * 100 < total * 99 {
        return Err(CliError::Simulation(format!(
            "{failed} of {total} replications failed"
        )));
    }
    Ok(())
}
