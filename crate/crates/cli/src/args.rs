//! Command-line surface. The argument structs stay dumb; `commands` holds
//! the behaviour, so integration tests can drive it without a subprocess.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "palmgrove",
    version,
    about = "Model-based recursive partitioning with partially additive linear models"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a model tree on a CSV file and serialize it to JSON
    Fit(FitArgs),
    /// Apply a serialized model to new rows
    Predict(PredictArgs),
    /// Run a benchmark design and write report tables
    Simulate(SimulateArgs),
}

#[derive(Debug, Args, Default)]
pub struct FitArgs {
    /// Input CSV with a header row
    #[arg(long)]
    pub data: Option<PathBuf>,

    /// Response column name
    #[arg(long)]
    pub response: Option<String>,

    /// Comma-separated regressors refit within every leaf
    #[arg(long)]
    pub varying: Option<String>,

    /// Comma-separated regressors with one global coefficient
    #[arg(long)]
    pub fixed: Option<String>,

    /// Comma-separated candidate split variables
    #[arg(long)]
    pub split: Option<String>,

    /// Response family: gaussian, binomial or poisson
    #[arg(long)]
    pub family: Option<String>,

    /// Varying design column whose coefficient is reported as the
    /// per-subgroup treatment effect
    #[arg(long)]
    pub treatment: Option<String>,

    /// Significance level for the parameter instability tests
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Smallest permitted node size
    #[arg(long = "min-size")]
    pub min_size: Option<usize>,

    /// Fraction of each ordered variable trimmed from both ends before
    /// the instability test
    #[arg(long)]
    pub trim: Option<f64>,

    /// Cap on alternation rounds when global coefficients are present
    #[arg(long = "max-iter")]
    pub max_iter: Option<usize>,

    /// Where to write the fitted model JSON
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Optional Graphviz rendering of the fitted tree
    #[arg(long)]
    pub dot: Option<PathBuf>,

    /// key=value file supplying defaults for any of the above
    #[arg(long)]
    pub config: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Fitted model JSON produced by `fit`
    #[arg(long)]
    pub model: PathBuf,

    /// CSV with the covariate columns the model needs
    #[arg(long)]
    pub data: PathBuf,

    /// Output CSV; one row per scored input row
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DesignName {
    /// One-axis-at-a-time sweep around the default setting
    Star,
    /// Null settings with no subgroup structure, for size checks
    Type1,
    /// Full cross of all setting axes, thinned by --subsample
    Factorial,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Which benchmark design to run
    #[arg(long, value_enum)]
    pub design: DesignName,

    /// Replications per setting (defaults depend on the design)
    #[arg(long)]
    pub reps: Option<usize>,

    /// Comma-separated methods to compare (default: all)
    #[arg(long)]
    pub methods: Option<String>,

    /// Worker threads; 0 uses every available core
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,

    /// Master seed for the replication streams
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Fraction of factorial settings to run; 1 runs the full grid
    #[arg(long)]
    pub subsample: Option<f64>,

    /// Directory for the report tables
    #[arg(long = "out-dir")]
    pub out_dir: PathBuf,
}
