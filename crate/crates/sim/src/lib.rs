//! Simulation designs and a reproducible benchmark harness for the
//! subgroup-discovery estimators in palmgrove-core.
//!
//! Datasets follow a tree-structured treatment-effect model over
//! equicorrelated characteristics with additive prognostic effects.
//! Replications run on deterministic per-(scenario, rep) RNG streams, so
//! results do not depend on worker count or execution order, and every
//! design writes raw, aggregate and timing CSV reports.

pub mod config;
pub mod design;
pub mod error;
pub mod gen;
pub mod methods;
pub mod report;
pub mod run;

pub use config::{SimConfig, SimTruth};
pub use design::{
    factorial_scenarios, star_scenarios, subsample_scenarios, type1_scenarios, Scenario,
    DELTA_BETA_GRID, DESK_FACTORIAL_REPS, DESK_FACTORIAL_SUBSAMPLE, DESK_STAR_REPS,
    DESK_TYPE1_REPS, M_GRID,
    N_GRID, P_GRID, Q_GRID,
};
pub use error::{Result, SimError};
pub use gen::{gen_dataset, Z_CORRELATION};
pub use methods::{evaluate_method, role_spec, Method, RepMetrics, ALL_METHODS};
pub use report::{aggregate_rows, mean_se, quantile, AggregateRow, MeanSe, RawRow};
pub use run::{
    rep_seed, run_design, run_full_factorial, run_star_design, run_type1_design, DesignReport,
    RunOptions,
};
