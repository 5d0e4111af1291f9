//! Model-based recursive partitioning with partially additive GLMs.
//!
//! The crate fits three related model classes on tabular data:
//!
//! * plain GLMs (`glm`),
//! * GLM trees, where every coefficient varies by subgroup (`tree`),
//! * PALM trees, where a chosen subset of coefficients stays global while
//!   the rest vary by subgroup (`palm`).
//!
//! Subgroups are found by recursive partitioning: each node fits a GLM,
//! tests the per-observation score contributions for parameter instability
//! along candidate split variables (`fluct`), and splits where the evidence
//! is strongest. The `otr` module provides a weighted-classification
//! baseline for the treatment-regime setting, and `metrics` the evaluation
//! measures used to compare all of them.

pub mod data;
pub mod error;
pub mod family;
pub mod fluct;
pub mod glm;
pub mod linalg;
pub mod metrics;
pub mod otr;
pub mod palm;
pub mod tree;

pub use data::{design_matrix, read_csv, Column, ColumnData, ColumnKind, CsvReport, Dataset, Design, RoleSpec};
pub use error::{Error, Result};
pub use family::Family;
pub use fluct::{select_split_variable, InstabilityResult};
pub use glm::{fit_glm, fit_interaction_glm, predict, FitResult};
pub use metrics::{adjusted_rand_index, count_subgroups, regime_accuracy, treatment_mae, type1_rate};
pub use otr::{fit_otr, fit_outcome_model, fit_weighted_cart, otr_partition, otr_regime, ClassNode, ClassTree, OtrControl, OtrModel, OutcomeModel};
pub use palm::{
    fit_palm, predict_palm, treatment_effects, treatment_effects_tree, IterationRecord,
    PalmControl, PalmModel,
};
pub use tree::{grow_tree, predict_partition, predict_response, ModelTree, PartitionMap, Split, SplitKind, TreeControl, TreeNode};
