//! Partially additive model trees: some coefficients vary by subgroup,
//! the rest stay global.
//!
//! Estimation alternates two steps. Step (a) fits one joint model for a
//! fixed partition: a varying-coefficient block per subgroup plus a single
//! global block. Step (b) regrows the tree with the global part frozen
//! into the offset. The loop starts from the single-subgroup model and
//! stops when the partition stops changing or the joint log-likelihood
//! improvement falls below the tolerance.

use std::collections::HashMap;

use ndarray::Array1;

use crate::data::{design_matrix, Dataset, RoleSpec};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::glm::{fit_interaction_glm, FitResult};
use crate::tree::{grow_tree, predict_partition, predict_response, ModelTree, TreeControl};

#[derive(Debug, Clone)]
pub struct PalmControl {
    pub tree_control: TreeControl,
    pub max_iter: usize,
    /// Absolute joint log-likelihood improvement treated as "no change".
    pub loglik_tol: f64,
}

impl Default for PalmControl {
    fn default() -> Self {
        PalmControl {
            tree_control: TreeControl::default(),
            max_iter: 15,
            loglik_tol: 1e-4,
        }
    }
}

impl PalmControl {
    pub fn validate(&self) -> Result<()> {
        if self.max_iter == 0 {
            return Err(Error::InvalidControl("max_iter must be at least 1".into()));
        }
        if !(self.loglik_tol >= 0.0) {
            return Err(Error::InvalidControl(format!(
                "loglik_tol {} must be nonnegative",
                self.loglik_tol
            )));
        }
        self.tree_control.validate()
    }
}

/// One alternation round, recorded after its step (a).
#[derive(Debug, Clone, Copy)]
pub struct IterationRecord {
    pub iteration: usize,
    /// Joint log-likelihood of the step-(a) fit.
    pub joint_loglik: f64,
    /// Log-likelihood of the feasible point the tree step produced (leaf
    /// coefficients plus the previous global coefficients); the joint fit
    /// can only improve on it.
    pub step_b_loglik: f64,
    pub n_leaves: usize,
    pub partition_changed: bool,
}

#[derive(Debug, Clone)]
pub struct PalmModel {
    pub tree: ModelTree,
    pub gamma: Array1<f64>,
    pub gamma_names: Vec<String>,
    pub fixed: Vec<String>,
    pub trace: Vec<IterationRecord>,
    pub converged: bool,
}

impl PalmModel {
    pub fn n_leaves(&self) -> usize {
        self.tree.n_leaves()
    }
}

/// Relabels a partition by first occurrence so label choices drop out of
/// equality comparisons.
fn canonical_labels(labels: &[usize]) -> Vec<usize> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    let mut next = 0usize;
    labels
        .iter()
        .map(|&l| {
            *map.entry(l).or_insert_with(|| {
                next += 1;
                next
            })
        })
        .collect()
}

/// Log-likelihood of a fixed linear predictor, maximized over the gaussian
/// dispersion where applicable.
fn loglik_at_eta(y: &[f64], eta: &Array1<f64>, family: Family) -> f64 {
    match family {
        Family::Gaussian => {
            let n = y.len() as f64;
            let rss: f64 = y.iter().zip(eta.iter()).map(|(&a, &b)| (a - b) * (a - b)).sum();
            let disp = (rss / n).max(1e-12);
            y.iter()
                .zip(eta.iter())
                .map(|(&a, &b)| family.log_density(a, b, disp))
                .sum()
        }
        _ => y
            .iter()
            .zip(eta.iter())
            .map(|(&a, &b)| family.log_density(a, family.inv_link(b), 1.0))
            .sum(),
    }
}

fn gamma_of(fit: &FitResult, kf: usize) -> (Array1<f64>, Vec<String>) {
    let k = fit.coefficients.len();
    let gamma = fit.coefficients.slice(ndarray::s![k - kf..]).to_owned();
    let names = fit.column_names[k - kf..].to_vec();
    (gamma, names)
}

pub fn fit_palm(ds: &Dataset, spec: &RoleSpec, control: &PalmControl) -> Result<PalmModel> {
    spec.validate(ds)?;
    control.validate()?;
    if spec.fixed.is_empty() {
        let tree = grow_tree(ds, spec, &control.tree_control, None)?;
        return Ok(PalmModel {
            tree,
            gamma: Array1::zeros(0),
            gamma_names: Vec::new(),
            fixed: Vec::new(),
            trace: Vec::new(),
            converged: true,
        });
    }

    let xf = design_matrix(ds, &spec.fixed, false)?;
    let kf = xf.n_cols();
    let y = ds.numeric_column(&spec.response)?.to_vec();
    let n = ds.n_rows();

    // Single-subgroup start: step (a) with one block yields gamma(0).
    let init_partition = vec![1usize; n];
    let init_fit = fit_interaction_glm(ds, &init_partition, spec)?;
    let (mut gamma, gamma_names) = gamma_of(&init_fit, kf);
    let mut prev_loglik = init_fit.loglik;
    let mut prev_partition = canonical_labels(&init_partition);

    // Iterations whose canonical partition was already visited; detects
    // cycles longer than one.
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    seen.insert(prev_partition.clone(), 0);

    let mut best: Option<(f64, ModelTree, Array1<f64>)> = None;
    let mut current: Option<(ModelTree, Array1<f64>)> = None;
    let mut trace: Vec<IterationRecord> = Vec::new();
    let mut converged = false;

    for iteration in 1..=control.max_iter {
        let offset = xf.matrix.dot(&gamma);
        let step = (|| -> Result<(ModelTree, Vec<usize>, FitResult, f64)> {
            let tree = grow_tree(ds, spec, &control.tree_control, Some(&offset))?;
            let part = predict_partition(&tree, ds)?;
            let eta_b = predict_response_eta(&tree, ds, &offset)?;
            let joint = fit_interaction_glm(ds, &part.labels, spec)?;
            let step_b = loglik_at_eta(&y, &eta_b, spec.family);
            Ok((tree, part.labels, joint, step_b))
        })();
        let (tree, labels, joint, step_b_loglik) = match step {
            Ok(v) => v,
            Err(err) => {
                // Fall back to the best earlier iterate if there is one.
                return match best {
                    Some((_, tree, gamma_best)) => {
                        finalize(ds, spec, tree, gamma_best, gamma_names, xf, trace, false)
                    }
                    None => Err(err),
                };
            }
        };
        let partition = canonical_labels(&labels);
        let changed = partition != prev_partition;
        let (gamma_new, _) = gamma_of(&joint, kf);
        trace.push(IterationRecord {
            iteration,
            joint_loglik: joint.loglik,
            step_b_loglik,
            n_leaves: tree.n_leaves(),
            partition_changed: changed,
        });
        if best.as_ref().is_none_or(|(b, _, _)| joint.loglik > *b) {
            best = Some((joint.loglik, tree.clone(), gamma_new.clone()));
        }
        let improvement = (joint.loglik - prev_loglik).abs();
        current = Some((tree, gamma_new.clone()));
        if !changed || improvement < control.loglik_tol {
            converged = true;
            break;
        }
        if seen.contains_key(&partition) {
            // Revisited a non-adjacent partition: an oscillation. Keep the
            // best iterate seen so far.
            let (_, tree_best, gamma_best) = best.expect("at least one iterate recorded");
            return finalize(ds, spec, tree_best, gamma_best, gamma_names, xf, trace, false);
        }
        seen.insert(partition.clone(), iteration);
        prev_partition = partition;
        prev_loglik = joint.loglik;
        gamma = gamma_new;
    }

    let (tree, gamma_final) = match current {
        Some(v) => v,
        None => unreachable!("max_iter >= 1 guarantees at least one iteration"),
    };
    finalize(ds, spec, tree, gamma_final, gamma_names, xf, trace, converged)
}

#[allow(clippy::too_many_arguments)]
fn finalize(
    ds: &Dataset,
    spec: &RoleSpec,
    mut tree: ModelTree,
    gamma: Array1<f64>,
    gamma_names: Vec<String>,
    xf: crate::data::Design,
    trace: Vec<IterationRecord>,
    converged: bool,
) -> Result<PalmModel> {
    // Leaf and internal fits refreshed under the final global coefficients.
    let offset = xf.matrix.dot(&gamma);
    tree.refit_with_offset(ds, Some(&offset))?;
    Ok(PalmModel {
        tree,
        gamma,
        gamma_names,
        fixed: spec.fixed.clone(),
        trace,
        converged,
    })
}

/// Linear predictor of the tree (leaf eta plus offset) without applying
/// the inverse link; used for feasible-point log-likelihoods.
fn predict_response_eta(tree: &ModelTree, ds: &Dataset, offset: &Array1<f64>) -> Result<Array1<f64>> {
    // For the gaussian family the mean is the linear predictor; for the
    // others recompute eta from the routed leaf coefficients.
    let design = design_matrix(ds, &tree.varying, tree.intercept)?;
    let part = predict_partition(tree, ds)?;
    let mut eta = Array1::zeros(ds.n_rows());
    for row in 0..ds.n_rows() {
        let node = tree.node(part.leaf_node_ids[part.labels[row] - 1]);
        let lin: f64 = (0..design.n_cols())
            .map(|j| design.matrix[[row, j]] * node.fit.coefficients[j])
            .sum();
        eta[row] = lin + offset[row];
    }
    Ok(eta)
}

/// Predicted means under the partially additive model.
pub fn predict_palm(model: &PalmModel, ds: &Dataset) -> Result<Array1<f64>> {
    if model.fixed.is_empty() {
        return predict_response(&model.tree, ds, None);
    }
    let xf = design_matrix(ds, &model.fixed, false)?;
    if xf.names != model.gamma_names {
        return Err(Error::DesignMismatch {
            expected: model.gamma_names.clone(),
            got: xf.names,
        });
    }
    let offset = xf.matrix.dot(&model.gamma);
    predict_response(&model.tree, ds, Some(&offset))
}

/// Per-observation treatment effect of a 0/1 column in the varying part:
/// the leaf coefficient itself under the identity link, or the difference
/// of predicted means with the treatment forced to 1 and 0 otherwise.
pub fn treatment_effects_tree(
    tree: &ModelTree,
    ds: &Dataset,
    treatment: &str,
    offset: Option<&Array1<f64>>,
) -> Result<Array1<f64>> {
    let idx = tree
        .design_names
        .iter()
        .position(|n| n == treatment)
        .ok_or_else(|| Error::TreatmentNotVarying(treatment.to_string()))?;
    let part = predict_partition(tree, ds)?;
    let n = ds.n_rows();
    let mut effects = Array1::zeros(n);
    if tree.family.is_gaussian() {
        for row in 0..n {
            let node = tree.node(part.leaf_node_ids[part.labels[row] - 1]);
            effects[row] = node.fit.coefficients[idx];
        }
        return Ok(effects);
    }
    let design = design_matrix(ds, &tree.varying, tree.intercept)?;
    if design.names != tree.design_names {
        return Err(Error::DesignMismatch {
            expected: tree.design_names.clone(),
            got: design.names,
        });
    }
    for row in 0..n {
        let node = tree.node(part.leaf_node_ids[part.labels[row] - 1]);
        let mut eta0 = offset.map_or(0.0, |o| o[row]);
        let mut eta1 = eta0;
        for j in 0..design.n_cols() {
            let v = design.matrix[[row, j]];
            let c = node.fit.coefficients[j];
            if j == idx {
                eta1 += c;
            } else {
                eta0 += v * c;
                eta1 += v * c;
            }
        }
        effects[row] = tree.family.inv_link(eta1) - tree.family.inv_link(eta0);
    }
    Ok(effects)
}

pub fn treatment_effects(model: &PalmModel, ds: &Dataset, treatment: &str) -> Result<Array1<f64>> {
    if model.fixed.is_empty() {
        return treatment_effects_tree(&model.tree, ds, treatment, None);
    }
    let xf = design_matrix(ds, &model.fixed, false)?;
    let offset = xf.matrix.dot(&model.gamma);
    treatment_effects_tree(&model.tree, ds, treatment, Some(&offset))
}
