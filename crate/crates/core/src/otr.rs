//! Optimal-treatment-regime baseline: a single GLM with treatment by
//! characteristic interactions predicts the per-row benefit of treating,
//! then a weighted classification tree on the benefit sign turns those
//! predictions into a decision rule.

use ndarray::{Array1, Array2, Axis};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::data::{design_matrix, Dataset, RoleSpec};
use crate::error::{Error, Result};
use crate::glm::{fit_glm, predict, FitResult};
use crate::linalg::independent_columns;
use crate::tree::{Split, SplitKind};

const GINI_TOL: f64 = 1e-12;
const COLLINEAR_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct OtrControl {
    /// Minimum leaf weight as a fraction of the total training weight.
    pub min_leaf_weight: f64,
    pub max_depth: usize,
    pub cv_folds: usize,
    /// Seed for the cross-validation fold shuffle.
    pub seed: u64,
}

impl Default for OtrControl {
    fn default() -> Self {
        OtrControl {
            min_leaf_weight: 0.01,
            max_depth: 10,
            cv_folds: 10,
            seed: 0,
        }
    }
}

impl OtrControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.min_leaf_weight > 0.0 && self.min_leaf_weight < 0.5) {
            return Err(Error::InvalidControl(format!(
                "min_leaf_weight must lie in (0, 0.5), got {}",
                self.min_leaf_weight
            )));
        }
        if self.max_depth == 0 {
            return Err(Error::InvalidControl("max_depth must be at least 1".into()));
        }
        if self.cv_folds < 2 {
            return Err(Error::InvalidControl(format!(
                "cv_folds must be at least 2, got {}",
                self.cv_folds
            )));
        }
        Ok(())
    }
}

/// Outcome GLM with design (1, x_A, x_F, x_A z_1, ..., x_A z_m), collinear
/// interaction columns removed.
#[derive(Debug, Clone)]
pub struct OutcomeModel {
    pub fit: FitResult,
    pub treatment: String,
    pub fixed: Vec<String>,
    pub split_vars: Vec<String>,
    /// Columns of the full interaction design kept after the collinearity
    /// scan, as indices into that design.
    kept: Vec<usize>,
    /// Names of interaction columns dropped as collinear.
    pub dropped: Vec<String>,
}

/// Weighted binary classification tree; leaves vote treat/control by
/// weight mass, ties going to control.
#[derive(Debug, Clone)]
pub struct ClassNode {
    /// Preorder id starting at 1.
    pub id: usize,
    pub split: Option<Split>,
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub treat_weight: f64,
    pub control_weight: f64,
    pub n_obs: usize,
    pub depth: usize,
}

impl ClassNode {
    pub fn is_leaf(&self) -> bool {
        self.split.is_none()
    }

    /// Leaf vote: treat only on strictly larger treat mass.
    pub fn class(&self) -> bool {
        self.treat_weight > self.control_weight
    }
}

#[derive(Debug, Clone)]
pub struct ClassTree {
    pub nodes: Vec<ClassNode>,
    pub split_vars: Vec<String>,
}

impl ClassTree {
    pub fn root(&self) -> &ClassNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &ClassNode {
        &self.nodes[id - 1]
    }

    pub fn n_leaves(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_leaf()).count()
    }
}

/// Two-step regime estimate: outcome model plus classification tree.
#[derive(Debug, Clone)]
pub struct OtrModel {
    pub outcome: OutcomeModel,
    pub tree: ClassTree,
}

fn treatment_values(ds: &Dataset, name: &str) -> Result<Vec<f64>> {
    let values = ds.numeric_column(name)?;
    if values.iter().any(|&v| v != 0.0 && v != 1.0) {
        return Err(Error::InvalidControl(format!(
            "treatment column `{name}` must be coded 0/1"
        )));
    }
    if values.iter().all(|&v| v == values[0]) {
        return Err(Error::TreatmentConstant(name.to_string()));
    }
    Ok(values.to_vec())
}

/// Builds the interaction design. `force` substitutes a constant for the
/// observed treatment in both the main-effect and interaction columns.
fn outcome_design(
    ds: &Dataset,
    treatment: &str,
    fixed: &[String],
    split_vars: &[String],
    force: Option<f64>,
) -> Result<(Array2<f64>, Vec<String>, usize)> {
    let n = ds.n_rows();
    let xa: Vec<f64> = match force {
        Some(v) => vec![v; n],
        None => treatment_values(ds, treatment)?,
    };
    let fixed_part = design_matrix(ds, fixed, false)?;
    let z_part = design_matrix(ds, split_vars, false)?;

    let n_main = 2 + fixed_part.n_cols();
    let k = n_main + z_part.n_cols();
    let mut x = Array2::zeros((n, k));
    let mut names = Vec::with_capacity(k);
    names.push("(intercept)".to_string());
    names.push(treatment.to_string());
    for i in 0..n {
        x[[i, 0]] = 1.0;
        x[[i, 1]] = xa[i];
    }
    for (j, name) in fixed_part.names.iter().enumerate() {
        names.push(name.clone());
        for i in 0..n {
            x[[i, 2 + j]] = fixed_part.matrix[[i, j]];
        }
    }
    for (j, name) in z_part.names.iter().enumerate() {
        names.push(format!("{treatment}:{name}"));
        for i in 0..n {
            x[[i, n_main + j]] = xa[i] * z_part.matrix[[i, j]];
        }
    }
    Ok((x, names, n_main))
}

/// Fits the outcome GLM with every treatment-by-characteristic interaction.
/// Interaction columns collinear with earlier columns are dropped and
/// reported in `dropped`; a collinear main effect is an error.
pub fn fit_outcome_model(ds: &Dataset, spec: &RoleSpec) -> Result<OutcomeModel> {
    spec.validate(ds)?;
    if spec.varying.len() != 1 {
        return Err(Error::InvalidControl(format!(
            "outcome model expects exactly one varying column (the treatment), got {}",
            spec.varying.len()
        )));
    }
    if !spec.intercept {
        return Err(Error::InvalidControl(
            "outcome model requires an intercept".into(),
        ));
    }
    let treatment = spec.varying[0].clone();
    let (x, names, n_main) = outcome_design(ds, &treatment, &spec.fixed, &spec.split_vars, None)?;

    let (kept, removed) = independent_columns(&x, COLLINEAR_TOL);
    let bad_main: Vec<String> = removed
        .iter()
        .filter(|&&j| j < n_main)
        .map(|&j| names[j].clone())
        .collect();
    if !bad_main.is_empty() {
        return Err(Error::SingularDesign { columns: bad_main });
    }
    let dropped: Vec<String> = removed.iter().map(|&j| names[j].clone()).collect();

    let x_kept = x.select(Axis(1), &kept);
    let kept_names: Vec<String> = kept.iter().map(|&j| names[j].clone()).collect();
    let y = Array1::from(ds.numeric_column(&spec.response)?.to_vec());
    let fit = fit_glm(&x_kept, &y, spec.family, None, None, Some(&kept_names))?;

    Ok(OutcomeModel {
        fit,
        treatment,
        fixed: spec.fixed.clone(),
        split_vars: spec.split_vars.clone(),
        kept,
        dropped,
    })
}

/// Per-row benefit of treating: mean response with the treatment forced to
/// 1 minus forced to 0, everything else held at observed values. Returns
/// the treat/control label I(benefit > 0) and the magnitude as weight.
pub fn predicted_benefit(model: &OutcomeModel, ds: &Dataset) -> Result<(Vec<bool>, Vec<f64>)> {
    let (x1, _, _) = outcome_design(
        ds,
        &model.treatment,
        &model.fixed,
        &model.split_vars,
        Some(1.0),
    )?;
    let (x0, _, _) = outcome_design(
        ds,
        &model.treatment,
        &model.fixed,
        &model.split_vars,
        Some(0.0),
    )?;
    let mu1 = predict(&model.fit, &x1.select(Axis(1), &model.kept), None)?;
    let mu0 = predict(&model.fit, &x0.select(Axis(1), &model.kept), None)?;
    let labels = mu1
        .iter()
        .zip(mu0.iter())
        .map(|(&a, &b)| a - b > 0.0)
        .collect();
    let weights = mu1
        .iter()
        .zip(mu0.iter())
        .map(|(&a, &b)| (a - b).abs())
        .collect();
    Ok((labels, weights))
}

struct GNode {
    treat_weight: f64,
    control_weight: f64,
    n_obs: usize,
    split: Option<Box<GSplit>>,
}

struct GSplit {
    split: Split,
    left: GNode,
    right: GNode,
}

impl GNode {
    fn leaf(treat_weight: f64, control_weight: f64, n_obs: usize) -> GNode {
        GNode {
            treat_weight,
            control_weight,
            n_obs,
            split: None,
        }
    }

    fn class(&self) -> bool {
        self.treat_weight > self.control_weight
    }

    /// Weighted misclassification mass when this node votes as one leaf.
    fn leaf_cost(&self) -> f64 {
        self.treat_weight.min(self.control_weight)
    }

    /// (misclassification mass of current leaves, leaf count).
    fn subtree_cost(&self) -> (f64, usize) {
        match &self.split {
            None => (self.leaf_cost(), 1),
            Some(s) => {
                let (cl, nl) = s.left.subtree_cost();
                let (cr, nr) = s.right.subtree_cost();
                (cl + cr, nl + nr)
            }
        }
    }

    fn clone_tree(&self) -> GNode {
        GNode {
            treat_weight: self.treat_weight,
            control_weight: self.control_weight,
            n_obs: self.n_obs,
            split: self.split.as_ref().map(|s| {
                Box::new(GSplit {
                    split: s.split.clone(),
                    left: s.left.clone_tree(),
                    right: s.right.clone_tree(),
                })
            }),
        }
    }
}

fn gini_cost(wt: f64, wc: f64) -> f64 {
    let w = wt + wc;
    if w <= 0.0 {
        0.0
    } else {
        2.0 * wt * wc / w
    }
}

struct CartGrower<'a> {
    ds: &'a Dataset,
    split_vars: &'a [String],
    labels: &'a [bool],
    weights: &'a [f64],
    min_weight: f64,
    max_depth: usize,
}

impl CartGrower<'_> {
    fn mass(&self, rows: &[usize]) -> (f64, f64) {
        let mut wt = 0.0;
        let mut wc = 0.0;
        for &i in rows {
            if self.labels[i] {
                wt += self.weights[i];
            } else {
                wc += self.weights[i];
            }
        }
        (wt, wc)
    }

    fn grow(&self, rows: &[usize], depth: usize) -> Result<GNode> {
        let (wt, wc) = self.mass(rows);
        let parent_cost = gini_cost(wt, wc);
        if depth >= self.max_depth || parent_cost <= GINI_TOL || wt + wc < 2.0 * self.min_weight {
            return Ok(GNode::leaf(wt, wc, rows.len()));
        }

        let mut best: Option<(f64, Split, Vec<usize>, Vec<usize>)> = None;
        for var in self.split_vars {
            let column = self.ds.column(var)?;
            let candidate = if column.is_numeric() {
                self.numeric_split(var, column.as_numeric().unwrap(), rows)
            } else {
                let (idx, levels) = column.as_categorical().unwrap();
                self.categorical_split(var, idx, levels, rows)
            };
            if let Some(c) = candidate {
                if best.as_ref().is_none_or(|b| c.0 < b.0) {
                    best = Some(c);
                }
            }
        }

        match best {
            Some((cost, split, left_rows, right_rows)) if cost < parent_cost - GINI_TOL => {
                let left = self.grow(&left_rows, depth + 1)?;
                let right = self.grow(&right_rows, depth + 1)?;
                Ok(GNode {
                    treat_weight: wt,
                    control_weight: wc,
                    n_obs: rows.len(),
                    split: Some(Box::new(GSplit { split, left, right })),
                })
            }
            _ => Ok(GNode::leaf(wt, wc, rows.len())),
        }
    }

    fn numeric_split(
        &self,
        var: &str,
        values: &[f64],
        rows: &[usize],
    ) -> Option<(f64, Split, Vec<usize>, Vec<usize>)> {
        let mut order: Vec<usize> = rows.to_vec();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap().then(a.cmp(&b)));
        let n = order.len();
        let (wt, wc) = self.mass(rows);

        let mut lt = 0.0;
        let mut lc = 0.0;
        let mut best: Option<(f64, usize)> = None;
        for (pos, &i) in order.iter().enumerate().take(n - 1) {
            if self.labels[i] {
                lt += self.weights[i];
            } else {
                lc += self.weights[i];
            }
            if values[i] == values[order[pos + 1]] {
                continue;
            }
            let (rt, rc) = (wt - lt, wc - lc);
            if lt + lc < self.min_weight || rt + rc < self.min_weight {
                continue;
            }
            let cost = gini_cost(lt, lc) + gini_cost(rt, rc);
            if best.is_none_or(|(b, _)| cost < b) {
                best = Some((cost, pos));
            }
        }
        let (cost, pos) = best?;
        let cutpoint = 0.5 * (values[order[pos]] + values[order[pos + 1]]);
        let left_rows = order[..=pos].to_vec();
        let right_rows = order[pos + 1..].to_vec();
        Some((
            cost,
            Split {
                variable: var.to_string(),
                kind: SplitKind::Numeric { cutpoint },
            },
            left_rows,
            right_rows,
        ))
    }

    /// Levels ordered by treat share; for binary classes a prefix of that
    /// ordering contains the optimal weighted-Gini subset.
    fn categorical_split(
        &self,
        var: &str,
        idx: &[usize],
        levels: &[String],
        rows: &[usize],
    ) -> Option<(f64, Split, Vec<usize>, Vec<usize>)> {
        let mut mass: Vec<(f64, f64)> = vec![(0.0, 0.0); levels.len()];
        for &i in rows {
            if self.labels[i] {
                mass[idx[i]].0 += self.weights[i];
            } else {
                mass[idx[i]].1 += self.weights[i];
            }
        }
        let mut observed: Vec<usize> = (0..levels.len())
            .filter(|&l| rows.iter().any(|&i| idx[i] == l))
            .collect();
        if observed.len() < 2 {
            return None;
        }
        observed.sort_by(|&a, &b| {
            let share = |l: usize| {
                let (t, c) = mass[l];
                if t + c > 0.0 {
                    t / (t + c)
                } else {
                    0.5
                }
            };
            share(a)
                .partial_cmp(&share(b))
                .unwrap()
                .then_with(|| levels[a].cmp(&levels[b]))
        });

        let (wt, wc) = self.mass(rows);
        let mut lt = 0.0;
        let mut lc = 0.0;
        let mut best: Option<(f64, usize)> = None;
        for k in 0..observed.len() - 1 {
            let (t, c) = mass[observed[k]];
            lt += t;
            lc += c;
            let (rt, rc) = (wt - lt, wc - lc);
            if lt + lc < self.min_weight || rt + rc < self.min_weight {
                continue;
            }
            let cost = gini_cost(lt, lc) + gini_cost(rt, rc);
            if best.is_none_or(|(b, _)| cost < b) {
                best = Some((cost, k));
            }
        }
        let (cost, k) = best?;
        let mut left_levels: Vec<String> = observed[..=k].iter().map(|&l| levels[l].clone()).collect();
        let mut right_levels: Vec<String> = observed[k + 1..].iter().map(|&l| levels[l].clone()).collect();
        left_levels.sort();
        right_levels.sort();
        let in_left: Vec<bool> = (0..levels.len())
            .map(|l| left_levels.iter().any(|name| name == &levels[l]))
            .collect();
        let mut left_rows = Vec::new();
        let mut right_rows = Vec::new();
        for &i in rows {
            if in_left[idx[i]] {
                left_rows.push(i);
            } else {
                right_rows.push(i);
            }
        }
        Some((
            cost,
            Split {
                variable: var.to_string(),
                kind: SplitKind::Categorical {
                    left_levels,
                    right_levels,
                },
            },
            left_rows,
            right_rows,
        ))
    }
}

/// Smallest collapse penalty over internal nodes (the weakest link).
fn weakest_alpha(node: &GNode) -> Option<f64> {
    let split = node.split.as_ref()?;
    let (cost, leaves) = node.subtree_cost();
    let g = ((node.leaf_cost() - cost) / (leaves as f64 - 1.0)).max(0.0);
    let mut alpha = g;
    if let Some(a) = weakest_alpha(&split.left) {
        alpha = alpha.min(a);
    }
    if let Some(a) = weakest_alpha(&split.right) {
        alpha = alpha.min(a);
    }
    Some(alpha)
}

/// Optimal cost-complexity pruning at penalty `alpha`: bottom-up collapse
/// of every node whose leaf cost beats its pruned subtree plus penalty.
fn prune_at(node: &mut GNode, alpha: f64) {
    if let Some(split) = node.split.as_mut() {
        prune_at(&mut split.left, alpha);
        prune_at(&mut split.right, alpha);
        let (cost, leaves) = node.subtree_cost();
        if node.leaf_cost() <= cost + alpha * (leaves as f64 - 1.0) + GINI_TOL {
            node.split = None;
        }
    }
}

/// Penalties at which the optimally pruned tree shrinks, ascending.
fn alpha_path(tree: &GNode) -> Vec<f64> {
    let mut work = tree.clone_tree();
    let mut alphas = Vec::new();
    while let Some(g) = weakest_alpha(&work) {
        alphas.push(g);
        prune_at(&mut work, g);
    }
    alphas
}

fn route_gnode<'a>(node: &'a GNode, ds: &Dataset, row: usize) -> Result<&'a GNode> {
    let mut cur = node;
    while let Some(split) = cur.split.as_ref() {
        let column = ds.column(&split.split.variable)?;
        let go_left = match (&split.split.kind, column.is_numeric()) {
            (SplitKind::Numeric { cutpoint }, true) => {
                column.as_numeric().unwrap()[row] <= *cutpoint
            }
            (SplitKind::Categorical { left_levels, right_levels }, false) => {
                let (idx, levels) = column.as_categorical().unwrap();
                let name = &levels[idx[row]];
                if left_levels.iter().any(|l| l == name) {
                    true
                } else if right_levels.iter().any(|l| l == name) {
                    false
                } else {
                    // Unseen level: follow the larger child.
                    split.left.n_obs >= split.right.n_obs
                }
            }
            (SplitKind::Numeric { .. }, false) => {
                return Err(Error::ColumnType {
                    name: split.split.variable.clone(),
                    expected: "numeric",
                    found: "categorical",
                })
            }
            (SplitKind::Categorical { .. }, true) => {
                return Err(Error::ColumnType {
                    name: split.split.variable.clone(),
                    expected: "categorical",
                    found: "numeric",
                })
            }
        };
        cur = if go_left { &split.left } else { &split.right };
    }
    Ok(cur)
}

fn flatten(tree: &GNode, split_vars: Vec<String>) -> ClassTree {
    fn walk(node: &GNode, depth: usize, nodes: &mut Vec<ClassNode>) -> usize {
        let id = nodes.len() + 1;
        nodes.push(ClassNode {
            id,
            split: node.split.as_ref().map(|s| s.split.clone()),
            left: None,
            right: None,
            treat_weight: node.treat_weight,
            control_weight: node.control_weight,
            n_obs: node.n_obs,
            depth,
        });
        if let Some(s) = node.split.as_ref() {
            let slot = id - 1;
            let left = walk(&s.left, depth + 1, nodes);
            nodes[slot].left = Some(left);
            let right = walk(&s.right, depth + 1, nodes);
            nodes[slot].right = Some(right);
        }
        id
    }
    let mut nodes = Vec::new();
    walk(tree, 0, &mut nodes);
    ClassTree { nodes, split_vars }
}

/// Grows a weighted Gini classification tree and prunes it by cost
/// complexity, choosing the penalty by cross-validation with the
/// one-standard-error rule. Zero total weight yields a control-only leaf.
pub fn fit_weighted_cart(
    ds: &Dataset,
    split_vars: &[String],
    labels: &[bool],
    weights: &[f64],
    control: &OtrControl,
) -> Result<ClassTree> {
    control.validate()?;
    let n = ds.n_rows();
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: labels.len(),
        });
    }
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::InvalidControl(
            "classification weights must be finite and nonnegative".into(),
        ));
    }
    for var in split_vars {
        ds.column(var)?;
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        let tree = GNode::leaf(0.0, 0.0, n);
        return Ok(flatten(&tree, split_vars.to_vec()));
    }

    let rows: Vec<usize> = (0..n).collect();
    let grower = CartGrower {
        ds,
        split_vars,
        labels,
        weights,
        min_weight: control.min_leaf_weight * total,
        max_depth: control.max_depth,
    };
    let mut full = grower.grow(&rows, 0)?;

    let alphas = alpha_path(&full);
    if alphas.is_empty() {
        return Ok(flatten(&full, split_vars.to_vec()));
    }
    // One candidate penalty per interval of the pruning path; interior
    // candidates sit at geometric means so fold trees with slightly
    // different paths land in the intended interval.
    let mut candidates = vec![0.0];
    for k in 0..alphas.len() - 1 {
        let (a, b) = (alphas[k], alphas[k + 1]);
        candidates.push(if a > 0.0 { (a * b).sqrt() } else { 0.5 * b });
    }
    candidates.push(alphas[alphas.len() - 1] * 2.0 + GINI_TOL);

    let folds = control.cv_folds.min(n);
    let mut shuffled: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(control.seed);
    shuffled.shuffle(&mut rng);
    let fold_of: Vec<usize> = {
        let mut f = vec![0usize; n];
        for (pos, &i) in shuffled.iter().enumerate() {
            f[i] = pos % folds;
        }
        f
    };

    // Per-fold misclassification share of each candidate penalty.
    let mut fold_rates: Vec<Vec<f64>> = Vec::new();
    for fold in 0..folds {
        let train: Vec<usize> = (0..n).filter(|&i| fold_of[i] != fold).collect();
        let val: Vec<usize> = (0..n).filter(|&i| fold_of[i] == fold).collect();
        let val_weight: f64 = val.iter().map(|&i| weights[i]).sum();
        if train.is_empty() || val_weight <= 0.0 {
            continue;
        }
        let train_total: f64 = train.iter().map(|&i| weights[i]).sum();
        if train_total <= 0.0 {
            continue;
        }
        let fold_grower = CartGrower {
            ds,
            split_vars,
            labels,
            weights,
            min_weight: control.min_leaf_weight * train_total,
            max_depth: control.max_depth,
        };
        let mut fold_tree = fold_grower.grow(&train, 0)?;
        let mut rates = Vec::with_capacity(candidates.len());
        for &alpha in &candidates {
            prune_at(&mut fold_tree, alpha);
            let mut miss = 0.0;
            for &i in &val {
                let leaf = route_gnode(&fold_tree, ds, i)?;
                if leaf.class() != labels[i] {
                    miss += weights[i];
                }
            }
            rates.push(miss / val_weight);
        }
        fold_rates.push(rates);
    }

    let chosen = if fold_rates.is_empty() {
        0.0
    } else {
        let f = fold_rates.len() as f64;
        let mean_se: Vec<(f64, f64)> = (0..candidates.len())
            .map(|k| {
                let mean = fold_rates.iter().map(|r| r[k]).sum::<f64>() / f;
                let var = fold_rates
                    .iter()
                    .map(|r| (r[k] - mean).powi(2))
                    .sum::<f64>()
                    / (f - 1.0).max(1.0);
                (mean, (var / f).sqrt())
            })
            .collect();
        let best = mean_se
            .iter()
            .enumerate()
            .min_by(|a, b| a.1 .0.partial_cmp(&b.1 .0).unwrap())
            .map(|(k, _)| k)
            .unwrap();
        let threshold = mean_se[best].0 + mean_se[best].1;
        let pick = (0..candidates.len())
            .rev()
            .find(|&k| mean_se[k].0 <= threshold)
            .unwrap_or(best);
        candidates[pick]
    };

    prune_at(&mut full, chosen);
    Ok(flatten(&full, split_vars.to_vec()))
}

/// Treat/control decision per row by routing through the tree.
pub fn otr_regime(tree: &ClassTree, ds: &Dataset) -> Result<Vec<bool>> {
    let leaves = route_rows(tree, ds)?;
    Ok(leaves.iter().map(|&id| tree.node(id).class()).collect())
}

/// Leaf id per row, usable as partition labels.
pub fn otr_partition(tree: &ClassTree, ds: &Dataset) -> Result<Vec<usize>> {
    route_rows(tree, ds)
}

fn route_rows(tree: &ClassTree, ds: &Dataset) -> Result<Vec<usize>> {
    let n = ds.n_rows();
    let mut out = Vec::with_capacity(n);
    for row in 0..n {
        let mut node = tree.root();
        while let Some(split) = node.split.as_ref() {
            let column = ds.column(&split.variable)?;
            let (left_id, right_id) = (node.left.unwrap(), node.right.unwrap());
            let go_left = match (&split.kind, column.is_numeric()) {
                (SplitKind::Numeric { cutpoint }, true) => {
                    column.as_numeric().unwrap()[row] <= *cutpoint
                }
                (SplitKind::Categorical { left_levels, right_levels }, false) => {
                    let (idx, levels) = column.as_categorical().unwrap();
                    let name = &levels[idx[row]];
                    if left_levels.iter().any(|l| l == name) {
                        true
                    } else if right_levels.iter().any(|l| l == name) {
                        false
                    } else {
                        tree.node(left_id).n_obs >= tree.node(right_id).n_obs
                    }
                }
                (SplitKind::Numeric { .. }, false) => {
                    return Err(Error::ColumnType {
                        name: split.variable.clone(),
                        expected: "numeric",
                        found: "categorical",
                    })
                }
                (SplitKind::Categorical { .. }, true) => {
                    return Err(Error::ColumnType {
                        name: split.variable.clone(),
                        expected: "categorical",
                        found: "numeric",
                    })
                }
            };
            node = tree.node(if go_left { left_id } else { right_id });
        }
        out.push(node.id);
    }
    Ok(out)
}

/// Full two-step procedure: outcome model, predicted benefits, weighted
/// classification tree on the benefit signs.
pub fn fit_otr(ds: &Dataset, spec: &RoleSpec, control: &OtrControl) -> Result<OtrModel> {
    let outcome = fit_outcome_model(ds, spec)?;
    let (labels, weights) = predicted_benefit(&outcome, ds)?;
    let tree = fit_weighted_cart(ds, &spec.split_vars, &labels, &weights, control)?;
    Ok(OtrModel { outcome, tree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::Column;
    use crate::family::Family;

    fn noise(i: usize) -> f64 {
        // Deterministic values in (-0.5, 0.5) with no pattern in z.
        let x = (i as f64 * 12.9898).sin() * 43758.5453;
        x - x.floor() - 0.5
    }

    fn benefit_data(n: usize) -> Dataset {
        let z1: Vec<f64> = (0..n).map(|i| -2.0 + 4.0 * (i as f64) / (n as f64 - 1.0)).collect();
        let xa: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 2) as f64).collect();
        let y: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * z1[i] + xa[i] * (0.2 + 1.0 * z1[i]) + 0.1 * noise(i))
            .collect();
        Dataset::new(vec![
            Column::numeric("y", y),
            Column::numeric("xa", xa),
            Column::numeric("z1", z1),
        ])
        .unwrap()
    }

    fn spec() -> RoleSpec {
        // z1 is both a prognostic main effect and an interaction basis, as
        // in the usual outcome-model setup.
        let mut s = RoleSpec::new(
            "y",
            vec!["xa".into()],
            vec!["z1".into()],
            vec!["z1".into()],
            Family::Gaussian,
        );
        s.allow_overlap = true;
        s
    }

    #[test]
    fn outcome_design_columns() {
        let ds = benefit_data(40);
        let model = fit_outcome_model(&ds, &spec()).unwrap();
        assert_eq!(
            model.fit.column_names,
            vec!["(intercept)", "xa", "z1", "xa:z1"]
        );
        assert!(model.dropped.is_empty());
    }

    #[test]
    fn benefit_matches_construction() {
        // Effect is 0.2 + z1, so the label flips at z1 = -0.2 and the
        // weight is |0.2 + z1| up to estimation error.
        let ds = benefit_data(400);
        let model = fit_outcome_model(&ds, &spec()).unwrap();
        let (labels, weights) = predicted_benefit(&model, &ds).unwrap();
        let z1 = ds.numeric_column("z1").unwrap();
        for i in 0..ds.n_rows() {
            let truth = 0.2 + z1[i];
            if truth.abs() > 0.1 {
                assert_eq!(labels[i], truth > 0.0, "row {i}");
                assert!((weights[i] - truth.abs()).abs() < 0.1);
            }
        }
    }

    #[test]
    fn constant_treatment_rejected() {
        let n = 30;
        let ds = Dataset::new(vec![
            Column::numeric("y", (0..n).map(|i| noise(i)).collect()),
            Column::numeric("xa", vec![1.0; n]),
            Column::numeric("z1", (0..n).map(|i| i as f64).collect()),
        ])
        .unwrap();
        let err = fit_outcome_model(&ds, &spec()).unwrap_err();
        assert!(matches!(err, Error::TreatmentConstant(_)));
    }

    #[test]
    fn collinear_interaction_dropped() {
        // z2 duplicates z1, so exactly one interaction column must go and
        // the fit still succeeds.
        let ds0 = benefit_data(60);
        let z1 = ds0.numeric_column("z1").unwrap().to_vec();
        let ds = Dataset::new(vec![
            Column::numeric("y", ds0.numeric_column("y").unwrap().to_vec()),
            Column::numeric("xa", ds0.numeric_column("xa").unwrap().to_vec()),
            Column::numeric("z1", z1.clone()),
            Column::numeric("z2", z1),
        ])
        .unwrap();
        let mut s = spec();
        s.split_vars = vec!["z1".into(), "z2".into()];
        let model = fit_outcome_model(&ds, &s).unwrap();
        assert_eq!(model.dropped, vec!["xa:z2".to_string()]);
        assert_eq!(model.fit.column_names.len(), 4);
    }

    #[test]
    fn pure_labels_make_single_leaf() {
        let n = 50;
        let ds = Dataset::new(vec![Column::numeric(
            "z1",
            (0..n).map(|i| noise(i)).collect(),
        )])
        .unwrap();
        let tree = fit_weighted_cart(
            &ds,
            &["z1".into()],
            &vec![true; n],
            &vec![1.0; n],
            &OtrControl::default(),
        )
        .unwrap();
        assert_eq!(tree.n_leaves(), 1);
        assert!(tree.root().class());
    }

    #[test]
    fn threshold_labels_recover_cutpoint() {
        let n = 400;
        let z1: Vec<f64> = (0..n).map(|i| -1.0 + 2.0 * (i as f64) / (n as f64 - 1.0)).collect();
        let labels: Vec<bool> = z1.iter().map(|&z| z > 0.0).collect();
        let ds = Dataset::new(vec![Column::numeric("z1", z1)]).unwrap();
        let tree = fit_weighted_cart(
            &ds,
            &["z1".into()],
            &labels,
            &vec![1.0; n],
            &OtrControl::default(),
        )
        .unwrap();
        let root = tree.root();
        let split = root.split.as_ref().expect("root must split");
        match &split.kind {
            SplitKind::Numeric { cutpoint } => assert!(cutpoint.abs() < 0.05),
            other => panic!("unexpected split {other:?}"),
        }
        // Perfectly separable labels: the pruned tree stays at one split.
        assert_eq!(tree.n_leaves(), 2);
        let regime = otr_regime(&tree, &ds).unwrap();
        let agree = regime
            .iter()
            .zip(labels.iter())
            .filter(|(a, b)| a == b)
            .count();
        assert!(agree as f64 / n as f64 >= 0.95);
    }

    #[test]
    fn heavy_row_classified_correctly() {
        let n = 80;
        let z1: Vec<f64> = (0..n).map(|i| i as f64 / n as f64).collect();
        let mut labels = vec![false; n];
        labels[10] = true;
        let mut weights = vec![1.0; n];
        weights[10] = 1e6;
        let ds = Dataset::new(vec![Column::numeric("z1", z1)]).unwrap();
        let tree = fit_weighted_cart(
            &ds,
            &["z1".into()],
            &labels,
            &weights,
            &OtrControl::default(),
        )
        .unwrap();
        let regime = otr_regime(&tree, &ds).unwrap();
        assert!(regime[10]);
    }

    #[test]
    fn zero_weight_gives_control_leaf() {
        let ds = Dataset::new(vec![Column::numeric("z1", vec![0.0, 1.0, 2.0])]).unwrap();
        let tree = fit_weighted_cart(
            &ds,
            &["z1".into()],
            &[true, false, true],
            &[0.0, 0.0, 0.0],
            &OtrControl::default(),
        )
        .unwrap();
        assert_eq!(tree.n_leaves(), 1);
        assert!(!tree.root().class());
    }

    #[test]
    fn ties_vote_control() {
        let node = ClassNode {
            id: 1,
            split: None,
            left: None,
            right: None,
            treat_weight: 2.5,
            control_weight: 2.5,
            n_obs: 10,
            depth: 0,
        };
        assert!(!node.class());
    }

    #[test]
    fn end_to_end_regime_on_threshold_effect() {
        let ds = benefit_data(400);
        let model = fit_otr(&ds, &spec(), &OtrControl::default()).unwrap();
        let z1 = ds.numeric_column("z1").unwrap();
        let regime = otr_regime(&model.tree, &ds).unwrap();
        let mut agree = 0;
        let mut considered = 0;
        for i in 0..ds.n_rows() {
            let truth = 0.2 + z1[i];
            if truth.abs() > 0.2 {
                considered += 1;
                if regime[i] == (truth > 0.0) {
                    agree += 1;
                }
            }
        }
        assert!(agree as f64 / considered as f64 >= 0.95);
    }
}
