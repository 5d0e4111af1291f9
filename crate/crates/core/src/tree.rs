//! Recursive partitioning with per-node GLMs.
//!
//! Each node fits the varying-regressor model (plus any offset), tests the
//! score contributions for instability along the candidate split variables,
//! and, when a variable survives the Bonferroni-corrected level, splits at
//! the point maximizing the summed child log-likelihoods. Growth stops on
//! non-rejection, minimum node size or maximum depth.

use ndarray::{Array1, Array2, ArrayView1, Axis};

use crate::data::{design_matrix, ColumnData, Dataset, Design, RoleSpec};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::fluct::{select_split_variable, InstabilityResult};
use crate::glm::{fit_glm, FitResult, DISPERSION_FLOOR};
use crate::linalg::solve_spd;

#[derive(Debug, Clone, PartialEq)]
pub enum SplitKind {
    /// Rule: z <= cutpoint goes left. The cutpoint is the midpoint of the
    /// two observed values bracketing the chosen boundary.
    Numeric { cutpoint: f64 },
    /// Rule: level in `left_levels` goes left. Only training-observed
    /// levels appear; unseen levels at prediction use the fallback rule.
    Categorical {
        left_levels: Vec<String>,
        right_levels: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Split {
    pub variable: String,
    pub kind: SplitKind,
}

#[derive(Debug, Clone)]
pub struct Branch {
    pub split: Split,
    pub left: usize,
    pub right: usize,
}

#[derive(Debug, Clone)]
pub struct TreeNode {
    /// Preorder id starting at 1.
    pub id: usize,
    pub fit: FitResult,
    pub branch: Option<Branch>,
    pub n_obs: usize,
    pub depth: usize,
    pub instability: Vec<InstabilityResult>,
    /// Training-row indices routed to this node.
    pub training_rows: Vec<usize>,
}

impl TreeNode {
    pub fn is_leaf(&self) -> bool {
        self.branch.is_none()
    }

    pub fn split(&self) -> Option<&Split> {
        self.branch.as_ref().map(|b| &b.split)
    }
}

#[derive(Debug, Clone)]
pub struct TreeControl {
    pub alpha: f64,
    /// None picks max(20, 10 K) at fit time, K the varying design width.
    pub min_node_size: Option<usize>,
    pub max_depth: usize,
    pub trim: f64,
    /// Numeric boundaries above this count are thinned to evenly spaced
    /// candidates.
    pub max_split_candidates: usize,
}

impl Default for TreeControl {
    fn default() -> Self {
        TreeControl {
            alpha: 0.05,
            min_node_size: None,
            max_depth: 10,
            trim: 0.1,
            max_split_candidates: 2000,
        }
    }
}

impl TreeControl {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::InvalidControl(format!("alpha {} not in (0, 1)", self.alpha)));
        }
        if !(self.trim > 0.0 && self.trim < 0.5) {
            return Err(Error::InvalidControl(format!("trim {} not in (0, 0.5)", self.trim)));
        }
        if self.max_split_candidates == 0 {
            return Err(Error::InvalidControl("max_split_candidates must be positive".into()));
        }
        Ok(())
    }

    fn resolved_min_size(&self, k: usize) -> Result<usize> {
        let m = self.min_node_size.unwrap_or_else(|| 20.max(10 * k));
        if m < k + 1 {
            return Err(Error::InvalidControl(format!(
                "min_node_size {m} below K+1 = {}",
                k + 1
            )));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone)]
pub struct ModelTree {
    /// Nodes in preorder; `nodes[i].id == i + 1`.
    pub nodes: Vec<TreeNode>,
    pub family: Family,
    pub response: String,
    pub varying: Vec<String>,
    pub intercept: bool,
    pub split_vars: Vec<String>,
    /// Expanded design column names of the varying part.
    pub design_names: Vec<String>,
    pub warnings: Vec<String>,
}

impl ModelTree {
    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }

    pub fn node(&self, id: usize) -> &TreeNode {
        &self.nodes[id - 1]
    }

    pub fn leaves(&self) -> Vec<&TreeNode> {
        self.nodes.iter().filter(|n| n.is_leaf()).collect()
    }

    pub fn n_leaves(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_leaf()).count()
    }

    /// Refits every node's model against a new offset, keeping the
    /// structure fixed. Used by the alternating global-coefficient loop.
    pub fn refit_with_offset(&mut self, ds: &Dataset, offset: Option<&Array1<f64>>) -> Result<()> {
        let design = design_matrix(ds, &self.varying, self.intercept)?;
        if design.names != self.design_names {
            return Err(Error::DesignMismatch {
                expected: self.design_names.clone(),
                got: design.names,
            });
        }
        let y = Array1::from_vec(ds.numeric_column(&self.response)?.to_vec());
        for node in &mut self.nodes {
            let rows = &node.training_rows;
            let x = design.matrix.select(Axis(0), rows);
            let y_node = Array1::from_iter(rows.iter().map(|&i| y[i]));
            let off = offset.map(|o| Array1::from_iter(rows.iter().map(|&i| o[i])));
            node.fit = fit_glm(
                &x,
                &y_node,
                self.family,
                off.as_ref(),
                None,
                Some(&self.design_names),
            )?;
        }
        Ok(())
    }
}

/// Labels produced by routing a dataset through a tree.
#[derive(Debug, Clone)]
pub struct PartitionMap {
    /// Leaf label per row, 1..=n_leaves in preorder leaf order.
    pub labels: Vec<usize>,
    /// Node id of each leaf label; index = label - 1.
    pub leaf_node_ids: Vec<usize>,
    /// Rows routed by the unseen-level fallback rule.
    pub unseen_fallbacks: usize,
}

struct Grower<'a> {
    ds: &'a Dataset,
    spec: &'a RoleSpec,
    control: &'a TreeControl,
    offset: Option<&'a Array1<f64>>,
    design: Design,
    y: Array1<f64>,
    min_size: usize,
    nodes: Vec<TreeNode>,
    warnings: Vec<String>,
}

/// Sufficient statistics of a gaussian least-squares block. The split scan
/// accumulates these instead of refitting children, evaluating the same
/// closed-form log-likelihood as the full fit.
#[derive(Clone)]
struct GaussBlock {
    xtx: Array2<f64>,
    xty: Array1<f64>,
    yty: f64,
    n: usize,
}

impl GaussBlock {
    fn new(k: usize) -> GaussBlock {
        GaussBlock {
            xtx: Array2::zeros((k, k)),
            xty: Array1::zeros(k),
            yty: 0.0,
            n: 0,
        }
    }

    fn add_row(&mut self, x: ArrayView1<f64>, y: f64) {
        let k = self.xty.len();
        for a in 0..k {
            let xa = x[a];
            self.xty[a] += xa * y;
            for b in a..k {
                self.xtx[[a, b]] += xa * x[b];
            }
        }
        self.yty += y * y;
        self.n += 1;
    }

    fn add(&mut self, other: &GaussBlock) {
        self.xtx += &other.xtx;
        self.xty += &other.xty;
        self.yty += other.yty;
        self.n += other.n;
    }

    fn minus(&self, other: &GaussBlock) -> GaussBlock {
        GaussBlock {
            xtx: &self.xtx - &other.xtx,
            xty: &self.xty - &other.xty,
            yty: self.yty - other.yty,
            n: self.n - other.n,
        }
    }

    /// Maximized log-likelihood of the block, or None when the normal
    /// equations are singular or the block is too small to fit.
    fn loglik(&self) -> Option<f64> {
        let k = self.xty.len();
        if self.n <= k {
            return None;
        }
        let mut m = self.xtx.clone();
        for a in 0..k {
            for b in 0..a {
                m[[a, b]] = m[[b, a]];
            }
        }
        let beta = solve_spd(&m, &self.xty, 1e-12)?;
        let quad = beta.dot(&m.dot(&beta));
        let rss = (self.yty - 2.0 * beta.dot(&self.xty) + quad).max(0.0);
        let n = self.n as f64;
        let sigma2 = (rss / n).max(DISPERSION_FLOOR);
        Some(-0.5 * n * (2.0 * std::f64::consts::PI * sigma2).ln() - rss / (2.0 * sigma2))
    }
}

pub fn grow_tree(
    ds: &Dataset,
    spec: &RoleSpec,
    control: &TreeControl,
    offset: Option<&Array1<f64>>,
) -> Result<ModelTree> {
    spec.validate(ds)?;
    control.validate()?;
    if let Some(o) = offset {
        if o.len() != ds.n_rows() {
            return Err(Error::DimensionMismatch {
                expected: ds.n_rows(),
                got: o.len(),
            });
        }
    }
    let design = design_matrix(ds, &spec.varying, spec.intercept)?;
    let y = Array1::from_vec(ds.numeric_column(&spec.response)?.to_vec());
    let min_size = control.resolved_min_size(design.n_cols())?;
    let mut grower = Grower {
        ds,
        spec,
        control,
        offset,
        design,
        y,
        min_size,
        nodes: Vec::new(),
        warnings: Vec::new(),
    };
    let all_rows: Vec<usize> = (0..ds.n_rows()).collect();
    grower.grow(all_rows, 0)?;
    Ok(ModelTree {
        nodes: grower.nodes,
        family: spec.family,
        response: spec.response.clone(),
        varying: spec.varying.clone(),
        intercept: spec.intercept,
        split_vars: spec.split_vars.clone(),
        design_names: grower.design.names,
        warnings: grower.warnings,
    })
}

impl<'a> Grower<'a> {
    fn fit_rows(&self, rows: &[usize]) -> Result<FitResult> {
        let x = self.design.matrix.select(Axis(0), rows);
        let y = Array1::from_iter(rows.iter().map(|&i| self.y[i]));
        let off = self
            .offset
            .map(|o| Array1::from_iter(rows.iter().map(|&i| o[i])));
        fit_glm(
            &x,
            &y,
            self.spec.family,
            off.as_ref(),
            None,
            Some(&self.design.names),
        )
    }

    fn grow(&mut self, rows: Vec<usize>, depth: usize) -> Result<usize> {
        let id = self.nodes.len() + 1;
        let fit = self.fit_rows(&rows)?;
        if !fit.converged {
            self.warnings
                .push(format!("node {id}: model did not converge in {} iterations", fit.iterations));
        }
        let n_node = rows.len();
        self.nodes.push(TreeNode {
            id,
            fit,
            branch: None,
            n_obs: n_node,
            depth,
            instability: Vec::new(),
            training_rows: rows.clone(),
        });
        if depth >= self.control.max_depth || n_node < 2 * self.min_size {
            return Ok(id);
        }
        let ds_node = self.ds.take_rows(&rows)?;
        let (winner, results) = select_split_variable(
            &self.nodes[id - 1].fit,
            &ds_node,
            &self.spec.split_vars,
            self.control.alpha,
            self.control.trim,
        )?;
        self.nodes[id - 1].instability = results;
        let Some(variable) = winner else {
            return Ok(id);
        };
        let Some((split, left_rows, right_rows)) = self.find_split(&ds_node, &rows, &variable)? else {
            self.warnings.push(format!(
                "node {id}: variable {variable} selected but no admissible split point"
            ));
            return Ok(id);
        };
        let left = self.grow(left_rows, depth + 1)?;
        let right = self.grow(right_rows, depth + 1)?;
        self.nodes[id - 1].branch = Some(Branch { split, left, right });
        Ok(id)
    }

    /// Exhaustive search over admissible boundaries of `variable`,
    /// maximizing the summed child log-likelihoods. `ds_node` is the node's
    /// rows in the order of `rows`.
    fn find_split(
        &mut self,
        ds_node: &Dataset,
        rows: &[usize],
        variable: &str,
    ) -> Result<Option<(Split, Vec<usize>, Vec<usize>)>> {
        match &ds_node.column(variable)?.data {
            ColumnData::Numeric(z) => self.find_numeric_split(z, rows, variable),
            ColumnData::Categorical { indices, levels } => {
                self.find_categorical_split(indices, levels, rows, variable)
            }
        }
    }

    fn find_numeric_split(
        &mut self,
        z: &[f64],
        rows: &[usize],
        variable: &str,
    ) -> Result<Option<(Split, Vec<usize>, Vec<usize>)>> {
        let n = rows.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| z[a].partial_cmp(&z[b]).unwrap().then(a.cmp(&b)));
        let mut boundaries: Vec<usize> = Vec::new();
        for i in self.min_size..=n.saturating_sub(self.min_size) {
            if i < n && z[order[i - 1]] != z[order[i]] {
                boundaries.push(i);
            }
        }
        if boundaries.is_empty() {
            return Ok(None);
        }
        if boundaries.len() > self.control.max_split_candidates {
            let m = self.control.max_split_candidates;
            let picked: Vec<usize> = (0..m)
                .map(|t| boundaries[t * (boundaries.len() - 1) / (m - 1)])
                .collect();
            boundaries = picked;
            boundaries.dedup();
        }

        let mut best: Option<(f64, usize)> = None;
        if self.spec.family.is_gaussian() {
            let k = self.design.n_cols();
            let mut prefix = GaussBlock::new(k);
            let mut snaps: Vec<GaussBlock> = Vec::with_capacity(boundaries.len());
            let mut next = 0;
            for pos in 0..n {
                let row = rows[order[pos]];
                let yv = self.y[row] - self.offset.map_or(0.0, |o| o[row]);
                prefix.add_row(self.design.matrix.row(row), yv);
                if next < boundaries.len() && boundaries[next] == pos + 1 {
                    snaps.push(prefix.clone());
                    next += 1;
                }
            }
            let total = prefix;
            for (snap, &i) in snaps.iter().zip(&boundaries) {
                let right = total.minus(snap);
                let (Some(ll_l), Some(ll_r)) = (snap.loglik(), right.loglik()) else {
                    continue;
                };
                let ll = ll_l + ll_r;
                if best.is_none_or(|(b, _)| ll > b) {
                    best = Some((ll, i));
                }
            }
        } else {
            for &i in &boundaries {
                let left: Vec<usize> = order[..i].iter().map(|&p| rows[p]).collect();
                let right: Vec<usize> = order[i..].iter().map(|&p| rows[p]).collect();
                let (Ok(fl), Ok(fr)) = (self.fit_rows(&left), self.fit_rows(&right)) else {
                    continue;
                };
                let ll = fl.loglik + fr.loglik;
                if best.is_none_or(|(b, _)| ll > b) {
                    best = Some((ll, i));
                }
            }
        }
        let Some((_, i)) = best else {
            return Ok(None);
        };
        let cutpoint = 0.5 * (z[order[i - 1]] + z[order[i]]);
        let left: Vec<usize> = order[..i].iter().map(|&p| rows[p]).collect();
        let right: Vec<usize> = order[i..].iter().map(|&p| rows[p]).collect();
        Ok(Some((
            Split {
                variable: variable.to_string(),
                kind: SplitKind::Numeric { cutpoint },
            },
            left,
            right,
        )))
    }

    fn find_categorical_split(
        &mut self,
        indices: &[usize],
        levels: &[String],
        rows: &[usize],
        variable: &str,
    ) -> Result<Option<(Split, Vec<usize>, Vec<usize>)>> {
        let n = rows.len();
        let mut counts = vec![0usize; levels.len()];
        for &ix in indices {
            counts[ix] += 1;
        }
        let observed: Vec<usize> = (0..levels.len()).filter(|&c| counts[c] > 0).collect();
        let c = observed.len();
        if c < 2 {
            return Ok(None);
        }

        // Candidate left-side level sets.
        let candidate_sets: Vec<Vec<usize>> = if c <= 10 {
            // All proper binary partitions, pinning the first observed
            // level to the left side to avoid mirrored duplicates.
            let rest = &observed[1..];
            let full = (1usize << rest.len()) - 1;
            (0..full)
                .map(|mask| {
                    let mut left = vec![observed[0]];
                    for (b, &lvl) in rest.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            left.push(lvl);
                        }
                    }
                    left
                })
                .collect()
        } else {
            // Order levels by mean response and cut that ordering.
            let mut sums = vec![0.0_f64; levels.len()];
            for (pos, &ix) in indices.iter().enumerate() {
                sums[ix] += self.y[rows[pos]];
            }
            let mut ordered = observed.clone();
            ordered.sort_by(|&a, &b| {
                let ma = sums[a] / counts[a] as f64;
                let mb = sums[b] / counts[b] as f64;
                ma.partial_cmp(&mb).unwrap().then(a.cmp(&b))
            });
            (1..c).map(|j| ordered[..j].to_vec()).collect()
        };

        let level_blocks: Option<(Vec<GaussBlock>, GaussBlock)> =
            if self.spec.family.is_gaussian() {
                let k = self.design.n_cols();
                let mut blocks = vec![GaussBlock::new(k); levels.len()];
                let mut total = GaussBlock::new(k);
                for (pos, &ix) in indices.iter().enumerate() {
                    let row = rows[pos];
                    let yv = self.y[row] - self.offset.map_or(0.0, |o| o[row]);
                    blocks[ix].add_row(self.design.matrix.row(row), yv);
                    total.add_row(self.design.matrix.row(row), yv);
                }
                Some((blocks, total))
            } else {
                None
            };

        let mut best: Option<(f64, Vec<usize>)> = None;
        for left_set in candidate_sets {
            let in_left = |ix: usize| left_set.contains(&ix);
            let n_left: usize = left_set.iter().map(|&l| counts[l]).sum();
            if n_left < self.min_size || n - n_left < self.min_size {
                continue;
            }
            let ll = match &level_blocks {
                Some((blocks, total)) => {
                    let mut left_block = GaussBlock::new(self.design.n_cols());
                    for &l in &left_set {
                        left_block.add(&blocks[l]);
                    }
                    let right_block = total.minus(&left_block);
                    match (left_block.loglik(), right_block.loglik()) {
                        (Some(a), Some(b)) => a + b,
                        _ => continue,
                    }
                }
                None => {
                    let mut left = Vec::with_capacity(n_left);
                    let mut right = Vec::with_capacity(n - n_left);
                    for (pos, &ix) in indices.iter().enumerate() {
                        if in_left(ix) {
                            left.push(rows[pos]);
                        } else {
                            right.push(rows[pos]);
                        }
                    }
                    let (Ok(fl), Ok(fr)) = (self.fit_rows(&left), self.fit_rows(&right)) else {
                        continue;
                    };
                    fl.loglik + fr.loglik
                }
            };
            let better = match &best {
                None => true,
                Some((b, set)) => {
                    ll > *b || (ll == *b && sorted_names(levels, &left_set) < sorted_names(levels, set))
                }
            };
            if better {
                best = Some((ll, left_set));
            }
        }
        let Some((_, left_set)) = best else {
            return Ok(None);
        };
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (pos, &ix) in indices.iter().enumerate() {
            if left_set.contains(&ix) {
                left.push(rows[pos]);
            } else {
                right.push(rows[pos]);
            }
        }
        let left_levels: Vec<String> = observed
            .iter()
            .filter(|l| left_set.contains(l))
            .map(|&l| levels[l].clone())
            .collect();
        let right_levels: Vec<String> = observed
            .iter()
            .filter(|l| !left_set.contains(l))
            .map(|&l| levels[l].clone())
            .collect();
        Ok(Some((
            Split {
                variable: variable.to_string(),
                kind: SplitKind::Categorical {
                    left_levels,
                    right_levels,
                },
            },
            left,
            right,
        )))
    }
}

fn sorted_names(levels: &[String], set: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = set.iter().map(|&l| levels[l].clone()).collect();
    v.sort();
    v
}

/// Routes every row to a leaf. Labels are 1-based in preorder leaf order.
pub fn predict_partition(tree: &ModelTree, ds: &Dataset) -> Result<PartitionMap> {
    let leaf_node_ids: Vec<usize> = tree
        .nodes
        .iter()
        .filter(|n| n.is_leaf())
        .map(|n| n.id)
        .collect();
    let label_of_node: std::collections::HashMap<usize, usize> = leaf_node_ids
        .iter()
        .enumerate()
        .map(|(pos, &id)| (id, pos + 1))
        .collect();
    let n = ds.n_rows();
    let mut labels = vec![0usize; n];
    let mut unseen = 0usize;
    for row in 0..n {
        let mut node = tree.root();
        while let Some(branch) = &node.branch {
            let goes_left = match &branch.split.kind {
                SplitKind::Numeric { cutpoint } => {
                    let v = ds.numeric_column(&branch.split.variable)?[row];
                    v <= *cutpoint
                }
                SplitKind::Categorical {
                    left_levels,
                    right_levels,
                } => {
                    let col = ds.column(&branch.split.variable)?;
                    let (indices, levels) = col.as_categorical().ok_or_else(|| Error::ColumnType {
                        name: branch.split.variable.clone(),
                        expected: "categorical",
                        found: "numeric",
                    })?;
                    let name = &levels[indices[row]];
                    if left_levels.contains(name) {
                        true
                    } else if right_levels.contains(name) {
                        false
                    } else {
                        // Unseen level: follow the larger training child.
                        unseen += 1;
                        tree.node(branch.left).n_obs >= tree.node(branch.right).n_obs
                    }
                }
            };
            node = tree.node(if goes_left { branch.left } else { branch.right });
        }
        labels[row] = label_of_node[&node.id];
    }
    Ok(PartitionMap {
        labels,
        leaf_node_ids,
        unseen_fallbacks: unseen,
    })
}

/// Predicted means: route to a leaf, apply its model with the offset.
pub fn predict_response(
    tree: &ModelTree,
    ds: &Dataset,
    offset: Option<&Array1<f64>>,
) -> Result<Array1<f64>> {
    let design = design_matrix(ds, &tree.varying, tree.intercept)?;
    if design.names != tree.design_names {
        return Err(Error::DesignMismatch {
            expected: tree.design_names.clone(),
            got: design.names,
        });
    }
    if let Some(o) = offset {
        if o.len() != ds.n_rows() {
            return Err(Error::DimensionMismatch {
                expected: ds.n_rows(),
                got: o.len(),
            });
        }
    }
    let part = predict_partition(tree, ds)?;
    let mut mu = Array1::zeros(ds.n_rows());
    for row in 0..ds.n_rows() {
        let node = tree.node(part.leaf_node_ids[part.labels[row] - 1]);
        let mut eta: f64 = (0..design.n_cols())
            .map(|j| design.matrix[[row, j]] * node.fit.coefficients[j])
            .sum();
        if let Some(o) = offset {
            eta += o[row];
        }
        mu[row] = tree.family.inv_link(eta);
    }
    Ok(mu)
}
