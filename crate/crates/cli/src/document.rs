//! Versioned JSON image of a fitted model. A parsed document rebuilds the
//! in-memory model exactly, so serialized trees predict bit-identically.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use ndarray::{Array1, Array2};
use serde::{Deserialize, Serialize};

use palmgrove_core::fluct::TestKind;
use palmgrove_core::glm::FitResult;
use palmgrove_core::tree::{Branch, TreeNode};
use palmgrove_core::{
    Family, IterationRecord, ModelTree, PalmModel, Split, SplitKind,
};

use crate::error::{input_io, output_io, CliError, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TreeDocument {
    pub format_version: u32,
    pub family: String,
    pub roles: RolesDoc,
    pub converged: bool,
    pub nodes: Vec<NodeDoc>,
    /// Global coefficients in design order; empty without fixed regressors.
    #[serde(default)]
    pub gamma: Vec<NamedValue>,
    /// Alternation history; empty for plain trees.
    #[serde(default)]
    pub trace: Vec<TraceDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RolesDoc {
    pub response: String,
    pub varying: Vec<String>,
    #[serde(default)]
    pub fixed: Vec<String>,
    pub split_vars: Vec<String>,
    pub intercept: bool,
    /// Treatment column for effect reporting, if one was declared.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub treatment: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NodeDoc {
    pub id: usize,
    pub parent: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<usize>,
    pub coefficients: Vec<NamedValue>,
    pub n_obs: usize,
    pub loglik: f64,
    pub dispersion: f64,
    #[serde(default)]
    pub instability: Vec<InstabilityDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SplitDoc {
    Numeric {
        variable: String,
        cutpoint: f64,
    },
    Categorical {
        variable: String,
        left_levels: Vec<String>,
        right_levels: Vec<String>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstabilityDoc {
    pub variable: String,
    pub statistic: f64,
    pub p_value: f64,
    pub p_adjusted: f64,
    pub test: String,
    pub testable: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceDoc {
    pub iteration: usize,
    pub joint_loglik: f64,
    pub step_b_loglik: f64,
    pub n_leaves: usize,
    pub partition_changed: bool,
}

/// A model rebuilt from a document.
pub enum LoadedModel {
    Tree(ModelTree),
    Palm(PalmModel),
}

impl LoadedModel {
    pub fn tree(&self) -> &ModelTree {
        match self {
            LoadedModel::Tree(t) => t,
            LoadedModel::Palm(m) => &m.tree,
        }
    }
}

fn split_doc(split: &Split) -> SplitDoc {
    match &split.kind {
        SplitKind::Numeric { cutpoint } => SplitDoc::Numeric {
            variable: split.variable.clone(),
            cutpoint: *cutpoint,
        },
        SplitKind::Categorical {
            left_levels,
            right_levels,
        } => SplitDoc::Categorical {
            variable: split.variable.clone(),
            left_levels: left_levels.clone(),
            right_levels: right_levels.clone(),
        },
    }
}

fn doc_split(doc: &SplitDoc) -> Split {
    match doc {
        SplitDoc::Numeric { variable, cutpoint } => Split {
            variable: variable.clone(),
            kind: SplitKind::Numeric { cutpoint: *cutpoint },
        },
        SplitDoc::Categorical {
            variable,
            left_levels,
            right_levels,
        } => Split {
            variable: variable.clone(),
            kind: SplitKind::Categorical {
                left_levels: left_levels.clone(),
                right_levels: right_levels.clone(),
            },
        },
    }
}

fn node_docs(tree: &ModelTree) -> Vec<NodeDoc> {
    let mut parents: HashMap<usize, usize> = HashMap::new();
    for node in &tree.nodes {
        if let Some(branch) = &node.branch {
            parents.insert(branch.left, node.id);
            parents.insert(branch.right, node.id);
        }
    }
    tree.nodes
        .iter()
        .map(|node| NodeDoc {
            id: node.id,
            parent: parents.get(&node.id).copied(),
            split: node.branch.as_ref().map(|b| split_doc(&b.split)),
            left: node.branch.as_ref().map(|b| b.left),
            right: node.branch.as_ref().map(|b| b.right),
            coefficients: node
                .fit
                .column_names
                .iter()
                .zip(node.fit.coefficients.iter())
                .map(|(name, &value)| NamedValue {
                    name: name.clone(),
                    value,
                })
                .collect(),
            n_obs: node.n_obs,
            loglik: node.fit.loglik,
            dispersion: node.fit.dispersion,
            instability: node
                .instability
                .iter()
                .map(|r| InstabilityDoc {
                    variable: r.variable.clone(),
                    statistic: r.statistic,
                    p_value: r.p_value,
                    p_adjusted: r.p_adjusted,
                    test: r.kind.to_string(),
                    testable: r.testable,
                })
                .collect(),
        })
        .collect()
}

pub fn document_from_tree(tree: &ModelTree, treatment: Option<&str>) -> TreeDocument {
    TreeDocument {
        format_version: FORMAT_VERSION,
        family: tree.family.name().to_string(),
        roles: RolesDoc {
            response: tree.response.clone(),
            varying: tree.varying.clone(),
            fixed: Vec::new(),
            split_vars: tree.split_vars.clone(),
            intercept: tree.intercept,
            treatment: treatment.map(str::to_string),
        },
        converged: true,
        nodes: node_docs(tree),
        gamma: Vec::new(),
        trace: Vec::new(),
    }
}

pub fn document_from_palm(model: &PalmModel, treatment: Option<&str>) -> TreeDocument {
    let mut doc = document_from_tree(&model.tree, treatment);
    doc.roles.fixed = model.fixed.clone();
    doc.converged = model.converged;
    doc.gamma = model
        .gamma_names
        .iter()
        .zip(model.gamma.iter())
        .map(|(name, &value)| NamedValue {
            name: name.clone(),
            value,
        })
        .collect();
    doc.trace = model
        .trace
        .iter()
        .map(|r| TraceDoc {
            iteration: r.iteration,
            joint_loglik: r.joint_loglik,
            step_b_loglik: r.step_b_loglik,
            n_leaves: r.n_leaves,
            partition_changed: r.partition_changed,
        })
        .collect();
    doc
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(format!("invalid model document: {}", msg.into()))
}

fn parse_test_kind(s: &str) -> Result<TestKind> {
    match s {
        "ordered-supLM" => Ok(TestKind::OrderedSupLm),
        "categorical-chisq" => Ok(TestKind::CategoricalChisq),
        other => Err(bad(format!("unknown test kind '{other}'"))),
    }
}

/// Structural checks plus reconstruction. Node ids are renumbered to
/// preorder, which routing relies on; predictions are unaffected.
pub fn document_to_model(doc: &TreeDocument) -> Result<LoadedModel> {
    if doc.format_version != FORMAT_VERSION {
        return Err(CliError::Input(format!(
            "unsupported model format_version {} (this build reads version {FORMAT_VERSION})",
            doc.format_version
        )));
    }
    let family: Family = doc
        .family
        .parse()
        .map_err(|e: palmgrove_core::Error| CliError::Input(e.to_string()))?;
    if doc.nodes.is_empty() {
        return Err(bad("no nodes"));
    }

    let mut by_id: HashMap<usize, &NodeDoc> = HashMap::new();
    for node in &doc.nodes {
        if by_id.insert(node.id, node).is_some() {
            return Err(bad(format!("duplicate node id {}", node.id)));
        }
    }
    let roots: Vec<usize> = doc
        .nodes
        .iter()
        .filter(|n| n.parent.is_none())
        .map(|n| n.id)
        .collect();
    if roots.len() != 1 {
        return Err(bad(format!("expected exactly one root, found {}", roots.len())));
    }
    for node in &doc.nodes {
        match (&node.split, node.left, node.right) {
            (Some(_), Some(l), Some(r)) => {
                if l == r {
                    return Err(bad(format!("node {} has identical children", node.id)));
                }
                for child in [l, r] {
                    let c = by_id
                        .get(&child)
                        .ok_or_else(|| bad(format!("node {} links to missing node {child}", node.id)))?;
                    if c.parent != Some(node.id) {
                        return Err(bad(format!(
                            "node {child} does not point back to its parent {}",
                            node.id
                        )));
                    }
                }
            }
            (None, None, None) => {}
            _ => {
                return Err(bad(format!(
                    "node {} must carry a split with both children or neither",
                    node.id
                )));
            }
        }
    }

    let design_names: Vec<String> = doc.nodes[0]
        .coefficients
        .iter()
        .map(|c| c.name.clone())
        .collect();
    for node in &doc.nodes {
        let names: Vec<&str> = node.coefficients.iter().map(|c| c.name.as_str()).collect();
        if names != design_names.iter().map(String::as_str).collect::<Vec<_>>() {
            return Err(bad(format!("node {} has mismatched coefficient names", node.id)));
        }
    }
    if doc.roles.fixed.is_empty() != doc.gamma.is_empty() {
        return Err(bad("fixed regressors and gamma must be present together"));
    }
    if let Some(t) = &doc.roles.treatment {
        if !design_names.iter().any(|n| n == t) {
            return Err(bad(format!("treatment '{t}' is not a design column")));
        }
    }

    // Preorder traversal: renumbers ids, assigns depths, detects cycles
    // and disconnected nodes in one pass.
    let mut nodes: Vec<TreeNode> = Vec::with_capacity(doc.nodes.len());
    let mut visited: HashSet<usize> = HashSet::new();
    let mut stack: Vec<(usize, usize)> = vec![(roots[0], 0)];
    let mut new_ids: HashMap<usize, usize> = HashMap::new();
    let mut order: Vec<(usize, usize)> = Vec::new();
    while let Some((id, depth)) = stack.pop() {
        if !visited.insert(id) {
            return Err(bad(format!("node {id} is reachable twice")));
        }
        new_ids.insert(id, order.len() + 1);
        order.push((id, depth));
        let node = by_id[&id];
        if let (Some(l), Some(r)) = (node.left, node.right) {
            // Right pushed first so the left subtree is numbered first.
            stack.push((r, depth + 1));
            stack.push((l, depth + 1));
        }
    }
    if order.len() != doc.nodes.len() {
        return Err(bad(format!(
            "{} of {} nodes unreachable from the root",
            doc.nodes.len() - order.len(),
            doc.nodes.len()
        )));
    }

    for &(id, depth) in &order {
        let node = by_id[&id];
        let coefficients = Array1::from_iter(node.coefficients.iter().map(|c| c.value));
        let k = coefficients.len();
        let fit = FitResult {
            family,
            coefficients,
            column_names: design_names.clone(),
            dispersion: node.dispersion,
            loglik: node.loglik,
            scores: Array2::zeros((0, k)),
            n_obs: node.n_obs,
            converged: true,
            iterations: 0,
        };
        let instability = node
            .instability
            .iter()
            .map(|r| {
                Ok(palmgrove_core::InstabilityResult {
                    variable: r.variable.clone(),
                    statistic: r.statistic,
                    p_value: r.p_value,
                    p_adjusted: r.p_adjusted,
                    kind: parse_test_kind(&r.test)?,
                    testable: r.testable,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let branch = match (&node.split, node.left, node.right) {
            (Some(split), Some(l), Some(r)) => Some(Branch {
                split: doc_split(split),
                left: new_ids[&l],
                right: new_ids[&r],
            }),
            _ => None,
        };
        nodes.push(TreeNode {
            id: new_ids[&id],
            fit,
            branch,
            n_obs: node.n_obs,
            depth,
            instability,
            training_rows: Vec::new(),
        });
    }

    let tree = ModelTree {
        nodes,
        family,
        response: doc.roles.response.clone(),
        varying: doc.roles.varying.clone(),
        intercept: doc.roles.intercept,
        split_vars: doc.roles.split_vars.clone(),
        design_names,
        warnings: Vec::new(),
    };

    if doc.roles.fixed.is_empty() {
        return Ok(LoadedModel::Tree(tree));
    }
    let model = PalmModel {
        tree,
        gamma: Array1::from_iter(doc.gamma.iter().map(|c| c.value)),
        gamma_names: doc.gamma.iter().map(|c| c.name.clone()).collect(),
        fixed: doc.roles.fixed.clone(),
        trace: doc
            .trace
            .iter()
            .map(|r| IterationRecord {
                iteration: r.iteration,
                joint_loglik: r.joint_loglik,
                step_b_loglik: r.step_b_loglik,
                n_leaves: r.n_leaves,
                partition_changed: r.partition_changed,
            })
            .collect(),
        converged: doc.converged,
    };
    Ok(LoadedModel::Palm(model))
}

pub fn write_document(path: &Path, doc: &TreeDocument) -> Result<()> {
    let mut text = serde_json::to_string_pretty(doc)
        .map_err(|e| CliError::Internal(format!("serialization failed: {e}")))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| output_io(path, e))
}

pub fn read_document(path: &Path) -> Result<TreeDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| input_io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}
