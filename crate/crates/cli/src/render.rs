//! Human-readable views of a fitted model: a DOT digraph and a plain-text
//! tree summary.

use std::fmt::Write as _;

use crate::document::{NamedValue, NodeDoc, SplitDoc, TreeDocument};

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn fmt_value(v: f64) -> String {
    format!("{v:.4}")
}

fn split_rule(split: &SplitDoc, left: bool) -> String {
    match split {
        SplitDoc::Numeric { variable, cutpoint } => {
            let op = if left { "<=" } else { ">" };
            format!("{variable} {op} {}", fmt_value(*cutpoint))
        }
        SplitDoc::Categorical {
            variable,
            left_levels,
            right_levels,
        } => {
            let levels = if left { left_levels } else { right_levels };
            format!("{variable} in {{{}}}", levels.join(", "))
        }
    }
}

fn coefficient_lines(coefficients: &[NamedValue]) -> Vec<String> {
    coefficients
        .iter()
        .map(|c| format!("{} = {}", c.name, fmt_value(c.value)))
        .collect()
}

/// DOT digraph with per-node coefficient labels; edges carry the branch
/// rules.
pub fn to_dot(doc: &TreeDocument) -> String {
    let mut out = String::new();
    out.push_str("digraph model_tree {\n");
    out.push_str("  node [shape=box, fontname=\"Helvetica\"];\n");
    for node in &doc.nodes {
        let mut label = format!("node {} (n={})", node.id, node.n_obs);
        if node.split.is_none() {
            for line in coefficient_lines(&node.coefficients) {
                label.push_str("\\n");
                label.push_str(&line);
            }
        } else if let Some(best) = node
            .instability
            .iter()
            .filter(|r| r.testable)
            .min_by(|a, b| a.p_adjusted.partial_cmp(&b.p_adjusted).unwrap())
        {
            let _ = write!(label, "\\n{} (p={:.3e})", best.variable, best.p_adjusted);
        }
        let _ = writeln!(out, "  n{} [label=\"{}\"];", node.id, dot_escape(&label));
    }
    for node in &doc.nodes {
        if let (Some(split), Some(l), Some(r)) = (&node.split, node.left, node.right) {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                node.id,
                l,
                dot_escape(&split_rule(split, true))
            );
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"{}\"];",
                node.id,
                r,
                dot_escape(&split_rule(split, false))
            );
        }
    }
    out.push_str("}\n");
    out
}

/// Indented text rendering: split rules on inner nodes, coefficients on
/// leaves, then the global coefficient table and convergence state.
pub fn to_text(doc: &TreeDocument) -> String {
    let mut out = String::new();
    let n_leaves = doc.nodes.iter().filter(|n| n.split.is_none()).count();
    let _ = writeln!(
        out,
        "model tree: family {}, {} nodes, {} leaves",
        doc.family,
        doc.nodes.len(),
        n_leaves
    );
    if let Some(root) = doc.nodes.iter().find(|n| n.parent.is_none()) {
        render_node(doc, root, 0, "root", &mut out);
    }
    if !doc.gamma.is_empty() {
        out.push_str("global coefficients:\n");
        for c in &doc.gamma {
            let _ = writeln!(out, "  {} = {}", c.name, fmt_value(c.value));
        }
    }
    if !doc.trace.is_empty() {
        let _ = writeln!(
            out,
            "converged: {} after {} iteration(s)",
            if doc.converged { "yes" } else { "no" },
            doc.trace.len()
        );
    }
    out
}

fn render_node(doc: &TreeDocument, node: &NodeDoc, depth: usize, rule: &str, out: &mut String) {
    let indent = "  ".repeat(depth);
    let _ = write!(
        out,
        "{indent}[{}] {rule}: n={}, loglik={:.4}",
        node.id, node.n_obs, node.loglik
    );
    if node.split.is_none() {
        let coefs = coefficient_lines(&node.coefficients).join(", ");
        let _ = writeln!(out, "; {coefs}");
        return;
    }
    out.push('\n');
    if let (Some(split), Some(l), Some(r)) = (&node.split, node.left, node.right) {
        let find = |id: usize| doc.nodes.iter().find(|n| n.id == id);
        if let Some(left) = find(l) {
            render_node(doc, left, depth + 1, &split_rule(split, true), out);
        }
        if let Some(right) = find(r) {
            render_node(doc, right, depth + 1, &split_rule(split, false), out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::document::{document_from_palm, document_from_tree};
    use palmgrove_core::{
        fit_palm, grow_tree, Column, Dataset, Family, PalmControl, RoleSpec, TreeControl,
    };

    fn fitted_doc() -> TreeDocument {
        let n = 140;
        let z1: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64 * 2.0 - 1.0).collect();
        let z2: Vec<f64> = (0..n).map(|i| ((i * 53 % 97) as f64 / 97.0) - 0.5).collect();
        let y: Vec<f64> = (0..n)
            .map(|i| {
                let jump = if z1[i] > 0.0 { 3.0 } else { 0.0 };
                jump + z2[i] + 0.01 * ((i * 31 % 17) as f64 - 8.0)
            })
            .collect();
        let ds = Dataset::new(vec![
            Column::numeric("y", y),
            Column::numeric("z1", z1),
            Column::numeric("z2", z2),
        ])
        .unwrap();
        let mut spec = RoleSpec::new(
            "y",
            Vec::new(),
            vec!["z2".into()],
            vec!["z1".into(), "z2".into()],
            Family::Gaussian,
        );
        spec.allow_overlap = true;
        let model = fit_palm(&ds, &spec, &PalmControl::default()).unwrap();
        document_from_palm(&model, None)
    }

    #[test]
    fn dot_output_is_a_wellformed_digraph() {
        let doc = fitted_doc();
        let dot = to_dot(&doc);
        assert!(dot.starts_with("digraph model_tree {"));
        assert!(dot.trim_end().ends_with('}'));
        assert_eq!(dot.matches("->").count(), doc.nodes.len() - 1);
        for node in &doc.nodes {
            assert!(dot.contains(&format!("n{} [label=", node.id)));
        }
    }

    #[test]
    fn dot_labels_escape_quotes() {
        let mut doc = fitted_doc();
        if let Some(SplitDoc::Numeric { variable, .. }) = &mut doc.nodes[0].split {
            *variable = "weird\"name".into();
        }
        let dot = to_dot(&doc);
        assert!(dot.contains("weird\\\"name"));
    }

    #[test]
    fn text_summary_shows_rules_leaf_coefficients_and_gamma() {
        let doc = fitted_doc();
        let text = to_text(&doc);
        assert!(text.contains("model tree: family gaussian"));
        assert!(text.contains("z1 <= "));
        assert!(text.contains("(intercept) = "));
        assert!(text.contains("global coefficients:"));
        assert!(text.contains("z2 = "));
        assert!(text.contains("converged: yes"));
    }

    #[test]
    fn plain_tree_summary_omits_gamma_table() {
        let n = 60;
        let ds = Dataset::new(vec![
            Column::numeric("y", (0..n).map(|i| i as f64 * 0.01).collect()),
            Column::numeric("z1", (0..n).map(|i| i as f64).collect()),
        ])
        .unwrap();
        let spec = RoleSpec::new("y", Vec::new(), Vec::new(), vec!["z1".into()], Family::Gaussian);
        let tree = grow_tree(&ds, &spec, &TreeControl::default(), None).unwrap();
        let text = to_text(&document_from_tree(&tree, None));
        assert!(!text.contains("global coefficients"));
        assert!(!text.contains("converged:"));
    }
}
