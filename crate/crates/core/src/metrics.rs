//! Evaluation measures: adjusted Rand index between partitions, subgroup
//! counts, treatment-regime accuracy and mean absolute effect error.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::tree::ModelTree;

fn pairs(x: u64) -> u128 {
    let x = x as u128;
    x * (x - 1) / 2
}

/// Chance-corrected agreement between two partitions. Pair counts are
/// exact integers; only the final ratio is floating point. Degenerate
/// cases where the denominator vanishes (both all-singleton or both
/// one-cluster) return 1 by convention.
pub fn adjusted_rand_index(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    let n = a.len();
    if n < 2 {
        return Err(Error::InvalidControl(
            "adjusted Rand index needs at least 2 observations".into(),
        ));
    }
    let mut cells: HashMap<(usize, usize), u64> = HashMap::new();
    let mut rows: HashMap<usize, u64> = HashMap::new();
    let mut cols: HashMap<usize, u64> = HashMap::new();
    for (&x, &y) in a.iter().zip(b.iter()) {
        *cells.entry((x, y)).or_insert(0) += 1;
        *rows.entry(x).or_insert(0) += 1;
        *cols.entry(y).or_insert(0) += 1;
    }
    let sum_cells: u128 = cells.values().map(|&c| pairs(c)).sum();
    let sum_rows: u128 = rows.values().map(|&c| pairs(c)).sum();
    let sum_cols: u128 = cols.values().map(|&c| pairs(c)).sum();
    let total = pairs(n as u64);

    let expected = (sum_rows * sum_cols) as f64 / total as f64;
    let num = sum_cells as f64 - expected;
    let den = 0.5 * (sum_rows + sum_cols) as f64 - expected;
    if den == 0.0 {
        return Ok(1.0);
    }
    Ok(num / den)
}

/// Number of leaves of a fitted tree.
pub fn count_subgroups(tree: &ModelTree) -> usize {
    tree.n_leaves()
}

/// Proportion of observations whose estimated effect sign matches the true
/// one. "Treat" means a strictly positive effect, so an exact zero counts
/// as "do not treat" on either side.
pub fn regime_accuracy(estimated: &[f64], truth: &[f64]) -> f64 {
    assert_eq!(estimated.len(), truth.len(), "length mismatch");
    assert!(!estimated.is_empty(), "empty effect vectors");
    let agree = estimated
        .iter()
        .zip(truth.iter())
        .filter(|(&e, &t)| (e > 0.0) == (t > 0.0))
        .count();
    agree as f64 / estimated.len() as f64
}

/// Mean absolute difference between estimated and true effects.
pub fn treatment_mae(estimated: &[f64], truth: &[f64]) -> f64 {
    assert_eq!(estimated.len(), truth.len(), "length mismatch");
    assert!(!estimated.is_empty(), "empty effect vectors");
    let total: f64 = estimated
        .iter()
        .zip(truth.iter())
        .map(|(&e, &t)| (e - t).abs())
        .sum();
    total / estimated.len() as f64
}

/// Fraction of runs that found more than one subgroup; `leaf_counts` holds
/// the per-run leaf counts of models fitted under a no-subgroup truth.
pub fn type1_rate(leaf_counts: &[usize]) -> f64 {
    assert!(!leaf_counts.is_empty(), "no runs");
    leaf_counts.iter().filter(|&&c| c > 1).count() as f64 / leaf_counts.len() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_partitions_score_one() {
        let a = vec![1, 1, 2, 2, 3, 3];
        assert!((adjusted_rand_index(&a, &a).unwrap() - 1.0).abs() < 1e-15);
        // Same under a label permutation.
        let b = vec![7, 7, 1, 1, 2, 2];
        assert!((adjusted_rand_index(&a, &b).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn single_cluster_scores_zero() {
        let a = vec![1; 8];
        let b = vec![1, 2, 1, 2, 3, 3, 1, 2];
        assert_eq!(adjusted_rand_index(&a, &b).unwrap(), 0.0);
        assert_eq!(adjusted_rand_index(&b, &a).unwrap(), 0.0);
    }

    #[test]
    fn crossed_pairs_value() {
        // Contingency table of all ones: ARI = -1/2.
        let a = vec![1, 1, 2, 2];
        let b = vec![1, 2, 1, 2];
        assert!((adjusted_rand_index(&a, &b).unwrap() + 0.5).abs() < 1e-15);
    }

    #[test]
    fn degenerate_agreements_score_one() {
        let singletons: Vec<usize> = (0..5).collect();
        assert_eq!(adjusted_rand_index(&singletons, &singletons).unwrap(), 1.0);
        let ones = vec![1; 5];
        assert_eq!(adjusted_rand_index(&ones, &ones).unwrap(), 1.0);
    }

    #[test]
    fn symmetry() {
        let a = vec![1, 2, 2, 3, 1, 3, 2, 1];
        let b = vec![2, 2, 1, 1, 1, 2, 2, 1];
        let ab = adjusted_rand_index(&a, &b).unwrap();
        let ba = adjusted_rand_index(&b, &a).unwrap();
        assert_eq!(ab, ba);
    }

    #[test]
    fn regime_half_right() {
        let truth = vec![1.0, 1.0, -1.0, -1.0];
        let est = vec![0.3, 0.3, 0.3, 0.3];
        assert_eq!(regime_accuracy(&est, &truth), 0.5);
        assert_eq!(regime_accuracy(&truth, &truth), 1.0);
        let neg: Vec<f64> = truth.iter().map(|v| -v).collect();
        assert_eq!(regime_accuracy(&neg, &truth), 0.0);
    }

    #[test]
    fn zero_estimate_means_no_treatment() {
        assert_eq!(regime_accuracy(&[0.0], &[-2.0]), 1.0);
        assert_eq!(regime_accuracy(&[0.0], &[0.0]), 1.0);
        assert_eq!(regime_accuracy(&[0.0], &[2.0]), 0.0);
    }

    #[test]
    fn mae_shift() {
        let truth = vec![0.5, -0.25, 1.0];
        let est: Vec<f64> = truth.iter().map(|v| v + 0.2).collect();
        assert!((treatment_mae(&est, &truth) - 0.2).abs() < 1e-12);
        assert_eq!(treatment_mae(&truth, &truth), 0.0);
    }

    #[test]
    fn type1_counts_splits() {
        assert_eq!(type1_rate(&[1, 1, 1, 1]), 0.0);
        assert_eq!(type1_rate(&[2, 3, 2]), 1.0);
        let mut counts = vec![1usize; 95];
        counts.extend([2; 5]);
        assert!((type1_rate(&counts) - 0.05).abs() < 1e-12);
    }
}
