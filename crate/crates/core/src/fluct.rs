//! Parameter-instability tests on fitted score contributions.
//!
//! Under a stable model the cumulative sum of (whitened) scores, ordered by
//! any candidate split variable, fluctuates like a Brownian bridge. Ordered
//! variables use the supLM functional of that process; categorical variables
//! aggregate scores per level into a chi-squared statistic. The variable
//! with the smallest p-value is selected if it survives a Bonferroni
//! correction at the global level.

mod suplm_table;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use ndarray::{Array1, Array2};
use rand::distributions::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::data::{ColumnData, Dataset};
use crate::glm::FitResult;
use crate::linalg::{sym_eigen, RANK_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestKind {
    OrderedSupLm,
    CategoricalChisq,
}

impl std::fmt::Display for TestKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TestKind::OrderedSupLm => "ordered-supLM",
            TestKind::CategoricalChisq => "categorical-chisq",
        })
    }
}

#[derive(Debug, Clone)]
pub struct InstabilityResult {
    pub variable: String,
    pub statistic: f64,
    pub p_value: f64,
    /// min(1, J * p_value) over the J testable variables of the node.
    pub p_adjusted: f64,
    pub kind: TestKind,
    pub testable: bool,
}

/// Outcome of a single test before multiplicity adjustment.
#[derive(Debug, Clone, Copy)]
pub struct TestOutcome {
    pub statistic: f64,
    pub p_value: f64,
    pub testable: bool,
}

const UNTESTABLE: TestOutcome = TestOutcome {
    statistic: 0.0,
    p_value: 1.0,
    testable: false,
};

/// Centers the score columns and whitens them by the inverse square root
/// of the empirical covariance (1/n) S^T S. Degenerate directions
/// (eigenvalues below `RANK_TOL` of the largest) are dropped, so the
/// output has K' <= K columns and identity empirical covariance.
pub fn decorrelate_scores(scores: &Array2<f64>) -> (Array2<f64>, usize) {
    let n = scores.nrows();
    let k = scores.ncols();
    if n == 0 || k == 0 {
        return (Array2::zeros((n, 0)), 0);
    }
    let mut centered = scores.clone();
    for j in 0..k {
        let mean = centered.column(j).sum() / n as f64;
        for i in 0..n {
            centered[[i, j]] -= mean;
        }
    }
    let mut cov = Array2::zeros((k, k));
    for a in 0..k {
        for b in a..k {
            let s: f64 = (0..n).map(|i| centered[[i, a]] * centered[[i, b]]).sum();
            cov[[a, b]] = s / n as f64;
            cov[[b, a]] = cov[[a, b]];
        }
    }
    let (values, vectors) = sym_eigen(&cov);
    let largest = values[0].max(0.0);
    let kept: Vec<usize> = (0..k)
        .filter(|&j| values[j] > RANK_TOL * largest && values[j] > 0.0)
        .collect();
    let k_eff = kept.len();
    let mut white = Array2::zeros((n, k_eff));
    for (slot, &j) in kept.iter().enumerate() {
        let inv_sd = 1.0 / values[j].sqrt();
        for i in 0..n {
            let mut proj = 0.0;
            for a in 0..k {
                proj += centered[[i, a]] * vectors[[a, j]];
            }
            white[[i, slot]] = proj * inv_sd;
        }
    }
    (white, k_eff)
}

/// supLM test of the whitened scores ordered by a numeric variable.
/// Candidate boundaries sit between distinct z values inside the trimmed
/// window; with fewer than two distinct values there the variable is
/// untestable.
pub fn suplm_ordered(white: &Array2<f64>, z: &[f64], trim: f64) -> TestOutcome {
    let n = white.nrows();
    let k = white.ncols();
    assert_eq!(n, z.len(), "score/variable length mismatch");
    if n < 2 || k == 0 {
        return UNTESTABLE;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| z[a].partial_cmp(&z[b]).unwrap().then(a.cmp(&b)));

    let i_lo = ((n as f64 * trim).ceil() as usize).max(1);
    let i_hi = ((n as f64 * (1.0 - trim)).floor() as usize).min(n - 1);
    if i_lo > i_hi {
        return UNTESTABLE;
    }

    let inv_sqrt_n = 1.0 / (n as f64).sqrt();
    let mut cum: Array1<f64> = Array1::zeros(k);
    let mut best = f64::NEG_INFINITY;
    let mut any_boundary = false;
    for (pos, &row) in order.iter().enumerate() {
        for j in 0..k {
            cum[j] += white[[row, j]];
        }
        let i = pos + 1;
        if i < i_lo || i > i_hi {
            continue;
        }
        // Only test between distinct z values; ties are never separated.
        if z[order[pos]] == z[order[pos + 1]] {
            continue;
        }
        any_boundary = true;
        let t = i as f64 / n as f64;
        let norm_sq: f64 = cum.iter().map(|&c| c * inv_sqrt_n * c * inv_sqrt_n).sum();
        let stat = norm_sq / (t * (1.0 - t));
        if stat > best {
            best = stat;
        }
    }
    if !any_boundary {
        return UNTESTABLE;
    }
    TestOutcome {
        statistic: best,
        p_value: suplm_pvalue(best, k, trim),
        testable: true,
    }
}

/// Chi-squared test of per-level score aggregates for a categorical
/// variable: sum over levels of n/n_c times the squared normalized level
/// sum, with (C-1) K' degrees of freedom over the C nonempty levels.
pub fn chisq_categorical(white: &Array2<f64>, z_indices: &[usize], n_levels: usize) -> TestOutcome {
    let n = white.nrows();
    let k = white.ncols();
    assert_eq!(n, z_indices.len(), "score/variable length mismatch");
    if k == 0 {
        return UNTESTABLE;
    }
    let mut counts = vec![0usize; n_levels];
    for &ix in z_indices {
        counts[ix] += 1;
    }
    let observed: Vec<usize> = (0..n_levels).filter(|&c| counts[c] > 0).collect();
    if observed.len() < 2 {
        return UNTESTABLE;
    }
    let mut level_sums = vec![vec![0.0_f64; k]; n_levels];
    for (i, &ix) in z_indices.iter().enumerate() {
        for j in 0..k {
            level_sums[ix][j] += white[[i, j]];
        }
    }
    let mut stat = 0.0;
    for &c in &observed {
        let norm_sq: f64 = level_sums[c].iter().map(|&s| s * s).sum::<f64>() / n as f64;
        stat += norm_sq / (counts[c] as f64 / n as f64);
    }
    let dof = (observed.len() - 1) * k;
    let dist = ChiSquared::new(dof as f64).expect("positive dof");
    let p = (1.0 - dist.cdf(stat)).clamp(0.0, 1.0);
    TestOutcome {
        statistic: stat,
        p_value: p,
        testable: true,
    }
}

/// Tests every candidate variable against the fitted node scores and picks
/// the one with the smallest unadjusted p-value, provided its Bonferroni
/// adjustment over the J testable variables stays below `alpha`.
pub fn select_split_variable(
    fit: &FitResult,
    ds: &Dataset,
    split_vars: &[String],
    alpha: f64,
    trim: f64,
) -> crate::Result<(Option<String>, Vec<InstabilityResult>)> {
    let (white, k_eff) = decorrelate_scores(&fit.scores);
    let mut results = Vec::with_capacity(split_vars.len());
    for name in split_vars {
        let col = ds.column(name)?;
        let (outcome, kind) = if k_eff == 0 {
            let kind = match col.data {
                ColumnData::Numeric(_) => TestKind::OrderedSupLm,
                ColumnData::Categorical { .. } => TestKind::CategoricalChisq,
            };
            (UNTESTABLE, kind)
        } else {
            match &col.data {
                ColumnData::Numeric(v) => (suplm_ordered(&white, v, trim), TestKind::OrderedSupLm),
                ColumnData::Categorical { indices, levels } => (
                    chisq_categorical(&white, indices, levels.len()),
                    TestKind::CategoricalChisq,
                ),
            }
        };
        results.push(InstabilityResult {
            variable: name.clone(),
            statistic: outcome.statistic,
            p_value: outcome.p_value,
            p_adjusted: 1.0,
            kind,
            testable: outcome.testable,
        });
    }
    let j = results.iter().filter(|r| r.testable).count();
    for r in &mut results {
        r.p_adjusted = if r.testable {
            (j as f64 * r.p_value).min(1.0)
        } else {
            1.0
        };
    }
    let winner = results
        .iter()
        .filter(|r| r.testable)
        .min_by(|a, b| a.p_value.partial_cmp(&b.p_value).unwrap())
        .filter(|r| r.p_adjusted < alpha)
        .map(|r| r.variable.clone());
    Ok((winner, results))
}

/// Upper-tail probability of the supLM limiting distribution for a
/// k-dimensional process with symmetric trimming. Values come from the
/// embedded simulation table, log-linearly interpolated in the statistic
/// and linearly in the trim; dimensions beyond the table fall back to a
/// seeded on-the-fly simulation.
pub fn suplm_pvalue(statistic: f64, k: usize, trim: f64) -> f64 {
    if statistic <= 0.0 {
        return 1.0;
    }
    if k == 0 {
        return 1.0;
    }
    if k > suplm_table::MAX_K {
        return simulated_pvalue(statistic, k, trim);
    }
    let trims = &suplm_table::TRIMS;
    let t = trim.clamp(trims[0], trims[trims.len() - 1]);
    let hi = trims.iter().position(|&g| g >= t).unwrap_or(trims.len() - 1);
    let curves = &suplm_table::QUANTILES[k - 1];
    if hi == 0 || (trims[hi] - t).abs() < 1e-12 {
        return curve_pvalue(statistic, &curves[hi]);
    }
    let lo = hi - 1;
    let w = (t - trims[lo]) / (trims[hi] - trims[lo]);
    let p_lo = curve_pvalue(statistic, &curves[lo]);
    let p_hi = curve_pvalue(statistic, &curves[hi]);
    ((1.0 - w) * p_lo + w * p_hi).clamp(0.0, 1.0)
}

fn curve_pvalue(stat: f64, quantiles: &[f64; suplm_table::N_PROBS]) -> f64 {
    let probs = &suplm_table::TAIL_PROBS;
    let last = quantiles.len() - 1;
    if stat <= quantiles[0] {
        // Linear between (0, 1) and the first tabulated quantile.
        return 1.0 - (1.0 - probs[0]) * stat / quantiles[0];
    }
    if stat >= quantiles[last] {
        // Log-linear tail extension from the last two quantiles.
        let slope = (probs[last].ln() - probs[last - 1].ln()) / (quantiles[last] - quantiles[last - 1]);
        return (probs[last].ln() + slope * (stat - quantiles[last])).exp().max(1e-16);
    }
    let mut lo = 0;
    let mut hi = last;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if quantiles[mid] <= stat {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (q0, q1) = (quantiles[lo], quantiles[hi]);
    if q1 <= q0 {
        return probs[hi];
    }
    let w = (stat - q0) / (q1 - q0);
    (probs[lo].ln() + w * (probs[hi].ln() - probs[lo].ln())).exp()
}

/// Seeded simulation fallback for dimensions beyond the table. Results are
/// cached per (k, trim) so repeated tests stay cheap and deterministic.
fn simulated_pvalue(statistic: f64, k: usize, trim: f64) -> f64 {
    const PATHS: usize = 20_000;
    const GRID: usize = 1000;
    static CACHE: OnceLock<Mutex<HashMap<(usize, u64), Vec<f64>>>> = OnceLock::new();
    let trim_key = (trim.clamp(0.0, 0.5) * 1e6).round() as u64;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("suplm cache poisoned");
    let sims = guard.entry((k, trim_key)).or_insert_with(|| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x51D3_0000 ^ (k as u64));
        let normal = rand_distr::StandardNormal;
        let lo = ((trim * GRID as f64).ceil() as usize).max(1);
        let hi = ((1.0 - trim) * GRID as f64).floor() as usize;
        let hi = hi.min(GRID - 1);
        let sqrt_n = (GRID as f64).sqrt();
        let mut stats = Vec::with_capacity(PATHS);
        let mut acc = vec![0.0_f64; GRID];
        let mut bridge = vec![0.0_f64; GRID];
        for _ in 0..PATHS {
            for v in acc.iter_mut() {
                *v = 0.0;
            }
            for _ in 0..k {
                let mut w = 0.0;
                for b in bridge.iter_mut() {
                    let e: f64 = normal.sample(&mut rng);
                    w += e / sqrt_n;
                    *b = w;
                }
                let w1 = bridge[GRID - 1];
                for (i, b) in bridge.iter_mut().enumerate() {
                    let t = (i + 1) as f64 / GRID as f64;
                    *b -= t * w1;
                    acc[i] += *b * *b;
                }
            }
            let mut best = 0.0_f64;
            for i in lo..=hi {
                let t = i as f64 / GRID as f64;
                let q = acc[i - 1] / (t * (1.0 - t));
                if q > best {
                    best = q;
                }
            }
            stats.push(best);
        }
        stats.sort_by(|a, b| a.partial_cmp(b).unwrap());
        stats
    });
    let above = sims.len() - sims.partition_point(|&s| s < statistic);
    (above + 1) as f64 / (sims.len() + 1) as f64
}
