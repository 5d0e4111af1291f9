//! Maximum-likelihood GLM fitting with offsets, prior weights and
//! observation-wise score contributions.
//!
//! Gaussian models solve weighted least squares in closed form; binomial
//! and poisson models iterate reweighted least squares with the canonical
//! link. The score matrix drives the instability tests downstream.

use ndarray::{Array1, Array2};

use crate::data::{design_matrix, Dataset, RoleSpec};
use crate::error::{Error, Result};
use crate::family::Family;
use crate::linalg::{lstsq, lstsq_weighted, Lstsq};

const IRLS_MAX_ITER: usize = 25;
const IRLS_GRAD_TOL: f64 = 1e-8;
/// Floor for the ML variance estimate; keeps log-likelihoods of perfectly
/// interpolated nodes finite and comparable.
pub(crate) const DISPERSION_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct FitResult {
    pub family: Family,
    pub coefficients: Array1<f64>,
    pub column_names: Vec<String>,
    /// ML variance estimate RSS/n for gaussian; 1 otherwise.
    pub dispersion: f64,
    pub loglik: f64,
    /// n x K matrix of per-observation log-likelihood gradients at the MLE.
    pub scores: Array2<f64>,
    pub n_obs: usize,
    pub converged: bool,
    pub iterations: usize,
}

impl FitResult {
    pub fn n_coef(&self) -> usize {
        self.coefficients.len()
    }

    /// Linear predictor X beta + offset.
    pub fn linear_predictor(&self, x: &Array2<f64>, offset: Option<&Array1<f64>>) -> Result<Array1<f64>> {
        if x.ncols() != self.coefficients.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coefficients.len(),
                got: x.ncols(),
            });
        }
        let mut eta = x.dot(&self.coefficients);
        if let Some(o) = offset {
            if o.len() != eta.len() {
                return Err(Error::DimensionMismatch {
                    expected: eta.len(),
                    got: o.len(),
                });
            }
            eta += o;
        }
        Ok(eta)
    }
}

fn default_names(k: usize) -> Vec<String> {
    (0..k).map(|j| format!("x{j}")).collect()
}

fn named(names: Option<&[String]>, k: usize) -> Vec<String> {
    match names {
        Some(n) => {
            debug_assert_eq!(n.len(), k);
            n.to_vec()
        }
        None => default_names(k),
    }
}

fn dropped_names(sol: &Lstsq, names: &[String]) -> Vec<String> {
    sol.dropped.iter().map(|&j| names[j].clone()).collect()
}

/// Fits one GLM by maximum likelihood. The offset enters the linear
/// predictor with coefficient fixed to 1 and contributes no score column;
/// weights multiply each observation's log-likelihood contribution.
pub fn fit_glm(
    x: &Array2<f64>,
    y: &Array1<f64>,
    family: Family,
    offset: Option<&Array1<f64>>,
    weights: Option<&Array1<f64>>,
    names: Option<&[String]>,
) -> Result<FitResult> {
    let n = x.nrows();
    let k = x.ncols();
    if n <= k {
        return Err(Error::NotEnoughRows { n, k });
    }
    if y.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: y.len() });
    }
    if let Some(o) = offset {
        if o.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: o.len() });
        }
    }
    if let Some(w) = weights {
        if w.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: w.len() });
        }
    }
    let bad = family.check_response(y.as_slice().expect("contiguous"));
    if !bad.is_empty() {
        return Err(Error::ResponseDomain {
            column: "(response)".to_string(),
            family: family.name(),
            // 1-based, matching the CSV reader's row numbering.
            rows: bad.iter().map(|i| i + 1).collect(),
        });
    }
    let column_names = named(names, k);
    match family {
        Family::Gaussian => fit_gaussian(x, y, offset, weights, column_names),
        Family::Binomial | Family::Poisson => fit_irls(x, y, family, offset, weights, column_names),
    }
}

fn fit_gaussian(
    x: &Array2<f64>,
    y: &Array1<f64>,
    offset: Option<&Array1<f64>>,
    weights: Option<&Array1<f64>>,
    column_names: Vec<String>,
) -> Result<FitResult> {
    let n = x.nrows();
    let k = x.ncols();
    let y_adj = match offset {
        Some(o) => y - o,
        None => y.clone(),
    };
    let sol = match weights {
        Some(w) => lstsq_weighted(x, &y_adj, w),
        None => lstsq(x, &y_adj),
    };
    if sol.rank < k {
        return Err(Error::SingularDesign {
            columns: dropped_names(&sol, &column_names),
        });
    }
    let mut eta = x.dot(&sol.coef);
    if let Some(o) = offset {
        eta += o;
    }
    let w_at = |i: usize| weights.map_or(1.0, |w| w[i]);
    let rss: f64 = (0..n).map(|i| w_at(i) * (y[i] - eta[i]).powi(2)).sum();
    let dispersion = (rss / n as f64).max(DISPERSION_FLOOR);
    let mut scores = Array2::zeros((n, k));
    for i in 0..n {
        let s = w_at(i) * (y[i] - eta[i]) / dispersion;
        for j in 0..k {
            scores[[i, j]] = x[[i, j]] * s;
        }
    }
    let loglik = (0..n)
        .map(|i| w_at(i) * Family::Gaussian.log_density(y[i], eta[i], dispersion))
        .sum();
    Ok(FitResult {
        family: Family::Gaussian,
        coefficients: sol.coef,
        column_names,
        dispersion,
        loglik,
        scores,
        n_obs: n,
        converged: true,
        iterations: 1,
    })
}

fn fit_irls(
    x: &Array2<f64>,
    y: &Array1<f64>,
    family: Family,
    offset: Option<&Array1<f64>>,
    weights: Option<&Array1<f64>>,
    column_names: Vec<String>,
) -> Result<FitResult> {
    let n = x.nrows();
    let k = x.ncols();
    let w_at = |i: usize| weights.map_or(1.0, |w: &Array1<f64>| w[i]);
    let off_at = |i: usize| offset.map_or(0.0, |o: &Array1<f64>| o[i]);

    let mut mu: Array1<f64> = y.mapv(|v| family.initial_mean(v));
    let mut eta: Array1<f64> = mu.mapv(|m| family.link(m));
    let mut beta: Array1<f64> = Array1::zeros(k);
    let mut converged = false;
    let mut iterations = 0;

    for iter in 1..=IRLS_MAX_ITER {
        iterations = iter;
        let mut z = Array1::zeros(n);
        let mut w = Array1::zeros(n);
        for i in 0..n {
            let v = family.variance(mu[i]);
            z[i] = eta[i] + (y[i] - mu[i]) / v - off_at(i);
            w[i] = w_at(i) * v;
        }
        let sol = lstsq_weighted(x, &z, &w);
        if iter == 1 && sol.rank < k {
            return Err(Error::SingularDesign {
                columns: dropped_names(&sol, &column_names),
            });
        }
        beta = sol.coef;
        if beta.iter().any(|b| !b.is_finite()) {
            return Err(Error::FitFailed(format!(
                "{family} coefficients diverged to non-finite values"
            )));
        }
        eta = x.dot(&beta);
        for i in 0..n {
            eta[i] += off_at(i);
            mu[i] = family.inv_link(eta[i]);
        }
        let mut grad_sq = 0.0;
        for j in 0..k {
            let g: f64 = (0..n).map(|i| x[[i, j]] * w_at(i) * (y[i] - mu[i])).sum();
            grad_sq += g * g;
        }
        if grad_sq.sqrt() < IRLS_GRAD_TOL {
            converged = true;
            break;
        }
    }

    let mut scores = Array2::zeros((n, k));
    for i in 0..n {
        let s = w_at(i) * (y[i] - mu[i]);
        for j in 0..k {
            scores[[i, j]] = x[[i, j]] * s;
        }
    }
    let loglik = (0..n).map(|i| w_at(i) * family.log_density(y[i], mu[i], 1.0)).sum();
    Ok(FitResult {
        family,
        coefficients: beta,
        column_names,
        dispersion: 1.0,
        loglik,
        scores,
        n_obs: n,
        converged,
        iterations,
    })
}

/// Predicted means g^{-1}(X beta + offset).
pub fn predict(fit: &FitResult, x: &Array2<f64>, offset: Option<&Array1<f64>>) -> Result<Array1<f64>> {
    let eta = fit.linear_predictor(x, offset)?;
    Ok(eta.mapv(|e| fit.family.inv_link(e)))
}

/// Joint model over a fixed partition: one coefficient block of the varying
/// regressors per subgroup plus a single global block for the fixed
/// regressors. Labels run over 1..=B and each label must be populated with
/// more observations than there are varying columns.
pub fn fit_interaction_glm(ds: &Dataset, partition: &[usize], spec: &RoleSpec) -> Result<FitResult> {
    let n = ds.n_rows();
    if partition.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: partition.len() });
    }
    let b_max = *partition.iter().max().unwrap_or(&0);
    if b_max == 0 {
        return Err(Error::DegeneratePartition { label: 0 });
    }
    let mut counts = vec![0usize; b_max + 1];
    for &b in partition {
        if b == 0 || b > b_max {
            return Err(Error::DegeneratePartition { label: b });
        }
        counts[b] += 1;
    }
    let xv = design_matrix(ds, &spec.varying, spec.intercept)?;
    let xf = design_matrix(ds, &spec.fixed, false)?;
    let kv = xv.n_cols();
    let kf = xf.n_cols();
    for (b, &c) in counts.iter().enumerate().skip(1) {
        if c == 0 {
            return Err(Error::DegeneratePartition { label: b });
        }
        if c <= kv {
            return Err(Error::NotEnoughRows { n: c, k: kv });
        }
    }

    let k = b_max * kv + kf;
    let mut x = Array2::zeros((n, k));
    let mut names = Vec::with_capacity(k);
    for b in 1..=b_max {
        for name in &xv.names {
            names.push(format!("g{b}:{name}"));
        }
    }
    names.extend(xf.names.iter().cloned());
    for i in 0..n {
        let block = (partition[i] - 1) * kv;
        for j in 0..kv {
            x[[i, block + j]] = xv.matrix[[i, j]];
        }
        for j in 0..kf {
            x[[i, b_max * kv + j]] = xf.matrix[[i, j]];
        }
    }
    let y = Array1::from_vec(ds.numeric_column(&spec.response)?.to_vec());
    fit_glm(&x, &y, spec.family, None, None, Some(&names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    #[test]
    fn intercept_only_gaussian() {
        let x = Array2::ones((5, 1));
        let y = array![1.0, 2.0, 3.0, 4.0, 5.0];
        let fit = fit_glm(&x, &y, Family::Gaussian, None, None, None).unwrap();
        assert!((fit.coefficients[0] - 3.0).abs() < 1e-12);
        assert!((fit.dispersion - 2.0).abs() < 1e-12);
        let expect: f64 = y
            .iter()
            .map(|&v| Family::Gaussian.log_density(v, 3.0, 2.0))
            .sum();
        assert!((fit.loglik - expect).abs() < 1e-10);
    }

    #[test]
    fn gaussian_offset_equivalence() {
        let x = array![[1.0, 0.5], [1.0, -1.0], [1.0, 2.0], [1.0, 0.1], [1.0, -0.7]];
        let y = array![1.0, 0.2, 3.1, 0.9, -0.5];
        let o = array![0.3, -0.2, 0.0, 1.0, 0.5];
        let with_offset = fit_glm(&x, &y, Family::Gaussian, Some(&o), None, None).unwrap();
        let shifted = fit_glm(&x, &(&y - &o), Family::Gaussian, None, None, None).unwrap();
        for j in 0..2 {
            assert!((with_offset.coefficients[j] - shifted.coefficients[j]).abs() < 1e-10);
        }
    }

    #[test]
    fn score_columns_sum_to_zero() {
        let x = array![
            [1.0, 0.2],
            [1.0, 1.4],
            [1.0, -0.3],
            [1.0, 0.9],
            [1.0, 2.2],
            [1.0, -1.5],
            [1.0, 0.6],
            [1.0, 1.1]
        ];
        let y = array![0.0, 1.0, 0.0, 1.0, 1.0, 0.0, 0.0, 1.0];
        let fit = fit_glm(&x, &y, Family::Binomial, None, None, None).unwrap();
        assert!(fit.converged);
        for j in 0..2 {
            let s: f64 = fit.scores.column(j).sum();
            assert!(s.abs() < 1e-6 * 8.0, "column {j} sums to {s}");
        }
    }

    #[test]
    fn logistic_intercept_half() {
        let x = Array2::ones((4, 1));
        let y = array![0.0, 1.0, 0.0, 1.0];
        let fit = fit_glm(&x, &y, Family::Binomial, None, None, None).unwrap();
        let mu = predict(&fit, &Array2::ones((1, 1)), None).unwrap();
        assert!((mu[0] - 0.5).abs() < 1e-10);
    }

    #[test]
    fn singular_design_names_columns() {
        let x = array![[1.0, 2.0], [1.0, 2.0], [1.0, 2.0], [1.0, 2.0]];
        let y = array![1.0, 2.0, 3.0, 4.0];
        let names = vec!["a".to_string(), "b".to_string()];
        match fit_glm(&x, &y, Family::Gaussian, None, None, Some(&names)) {
            Err(Error::SingularDesign { columns }) => {
                assert_eq!(columns.len(), 1);
                assert!(columns[0] == "a" || columns[0] == "b");
            }
            other => panic!("expected singular design, got {other:?}"),
        }
    }

    #[test]
    fn predict_with_offset() {
        let fit = FitResult {
            family: Family::Gaussian,
            coefficients: array![1.0, 2.0],
            column_names: vec!["a".into(), "b".into()],
            dispersion: 1.0,
            loglik: 0.0,
            scores: Array2::zeros((1, 2)),
            n_obs: 1,
            converged: true,
            iterations: 1,
        };
        let mu = predict(&fit, &array![[1.0, 3.0]], None).unwrap();
        assert!((mu[0] - 7.0).abs() < 1e-12);
        let mu2 = predict(&fit, &array![[1.0, 0.5]], Some(&array![5.0])).unwrap();
        assert!((mu2[0] - 7.0).abs() < 1e-12);
    }
}
