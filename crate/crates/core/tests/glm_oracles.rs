//! Cross-checks the GLM fitter against independent implementations:
//! normal-equation solves for gaussian coefficients and finite differences
//! for the analytic score contributions.

use ndarray::{Array1, Array2};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use palmgrove_core::family::Family;
use palmgrove_core::glm::{fit_glm, fit_interaction_glm};
use palmgrove_core::{Column, Dataset, RoleSpec};

/// Gauss-Jordan solve with partial pivoting, deliberately sharing no code
/// with the crate's QR path.
fn gauss_jordan(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let k = b.len();
    for col in 0..k {
        let pivot = (col..k).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        let d = a[col][col];
        for j in 0..k {
            a[col][j] /= d;
        }
        b[col] /= d;
        for i in 0..k {
            if i != col {
                let f = a[i][col];
                for j in 0..k {
                    a[i][j] -= f * a[col][j];
                }
                b[i] -= f * b[col];
            }
        }
    }
    Some(b)
}

/// Ordinary least squares via the normal equations.
fn ols_oracle(x: &Array2<f64>, y: &Array1<f64>) -> Option<Vec<f64>> {
    let (n, k) = (x.nrows(), x.ncols());
    let mut xtx = vec![vec![0.0; k]; k];
    let mut xty = vec![0.0; k];
    for i in 0..n {
        for a in 0..k {
            xty[a] += x[[i, a]] * y[i];
            for b in 0..k {
                xtx[a][b] += x[[i, a]] * x[[i, b]];
            }
        }
    }
    gauss_jordan(xtx, xty)
}

fn random_design(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Array2<f64> {
    let mut x = Array2::zeros((n, k));
    for i in 0..n {
        x[[i, 0]] = 1.0;
        for j in 1..k {
            x[[i, j]] = rng.sample::<f64, _>(StandardNormal);
        }
    }
    x
}

#[test]
fn gaussian_fit_matches_normal_equations_on_100_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    for instance in 0..100 {
        let n = rng.gen_range(30..120);
        let k = rng.gen_range(1..6);
        let x = random_design(&mut rng, n, k);
        let beta: Vec<f64> = (0..k).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let y = Array1::from_iter((0..n).map(|i| {
            let mean: f64 = (0..k).map(|j| x[[i, j]] * beta[j]).sum();
            mean + rng.sample::<f64, _>(StandardNormal)
        }));

        let fit = fit_glm(&x, &y, Family::Gaussian, None, None, None).unwrap();
        let oracle = ols_oracle(&x, &y).expect("oracle solve");
        for j in 0..k {
            assert!(
                (fit.coefficients[j] - oracle[j]).abs() < 1e-8,
                "instance {instance}, coefficient {j}: {} vs oracle {}",
                fit.coefficients[j],
                oracle[j]
            );
        }

        // Dispersion and log-likelihood from first principles.
        let rss: f64 = (0..n)
            .map(|i| {
                let mu: f64 = (0..k).map(|j| x[[i, j]] * oracle[j]).sum();
                (y[i] - mu).powi(2)
            })
            .sum();
        let sigma2 = rss / n as f64;
        assert!((fit.dispersion - sigma2).abs() < 1e-8 * (1.0 + sigma2));
        let ll = -0.5 * n as f64 * (2.0 * std::f64::consts::PI * sigma2).ln() - rss / (2.0 * sigma2);
        assert!(
            (fit.loglik - ll).abs() < 1e-6 * (1.0 + ll.abs()),
            "instance {instance}: loglik {} vs oracle {ll}",
            fit.loglik
        );
    }
}

#[test]
fn weighted_gaussian_fit_matches_weighted_normal_equations() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let n = rng.gen_range(40..100);
        let k = rng.gen_range(1..5);
        let x = random_design(&mut rng, n, k);
        let y = Array1::from_iter((0..n).map(|_| rng.sample::<f64, _>(StandardNormal)));
        let w = Array1::from_iter((0..n).map(|_| rng.gen_range(0.1..3.0)));

        // Weighted normal equations: X' W X b = X' W y.
        let mut xtx = vec![vec![0.0; k]; k];
        let mut xty = vec![0.0; k];
        for i in 0..n {
            for a in 0..k {
                xty[a] += w[i] * x[[i, a]] * y[i];
                for b in 0..k {
                    xtx[a][b] += w[i] * x[[i, a]] * x[[i, b]];
                }
            }
        }
        let oracle = gauss_jordan(xtx, xty).unwrap();

        let fit = fit_glm(&x, &y, Family::Gaussian, None, Some(&w), None).unwrap();
        for j in 0..k {
            assert!((fit.coefficients[j] - oracle[j]).abs() < 1e-8);
        }
    }
}

fn make_response(rng: &mut ChaCha8Rng, family: Family, eta: f64) -> f64 {
    match family {
        Family::Gaussian => eta + rng.sample::<f64, _>(StandardNormal),
        Family::Binomial => {
            let p = 1.0 / (1.0 + (-eta).exp());
            if rng.gen::<f64>() < p {
                1.0
            } else {
                0.0
            }
        }
        Family::Poisson => {
            // Inverse-CDF draw; rates here are small.
            let lambda = eta.exp().min(50.0);
            let u: f64 = rng.gen();
            let mut cum = (-lambda).exp();
            let mut k = 0.0;
            let mut pk = cum;
            while cum < u && k < 1000.0 {
                k += 1.0;
                pk *= lambda / k;
                cum += pk;
            }
            k
        }
    }
}

#[test]
fn scores_match_finite_differences_for_all_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for family in [Family::Gaussian, Family::Binomial, Family::Poisson] {
        for use_offset in [false, true] {
            let n = 80;
            let k = 3;
            let x = random_design(&mut rng, n, k);
            let offset = use_offset
                .then(|| Array1::from_iter((0..n).map(|_| rng.gen_range(-0.4..0.4))));
            let y = Array1::from_iter((0..n).map(|i| {
                let eta = 0.3 + 0.5 * x[[i, 1]] - 0.4 * x[[i, 2]]
                    + offset.as_ref().map_or(0.0, |o| o[i]);
                make_response(&mut rng, family, eta)
            }));
            let fit = fit_glm(&x, &y, family, offset.as_ref(), None, None).unwrap();
            assert!(fit.converged, "{family:?} did not converge");

            // Central differences of each observation's log-density in each
            // coefficient, holding the dispersion fixed at its estimate.
            for i in (0..n).step_by(7) {
                for j in 0..k {
                    let eps = 1e-5 * (1.0 + fit.coefficients[j].abs());
                    let eta_at = |shift: f64| -> f64 {
                        let mut eta: f64 = (0..k)
                            .map(|c| x[[i, c]] * fit.coefficients[c])
                            .sum();
                        eta += shift * x[[i, j]];
                        eta + offset.as_ref().map_or(0.0, |o| o[i])
                    };
                    let up = family.log_density(y[i], family.inv_link(eta_at(eps)), fit.dispersion);
                    let dn = family.log_density(y[i], family.inv_link(eta_at(-eps)), fit.dispersion);
                    let fd = (up - dn) / (2.0 * eps);
                    let analytic = fit.scores[[i, j]];
                    let scale = 1e-4 * (1.0 + analytic.abs().max(fd.abs()));
                    assert!(
                        (analytic - fd).abs() < scale,
                        "{family:?} offset={use_offset} obs {i} coef {j}: {analytic} vs fd {fd}"
                    );
                }
            }

            // At the MLE the summed scores vanish.
            for j in 0..k {
                let total: f64 = (0..n).map(|i| fit.scores[[i, j]]).sum();
                assert!(
                    total.abs() < 1e-5 * n as f64,
                    "{family:?} score column {j} sums to {total}"
                );
            }
        }
    }
}

#[test]
fn column_rescaling_inverts_coefficient_and_keeps_loglik() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for family in [Family::Gaussian, Family::Binomial, Family::Poisson] {
        let n = 120;
        let x = random_design(&mut rng, n, 3);
        let y = Array1::from_iter((0..n).map(|i| {
            let eta = 0.2 + 0.6 * x[[i, 1]] - 0.3 * x[[i, 2]];
            make_response(&mut rng, family, eta)
        }));
        let fit = fit_glm(&x, &y, family, None, None, None).unwrap();

        let c = 4.0;
        let mut xs = x.clone();
        for i in 0..n {
            xs[[i, 1]] *= c;
        }
        let fit_s = fit_glm(&xs, &y, family, None, None, None).unwrap();
        assert!((fit_s.coefficients[1] - fit.coefficients[1] / c).abs() < 1e-6);
        assert!((fit_s.coefficients[0] - fit.coefficients[0]).abs() < 1e-6);
        assert!((fit_s.loglik - fit.loglik).abs() < 1e-6 * (1.0 + fit.loglik.abs()));
    }
}

#[test]
fn block_fit_without_globals_equals_per_block_least_squares() {
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let n = 180;
    let xa: Vec<f64> = (0..n).map(|_| if rng.gen::<bool>() { 1.0 } else { 0.0 }).collect();
    let labels: Vec<usize> = (0..n).map(|i| 1 + (i % 3)).collect();
    let y: Vec<f64> = (0..n)
        .map(|i| {
            let b = labels[i] as f64;
            b + b * xa[i] + 0.3 * rng.sample::<f64, _>(StandardNormal)
        })
        .collect();
    let ds = Dataset::new(vec![
        Column::numeric("y", y.clone()),
        Column::numeric("xa", xa.clone()),
    ])
    .unwrap();
    let spec = RoleSpec::new("y", vec!["xa".into()], vec![], vec![], Family::Gaussian);
    let joint = fit_interaction_glm(&ds, &labels, &spec).unwrap();

    // With no global columns the joint problem separates by block, so each
    // block's coefficients must equal its own least-squares solve.
    for block in 1..=3usize {
        let rows: Vec<usize> = (0..n).filter(|&i| labels[i] == block).collect();
        let mut x_b = Array2::zeros((rows.len(), 2));
        let mut y_b = Array1::zeros(rows.len());
        for (r, &i) in rows.iter().enumerate() {
            x_b[[r, 0]] = 1.0;
            x_b[[r, 1]] = xa[i];
            y_b[r] = y[i];
        }
        let oracle = ols_oracle(&x_b, &y_b).unwrap();
        let icpt = joint
            .column_names
            .iter()
            .position(|c| c == &format!("g{block}:(intercept)"))
            .unwrap();
        let slope = joint
            .column_names
            .iter()
            .position(|c| c == &format!("g{block}:xa"))
            .unwrap();
        assert!((joint.coefficients[icpt] - oracle[0]).abs() < 1e-8);
        assert!((joint.coefficients[slope] - oracle[1]).abs() < 1e-8);
    }
}

#[test]
fn block_fit_nests_pooled_fit() {
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    let n = 200;
    let xa: Vec<f64> = (0..n).map(|_| if rng.gen::<bool>() { 1.0 } else { 0.0 }).collect();
    let zf: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
    let y: Vec<f64> = (0..n)
        .map(|i| 0.5 + 0.8 * xa[i] + zf[i] + 0.5 * rng.sample::<f64, _>(StandardNormal))
        .collect();
    let ds = Dataset::new(vec![
        Column::numeric("y", y),
        Column::numeric("xa", xa),
        Column::numeric("zf", zf),
    ])
    .unwrap();
    let spec = RoleSpec::new(
        "y",
        vec!["xa".into()],
        vec!["zf".into()],
        vec![],
        Family::Gaussian,
    );
    let pooled = fit_interaction_glm(&ds, &vec![1usize; n], &spec).unwrap();
    let labels: Vec<usize> = (0..n).map(|i| 1 + (i % 2)).collect();
    let split = fit_interaction_glm(&ds, &labels, &spec).unwrap();
    // The two-block model contains the pooled one, so its maximized
    // log-likelihood cannot be lower.
    assert!(split.loglik >= pooled.loglik - 1e-8);
}
