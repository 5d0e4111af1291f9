//! Dense linear algebra kernels: rank-revealing least squares via
//! column-pivoted Householder QR, and symmetric eigendecomposition via
//! cyclic Jacobi rotations. Problem sizes here are small (K at most a few
//! dozen columns), so simplicity and determinism win over blocking.

use ndarray::{Array1, Array2};

/// Relative rank tolerance against the largest R diagonal.
pub const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone)]
pub struct Lstsq {
    /// Basic least-squares solution; entries for dropped columns are 0.
    pub coef: Array1<f64>,
    pub rank: usize,
    /// Original indices of columns judged collinear with earlier pivots.
    pub dropped: Vec<usize>,
}

/// Minimum-residual solution of X b = y with column pivoting. Columns whose
/// pivoted diagonal falls below `RANK_TOL` times the largest diagonal are
/// excluded from the solve and reported in `dropped`.
pub fn lstsq(x: &Array2<f64>, y: &Array1<f64>) -> Lstsq {
    let n = x.nrows();
    let k = x.ncols();
    assert_eq!(n, y.len(), "row count mismatch");
    let mut a = x.clone();
    let mut rhs = y.clone();
    let mut perm: Vec<usize> = (0..k).collect();
    let steps = k.min(n);
    let mut diag = vec![0.0_f64; steps];

    for step in 0..steps {
        // Pivot on the largest remaining column norm, computed fresh to
        // dodge downdating cancellation.
        let mut best = step;
        let mut best_norm = -1.0;
        for j in step..k {
            let norm: f64 = (step..n).map(|i| a[[i, j]] * a[[i, j]]).sum();
            if norm > best_norm {
                best_norm = norm;
                best = j;
            }
        }
        if best != step {
            for i in 0..n {
                let tmp = a[[i, step]];
                a[[i, step]] = a[[i, best]];
                a[[i, best]] = tmp;
            }
            perm.swap(step, best);
        }
        let col_norm = best_norm.max(0.0).sqrt();
        if col_norm == 0.0 {
            diag[step] = 0.0;
            continue;
        }
        // Householder reflector for column `step` below the diagonal.
        let x0 = a[[step, step]];
        let alpha = if x0 >= 0.0 { -col_norm } else { col_norm };
        let mut v = Array1::zeros(n - step);
        for i in step..n {
            v[i - step] = a[[i, step]];
        }
        v[0] -= alpha;
        let vtv: f64 = v.iter().map(|&e| e * e).sum();
        if vtv > 0.0 {
            let scale = 2.0 / vtv;
            for j in step..k {
                let dot: f64 = (step..n).map(|i| v[i - step] * a[[i, j]]).sum();
                let f = scale * dot;
                for i in step..n {
                    a[[i, j]] -= f * v[i - step];
                }
            }
            let dot: f64 = (step..n).map(|i| v[i - step] * rhs[i]).sum();
            let f = scale * dot;
            for i in step..n {
                rhs[i] -= f * v[i - step];
            }
        }
        a[[step, step]] = alpha;
        diag[step] = alpha;
    }

    let largest = diag.first().map_or(0.0, |d| d.abs());
    let mut rank = 0;
    for d in &diag {
        if d.abs() > RANK_TOL * largest {
            rank += 1;
        } else {
            break;
        }
    }

    // Back substitution on the leading rank x rank triangle.
    let mut z = vec![0.0_f64; rank];
    for i in (0..rank).rev() {
        let mut s = rhs[i];
        for j in i + 1..rank {
            s -= a[[i, j]] * z[j];
        }
        z[i] = s / a[[i, i]];
    }
    let mut coef = Array1::zeros(k);
    for (j, &zj) in z.iter().enumerate() {
        coef[perm[j]] = zj;
    }
    let mut dropped: Vec<usize> = perm[rank..].to_vec();
    dropped.sort_unstable();
    Lstsq { coef, rank, dropped }
}

/// Row-weighted least squares: scales each row of X and y by sqrt(w_i).
pub fn lstsq_weighted(x: &Array2<f64>, y: &Array1<f64>, w: &Array1<f64>) -> Lstsq {
    let n = x.nrows();
    assert_eq!(n, w.len(), "weight length mismatch");
    let mut xs = x.clone();
    let mut ys = y.clone();
    for i in 0..n {
        let s = w[i].max(0.0).sqrt();
        for j in 0..x.ncols() {
            xs[[i, j]] *= s;
        }
        ys[i] *= s;
    }
    lstsq(&xs, &ys)
}

/// Cholesky solve of a symmetric positive definite system. Returns None
/// when a pivot falls below `tol` times the largest diagonal entry, which
/// doubles as the singularity check for normal-equation solves.
pub fn solve_spd(a: &Array2<f64>, y: &Array1<f64>, tol: f64) -> Option<Array1<f64>> {
    let k = a.nrows();
    assert_eq!(k, a.ncols(), "matrix not square");
    assert_eq!(k, y.len(), "rhs length mismatch");
    if k == 0 {
        return Some(Array1::zeros(0));
    }
    let max_diag = (0..k).map(|i| a[[i, i]].abs()).fold(0.0_f64, f64::max);
    let mut l = a.clone();
    for j in 0..k {
        let mut d = l[[j, j]];
        for p in 0..j {
            d -= l[[j, p]] * l[[j, p]];
        }
        if !(d > tol * max_diag) {
            return None;
        }
        let dj = d.sqrt();
        l[[j, j]] = dj;
        for i in j + 1..k {
            let mut s = l[[i, j]];
            for p in 0..j {
                s -= l[[i, p]] * l[[j, p]];
            }
            l[[i, j]] = s / dj;
        }
    }
    let mut z = y.clone();
    for i in 0..k {
        let mut s = z[i];
        for p in 0..i {
            s -= l[[i, p]] * z[p];
        }
        z[i] = s / l[[i, i]];
    }
    for i in (0..k).rev() {
        let mut s = z[i];
        for p in i + 1..k {
            s -= l[[p, i]] * z[p];
        }
        z[i] = s / l[[i, i]];
    }
    Some(z)
}

/// Greedy left-to-right rank scan: a column is kept when its residual
/// against the span of the columns kept so far exceeds `tol` times its own
/// norm. Unlike pivoted QR this never drops an early column in favour of a
/// later one, which callers use to protect main effects from collinear
/// interaction terms. Returns (kept, dropped) original indices.
pub fn independent_columns(x: &Array2<f64>, tol: f64) -> (Vec<usize>, Vec<usize>) {
    let n = x.nrows();
    let k = x.ncols();
    let mut basis: Vec<Array1<f64>> = Vec::new();
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for j in 0..k {
        let col = x.column(j).to_owned();
        let norm: f64 = col.iter().map(|&e| e * e).sum::<f64>().sqrt();
        if norm == 0.0 {
            dropped.push(j);
            continue;
        }
        let mut u = col;
        // Two Gram-Schmidt passes keep the residual orthogonal enough for a
        // rank decision even with nearly dependent columns.
        for _ in 0..2 {
            for q in &basis {
                let dot: f64 = u.iter().zip(q.iter()).map(|(&a, &b)| a * b).sum();
                for i in 0..n {
                    u[i] -= dot * q[i];
                }
            }
        }
        let resid: f64 = u.iter().map(|&e| e * e).sum::<f64>().sqrt();
        if resid > tol * norm {
            kept.push(j);
            basis.push(u.mapv(|e| e / resid));
        } else {
            dropped.push(j);
        }
    }
    (kept, dropped)
}

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi sweeps.
/// Returns (eigenvalues, eigenvectors as columns), sorted by decreasing
/// eigenvalue. Input symmetry is the caller's responsibility.
pub fn sym_eigen(a: &Array2<f64>) -> (Array1<f64>, Array2<f64>) {
    let k = a.nrows();
    assert_eq!(k, a.ncols(), "matrix not square");
    let mut m = a.clone();
    let mut v: Array2<f64> = Array2::eye(k);
    if k <= 1 {
        return (m.diag().to_owned(), v);
    }
    let frob: f64 = a.iter().map(|&e| e * e).sum::<f64>().sqrt();
    let tol = 1e-14 * frob.max(1e-300);

    for _sweep in 0..100 {
        let off: f64 = (0..k)
            .flat_map(|p| (0..k).map(move |q| (p, q)))
            .filter(|&(p, q)| p != q)
            .map(|(p, q)| m[[p, q]] * m[[p, q]])
            .sum::<f64>()
            .sqrt();
        if off <= tol {
            break;
        }
        for p in 0..k - 1 {
            for q in p + 1..k {
                let apq = m[[p, q]];
                if apq.abs() <= tol / (k as f64) {
                    continue;
                }
                let theta = (m[[q, q]] - m[[p, p]]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for i in 0..k {
                    let mip = m[[i, p]];
                    let miq = m[[i, q]];
                    m[[i, p]] = c * mip - s * miq;
                    m[[i, q]] = s * mip + c * miq;
                }
                for j in 0..k {
                    let mpj = m[[p, j]];
                    let mqj = m[[q, j]];
                    m[[p, j]] = c * mpj - s * mqj;
                    m[[q, j]] = s * mpj + c * mqj;
                }
                for i in 0..k {
                    let vip = v[[i, p]];
                    let viq = v[[i, q]];
                    v[[i, p]] = c * vip - s * viq;
                    v[[i, q]] = s * vip + c * viq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by(|&i, &j| m[[j, j]].partial_cmp(&m[[i, i]]).unwrap());
    let mut values = Array1::zeros(k);
    let mut vectors = Array2::zeros((k, k));
    for (slot, &idx) in order.iter().enumerate() {
        values[slot] = m[[idx, idx]];
        for i in 0..k {
            vectors[[i, slot]] = v[[i, idx]];
        }
    }
    (values, vectors)
}
