//! Lawson–Hanson active-set nonnegative least squares.

use nalgebra::{DMatrix, DVector};

const TOL: f64 = 1e-14;

fn sub_lstsq(a: &DMatrix<f64>, b: &DVector<f64>, active: &[usize]) -> DVector<f64> {
    let sub = a.select_columns(active);
    let svd = sub.svd(true, true);
    svd.solve(b, 1e-13).expect("svd with both factors")
}

/// `argmin_{λ >= 0} |Aλ − b|`.
pub(crate) fn solve(a: &DMatrix<f64>, b: &DVector<f64>) -> DVector<f64> {
    let k = a.ncols();
    let mut x = DVector::zeros(k);
    let mut passive: Vec<bool> = vec![false; k];
    for _ in 0..3 * k + 10 {
        let w = a.transpose() * (b - a * &x);
        let Some((t, wt)) = (0..k).filter(|&j| !passive[j]).map(|j| (j, w[j])).max_by(|p, q| p.1.total_cmp(&q.1))
        else {
            break;
        };
        if wt <= TOL {
            break;
        }
        passive[t] = true;
        loop {
            let active: Vec<usize> = (0..k).filter(|&j| passive[j]).collect();
            let s = sub_lstsq(a, b, &active);
            if s.iter().all(|&v| v > TOL) {
                x.fill(0.0);
                for (i, &j) in active.iter().enumerate() {
                    x[j] = s[i];
                }
                break;
            }
            let mut alpha = f64::INFINITY;
            for (i, &j) in active.iter().enumerate() {
                if s[i] <= TOL {
                    let denom = x[j] - s[i];
                    if denom > 0.0 {
                        alpha = alpha.min(x[j] / denom);
                    }
                }
            }
            if !alpha.is_finite() {
                alpha = 0.0;
            }
            for (i, &j) in active.iter().enumerate() {
                x[j] += alpha * (s[i] - x[j]);
            }
            for &j in &active {
                if x[j] <= TOL {
                    x[j] = 0.0;
                    passive[j] = false;
                }
            }
            if !passive.iter().any(|&p| p) {
                break;
            }
        }
    }
    x
}
