//! Exact phase-one simplex with Bland's rule.
//!
//! Decides feasibility of `A x = b, x >= 0` and always returns a certificate:
//! a feasible `x`, or a Farkas vector `y` with `yᵀA <= 0` and `yᵀb > 0`.

use num::{Signed, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub(crate) enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible(Vec<Rational>),
}

/// `rows[i]` is the i-th row of A (all rows the same length).
pub(crate) fn feasible_nonneg(rows: &[Vec<Rational>], rhs: &[Rational]) -> LpOutcome {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    debug_assert_eq!(rhs.len(), m);
    if m == 0 {
        return LpOutcome::Feasible(vec![Rational::zero(); n]);
    }

    // Columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut flip = vec![false; m];
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for i in 0..m {
        flip[i] = rhs[i].is_negative();
        let mut row = vec![Rational::zero(); width];
        for j in 0..n {
            row[j] = if flip[i] { -rows[i][j].clone() } else { rows[i][j].clone() };
        }
        row[n + i] = Rational::from_integer(1.into());
        row[width - 1] = rhs[i].abs();
        tab.push(row);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut obj = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..n {
            obj[j] -= &row[j];
        }
        obj[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    while let Some(enter) = (0..n + m).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][width - 1] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so a leaving row always exists.
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut tab, &mut obj, r, enter);
        basis[r] = enter;
    }

    let value = -obj[width - 1].clone();
    if value.is_positive() {
        let one = Rational::from_integer(1.into());
        let y = (0..m)
            .map(|i| {
                let yi = &one - &obj[n + i];
                if flip[i] {
                    -yi
                } else {
                    yi
                }
            })
            .collect();
        LpOutcome::Infeasible(y)
    } else {
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in basis.iter().enumerate() {
            if b < n {
                x[b] = tab[i][width - 1].clone();
            }
        }
        LpOutcome::Feasible(x)
    }
}

fn pivot(tab: &mut [Vec<Rational>], obj: &mut [Rational], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for v in tab[r].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let pivot_row = tab[r].clone();
    let eliminate = |row: &mut [Rational]| {
        if row[c].is_zero() {
            return;
        }
        let f = row[c].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &f * p;
            }
        }
    };
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(obj);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter().map(|row| row.iter().map(|&x| r(x)).collect()).collect()
    }

    fn check_feasible(a: &[Vec<Rational>], b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (row, bi) in a.iter().zip(b) {
            let lhs: Rational = row.iter().zip(x).map(|(p, q)| p * q).sum();
            assert_eq!(&lhs, bi);
        }
    }

    fn check_farkas(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) {
        let n = a[0].len();
        for j in 0..n {
            let col: Rational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
            assert!(!col.is_positive());
        }
        let yb: Rational = b.iter().zip(y).map(|(p, q)| p * q).sum();
        assert!(yb.is_positive());
    }

    #[test]
    fn feasible_system() {
        let a = rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = vec![r(2), r(3)];
        match feasible_nonneg(&a, &b) {
            LpOutcome::Feasible(x) => check_feasible(&a, &b, &x),
            LpOutcome::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn infeasible_system_with_negative_rhs() {
        // x1 + x2 = -1 has no nonnegative solution.
        let a = rows(&[&[1, 1]]);
        let b = vec![r(-1)];
        match feasible_nonneg(&a, &b) {
            LpOutcome::Infeasible(y) => check_farkas(&a, &b, &y),
            LpOutcome::Feasible(_) => panic!("expected infeasible"),
        }
    }

    #[test]
    fn redundant_rows_are_handled() {
        let a = rows(&[&[1, -1], &[2, -2], &[1, 1]]);
        let b = vec![r(0), r(0), r(1)];
        match feasible_nonneg(&a, &b) {
            LpOutcome::Feasible(x) => check_feasible(&a, &b, &x),
            LpOutcome::Infeasible(_) => panic!("expected feasible"),
        }
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale-style degenerate system; Bland's rule must terminate.
        let a = rows(&[&[1, -11, -5, 18, 1, 0], &[1, -3, -1, 2, 0, 1], &[1, 0, 0, 0, 0, 0]]);
        let b = vec![r(0), r(0), r(1)];
        match feasible_nonneg(&a, &b) {
            LpOutcome::Feasible(x) => check_feasible(&a, &b, &x),
            LpOutcome::Infeasible(y) => check_farkas(&a, &b, &y),
        }
    }
}
