//! Small exact linear algebra over the rationals.

use num::{BigInt, One, Zero};

use super::ray::primitive;
use super::{IVec, Rational};

fn to_rat(v: &[BigInt]) -> Vec<Rational> {
    v.iter().cloned().map(Rational::from_integer).collect()
}

/// Clears denominators and divides by the gcd, preserving direction.
pub(crate) fn rat_to_ivec(v: &[Rational]) -> IVec {
    let lcm = v.iter().fold(BigInt::one(), |acc, c| num::integer::lcm(acc, c.denom().clone()));
    primitive(v.iter().map(|c| (c * &lcm).to_integer()).collect())
}

/// Reduced row echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(rows: &[IVec]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| to_rat(r)).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in m[row].iter_mut() {
            *c *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let factor = m[i][col].clone();
                let pivot_row = m[row].clone();
                for (c, pc) in m[i].iter_mut().zip(pivot_row.iter()) {
                    *c -= &factor * pc;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

pub(crate) fn rank(rows: &[IVec]) -> usize {
    rref(rows).1.len()
}

/// Canonical basis of the span of `rows`: the RREF rows scaled to primitive
/// integer vectors. Two spanning sets of one subspace give identical output.
pub(crate) fn canonical_basis(rows: &[IVec]) -> Vec<IVec> {
    rref(rows).0.iter().map(|r| rat_to_ivec(r)).collect()
}

/// Orthogonal projection of `v` onto the orthogonal complement of span(basis),
/// scaled to a primitive integer vector (zero if `v` lies in the span).
pub(crate) fn project_out(v: &[BigInt], basis: &[IVec]) -> IVec {
    if basis.is_empty() {
        return v.to_vec();
    }
    let ortho = gram_schmidt(basis);
    let mut w = to_rat(v);
    for o in &ortho {
        let oo: Rational = o.iter().map(|x| x * x).sum();
        let wo: Rational = w.iter().zip(o).map(|(a, b)| a * b).sum();
        if wo.is_zero() {
            continue;
        }
        let f = wo / oo;
        for (a, b) in w.iter_mut().zip(o) {
            *a -= &f * b;
        }
    }
    rat_to_ivec(&w)
}

fn gram_schmidt(basis: &[IVec]) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for b in basis {
        let mut w = to_rat(b);
        for o in &out {
            let oo: Rational = o.iter().map(|x| x * x).sum();
            let wo: Rational = w.iter().zip(o).map(|(a, c)| a * c).sum();
            let f = wo / oo;
            for (a, c) in w.iter_mut().zip(o) {
                *a -= &f * c;
            }
        }
        if w.iter().any(|x| !x.is_zero()) {
            out.push(w);
        }
    }
    out
}
