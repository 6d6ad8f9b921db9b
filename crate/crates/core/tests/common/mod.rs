//! Brute-force oracles shared by the integration tests. Everything here is
//! deliberately naive: subsets, determinants and single LP calls.

#![allow(dead_code)]

use num::{BigInt, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sphereconvex::exact::{cone_membership, cones_disjoint, hemisphericity, Rational, Ray};

pub fn ray(v: &[i64]) -> Ray {
    Ray::from_ints(v).unwrap()
}

/// `m` distinct small-integer rays `(x, 8)` with `x ∈ [−5, 5]^d`.
pub fn chart_points(d: usize, m: usize, seed: u64) -> Vec<Ray> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Ray> = Vec::new();
    while out.len() < m {
        let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-5..=5)).collect();
        c.push(8);
        let r = ray(&c);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Points not in the cone of the others.
pub fn brute_vertices(points: &[Ray]) -> Vec<Ray> {
    let mut v: Vec<Ray> = (0..points.len())
        .filter(|&k| {
            let others: Vec<Ray> = points.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p.clone()).collect();
            others.is_empty() || !cone_membership(&points[k], &others).unwrap().is_inside()
        })
        .map(|k| points[k].clone())
        .collect();
    v.sort();
    v.dedup();
    v
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for c in 0..m.len() {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][c] * det(&minor);
        if c % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The generalized cross product of `len − 1` integer vectors.
fn cross(rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let len = rows[0].len();
    (0..len)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, x)| x.clone()).collect())
                .collect();
            let v = det(&minor);
            if i % 2 == 0 {
                v
            } else {
                -v
            }
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn to_int(r: &Ray) -> Vec<BigInt> {
    r.primitive().clone()
}

/// Facet normals of a full-dimensional cone: hyperplanes through `len − 1`
/// of the points with every point weakly on the positive side.
pub fn brute_facets(points: &[Ray]) -> Vec<Ray> {
    let len = points[0].len();
    let mut out: Vec<Ray> = Vec::new();
    for s in subsets(points.len(), len - 1) {
        let rows: Vec<Vec<BigInt>> = s.iter().map(|&k| to_int(&points[k])).collect();
        let n = cross(&rows);
        if n.iter().all(|x| x.is_zero()) {
            continue;
        }
        let dots: Vec<BigInt> = points.iter().map(|p| to_int(p).iter().zip(&n).map(|(a, b)| a * b).sum()).collect();
        let candidate = if dots.iter().all(|x| !x.is_negative()) {
            n
        } else if dots.iter().all(|x| !x.is_positive()) {
            n.into_iter().map(|x| -x).collect()
        } else {
            continue;
        };
        let r = Ray::new(candidate.into_iter().map(Rational::from_integer).collect()).unwrap();
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out.sort();
    out
}

fn dot_q(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `S` is a proper face iff some normal vanishes on `S` and is positive on
/// the rest: project the rest off `span(S)` and ask Gordan.
pub fn is_face_brute(verts: &[Ray], s: &[usize]) -> bool {
    let rest: Vec<usize> = (0..verts.len()).filter(|k| !s.contains(k)).collect();
    if s.is_empty() || rest.is_empty() {
        return false;
    }
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for &k in s {
        let mut v = verts[k].coords().to_vec();
        for b in &basis {
            let c = dot_q(&v, b) / dot_q(b, b);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &c * y;
            }
        }
        if v.iter().any(|x| !x.is_zero()) {
            basis.push(v);
        }
    }
    let mut projected = Vec::new();
    for &k in &rest {
        let mut v = verts[k].coords().to_vec();
        for b in &basis {
            let c = dot_q(&v, b) / dot_q(b, b);
            for (x, y) in v.iter_mut().zip(b) {
                *x -= &c * y;
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            return false;
        }
        projected.push(Ray::new(v).unwrap());
    }
    hemisphericity(&projected).unwrap().is_hemispherical()
}

fn pick(verts: &[Ray], idx: &[usize]) -> Vec<Ray> {
    idx.iter().map(|&k| verts[k].clone()).collect()
}

fn disjoint(verts: &[Ray], a: &[usize], b: &[usize]) -> bool {
    cones_disjoint(&pick(verts, a), &pick(verts, b)).unwrap().is_disjoint()
}

/// Every vertex subset, as a bit mask.
fn all_splits(m: usize) -> impl Iterator<Item = (Vec<usize>, Vec<usize>)> {
    (1u64..(1 << m) - 1).map(move |mask| {
        let i: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 1).collect();
        let j: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 0).collect();
        (i, j)
    })
}

pub fn brute_faces(verts: &[Ray]) -> Vec<Vec<usize>> {
    all_splits(verts.len()).map(|(i, _)| i).filter(|i| is_face_brute(verts, i)).collect()
}

/// Two slots per proper face, each kept when the face and the rest have
/// disjoint hulls.
pub fn brute_count_by_face(verts: &[Ray]) -> usize {
    brute_faces(verts)
        .iter()
        .map(|f| {
            let rest: Vec<usize> = (0..verts.len()).filter(|k| !f.contains(k)).collect();
            if disjoint(verts, f, &rest) {
                2
            } else {
                0
            }
        })
        .sum()
}

/// Ordered partitions with disjoint hulls and at least one side a face.
pub fn brute_count_by_partition(verts: &[Ray]) -> usize {
    all_splits(verts.len())
        .filter(|(i, j)| disjoint(verts, i, j) && (is_face_brute(verts, i) || is_face_brute(verts, j)))
        .count()
}
