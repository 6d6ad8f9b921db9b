//! Floating-point geodesic geometry: distances to cones, meshes of bodies,
//! the Pompeiu–Hausdorff distance and the metric properties of polarity and
//! of the separation operator.

mod mesh;
mod nnls;
mod properties;
mod sample;

pub use mesh::{hausdorff, BodyMesh, Hausdorff, DEFAULT_RESOLUTION};
pub use properties::{
    ball_intersection_mismatch, ball_membership, check_class, check_isometry, check_nonexpansive,
    hemisphere_ball_witness, IsometryReport, NonexpansiveReport,
};
pub use sample::{cap_body, cap_point, rational_ray};

use nalgebra::{DMatrix, DVector};

use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::Ray;

/// A point of S^d in floating point, renormalized on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitPoint {
    coords: Vec<f64>,
}

impl UnitPoint {
    /// Normalizes `v`; fails on a zero or non-finite vector.
    pub fn new(v: Vec<f64>) -> Result<UnitPoint> {
        let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        if !(n.is_finite() && n > 0.0) {
            return Err(Error::InvalidParameter("cannot normalize a zero or non-finite vector".into()));
        }
        Ok(UnitPoint { coords: v.into_iter().map(|c| c / n).collect() })
    }

    pub fn from_ray(r: &Ray) -> UnitPoint {
        UnitPoint::new(r.to_f64()).expect("rays are nonzero")
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dot(&self, other: &UnitPoint) -> f64 {
        dot(&self.coords, &other.coords)
    }

    pub fn neg(&self) -> UnitPoint {
        UnitPoint { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Geodesic distance in radians, in `[0, π]`.
pub fn geodesic(u: &UnitPoint, v: &UnitPoint) -> f64 {
    u.dot(v).clamp(-1.0, 1.0).acos()
}

/// Distance oracle for the sphere trace of a nonzero cone.
#[derive(Clone, Debug)]
pub(crate) struct ConeDistance {
    // unit generators (rays and both signs of the lineality basis) as columns
    gens: DMatrix<f64>,
}

impl ConeDistance {
    pub(crate) fn new(cone: &ConvexCone) -> Result<ConeDistance> {
        if cone.is_empty() {
            return Err(Error::EmptyMesh);
        }
        let mut cols: Vec<Vec<f64>> = cone.rays().iter().map(|r| UnitPoint::from_ray(r).coords).collect();
        for l in cone.lineality() {
            let u = UnitPoint::from_ray(l);
            cols.push(u.neg().coords);
            cols.push(u.coords);
        }
        let n = cone.len();
        let gens = DMatrix::from_fn(n, cols.len(), |i, j| cols[j][i]);
        Ok(ConeDistance { gens })
    }

    /// `arccos |Π_K(x)|` when the projection is nonzero; otherwise the best
    /// generator, which is where the angle is minimized on a cone missing
    /// the open hemisphere about x.
    pub(crate) fn distance(&self, x: &UnitPoint) -> f64 {
        // (A, x) and (−A, −x) pose the same problem; fix a sign so mirrored
        // bodies see bit-identical input
        let flip = x.coords().iter().find(|c| **c != 0.0).is_some_and(|c| *c < 0.0);
        let s = if flip { -1.0 } else { 1.0 };
        let b = DVector::from_iterator(x.len(), x.coords().iter().map(|c| s * c));
        let a = if flip { -&self.gens } else { self.gens.clone() };
        let lambda = nnls::solve(&a, &b);
        let proj = &a * lambda;
        let p = proj.norm();
        if p > 1e-13 {
            // atan2 keeps precision near zero where acos does not; residuals
            // at rounding level are members
            let r = (&b - &proj).norm();
            return if r <= 64.0 * f64::EPSILON { 0.0 } else { r.atan2(p) };
        }
        let best = a.column_iter().map(|g| g.dot(&b)).fold(f64::NEG_INFINITY, f64::max);
        best.clamp(-1.0, 1.0).acos()
    }
}

/// Geodesic distance from `x` to the sphere trace of `cone`.
pub fn distance_to_cone(x: &UnitPoint, cone: &ConvexCone) -> Result<f64> {
    if x.len() != cone.len() {
        return Err(Error::DimensionMismatch { expected: cone.len(), found: x.len() });
    }
    Ok(ConeDistance::new(cone)?.distance(x))
}
