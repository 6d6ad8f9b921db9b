use std::f64::consts::FRAC_PI_2;

use serde::Serialize;

use super::mesh::{hausdorff, BodyMesh, Hausdorff};
use super::{dot, ConeDistance, UnitPoint};
use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::Ray;
use crate::polytope::SphericalPolytope;
use crate::separation::{semi_separation_center, AsCone, SemiCenter};

/// Membership in the closed class about `center`: full-dimensional, inside
/// the open hemisphere about `center`, with `center` interior.
pub fn check_class(w: &SphericalPolytope, center: &Ray) -> Result<()> {
    if !w.is_full_dimensional() {
        return Err(Error::ClassViolation(format!("body has dimension {} in S^{}", w.dim(), w.ambient())));
    }
    if let Some(v) = w.vertices().iter().find(|v| !center.sign_dot(v).is_ok_and(|s| s.is_gt())) {
        return Err(Error::ClassViolation(format!("vertex {v} leaves the open hemisphere about {center}")));
    }
    if !w.cone().contains_relint(center) {
        return Err(Error::ClassViolation(format!("{center} is not interior to the body")));
    }
    Ok(())
}

/// `d(q, W) <= eps` for `0 < eps < π/2`, with an exact membership pre-check
/// on a rational rounding of q.
pub fn ball_membership<A: AsCone + ?Sized>(w: &A, q: &UnitPoint, eps: f64) -> Result<bool> {
    if !(eps > 0.0 && eps < FRAC_PI_2) {
        return Err(Error::InvalidParameter(format!("eps must lie in (0, π/2), got {eps}")));
    }
    let cone = w.as_cone();
    if q.len() != cone.len() {
        return Err(Error::DimensionMismatch { expected: cone.len(), found: q.len() });
    }
    if let Some(r) = round_to_ray(q) {
        if cone.contains(&r) {
            return Ok(true);
        }
    }
    Ok(ConeDistance::new(cone)?.distance(q) <= eps)
}

pub(crate) fn round_to_ray(q: &UnitPoint) -> Option<Ray> {
    let scale = f64::from(1u32 << 30);
    let v: Vec<i64> = q.coords().iter().map(|c| (c * scale).round() as i64).collect();
    Ray::from_ints(&v).ok()
}

/// A point `P₁` within `eps` of `p` whose hemisphere contains `q`, when q is
/// within `eps` of H(p): rotate p toward q along their great circle.
pub fn hemisphere_ball_witness(p: &UnitPoint, q: &UnitPoint, eps: f64) -> Option<UnitPoint> {
    let c = p.dot(q);
    if c >= 0.0 {
        return Some(p.clone());
    }
    let theta = c.clamp(-1.0, 1.0).acos();
    let needed = theta - FRAC_PI_2;
    if needed > eps {
        return None;
    }
    let tangent: Vec<f64> = q.coords().iter().zip(p.coords()).map(|(x, y)| x - c * y).collect();
    let tn = dot(&tangent, &tangent).sqrt();
    if tn == 0.0 {
        return None;
    }
    let v = p.coords().iter().zip(&tangent).map(|(a, t)| a * needed.cos() + t / tn * needed.sin()).collect();
    UnitPoint::new(v).ok()
}

/// Residual of the polar isometry on a pair of bodies.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct IsometryReport {
    pub h: Hausdorff,
    pub h_polar: Hausdorff,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// `|h(W₁, W₂) − h(W₁°, W₂°)|`, passing within twice the resolution.
pub fn check_isometry(
    w1: &SphericalPolytope,
    w2: &SphericalPolytope,
    center: &Ray,
    resolution: f64,
) -> Result<IsometryReport> {
    check_class(w1, center)?;
    check_class(w2, center)?;
    let h = hausdorff(&BodyMesh::of_polytope(w1, resolution)?, &BodyMesh::of_polytope(w2, resolution)?)?;
    let h_polar =
        hausdorff(&BodyMesh::of_cone(&w1.polar(), resolution)?, &BodyMesh::of_cone(&w2.polar(), resolution)?)?;
    let residual = (h.h - h_polar.h).abs();
    let tolerance = 2.0 * resolution;
    Ok(IsometryReport { h, h_polar, residual, tolerance, pass: residual <= tolerance })
}

/// `max(h(W₁,W₂), h(Y₁,Y₂)) − h(C(W₁,Y₁), C(W₂,Y₂))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NonexpansiveReport {
    pub h_w: f64,
    pub h_y: f64,
    /// Absent when a semi-separation center is empty (the trial is skipped).
    pub h_c: Option<f64>,
    pub margin: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Checks that the separation operator does not expand Hausdorff distance.
/// `wᵢ` must lie in the class about `center`, `yᵢ` in the class about its
/// antipode.
pub fn check_nonexpansive(
    w1: &SphericalPolytope,
    y1: &SphericalPolytope,
    w2: &SphericalPolytope,
    y2: &SphericalPolytope,
    center: &Ray,
    resolution: f64,
) -> Result<NonexpansiveReport> {
    let anti = center.neg();
    check_class(w1, center)?;
    check_class(w2, center)?;
    check_class(y1, &anti)?;
    check_class(y2, &anti)?;
    let mesh = |p: &SphericalPolytope| BodyMesh::of_polytope(p, resolution);
    let h_w = hausdorff(&mesh(w1)?, &mesh(w2)?)?.h;
    let h_y = hausdorff(&mesh(y1)?, &mesh(y2)?)?.h;
    let tolerance = 2.0 * resolution;
    let (c1, c2) = (semi_separation_center(w1, y1)?, semi_separation_center(w2, y2)?);
    let (SemiCenter::Cone(c1), SemiCenter::Cone(c2)) = (c1, c2) else {
        return Ok(NonexpansiveReport { h_w, h_y, h_c: None, margin: None, tolerance, pass: true });
    };
    let h_c = hausdorff(&BodyMesh::of_cone(&c1, resolution)?, &BodyMesh::of_cone(&c2, resolution)?)?.h;
    let margin = h_w.max(h_y) - h_c;
    Ok(NonexpansiveReport { h_w, h_y, h_c: Some(h_c), margin: Some(margin), tolerance, pass: margin >= -tolerance })
}

/// For the claim `B(W°, a) ∩ B(−Y°, a) = B(W° ∩ −Y°, a)`: the largest
/// `d(q, W° ∩ −Y°) − a` over samples q lying in the left side. Positive
/// values are points of the left side outside the right side.
pub fn ball_intersection_mismatch(
    w: &SphericalPolytope,
    y: &SphericalPolytope,
    a: f64,
    samples: &[UnitPoint],
) -> Result<f64> {
    let wp = w.polar();
    let ny = y.polar().neg();
    let both: ConvexCone = wp.intersect(&ny);
    let (dw, dy, db) = (ConeDistance::new(&wp)?, ConeDistance::new(&ny)?, ConeDistance::new(&both)?);
    let mut worst = f64::NEG_INFINITY;
    for q in samples {
        if dw.distance(q) <= a && dy.distance(q) <= a {
            worst = worst.max(db.distance(q) - a);
        }
    }
    Ok(worst)
}
