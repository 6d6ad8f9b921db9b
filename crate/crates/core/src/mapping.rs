//! Maps between the sphere and affine charts, checked for hull commutation.

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{cone_membership, hemisphericity, GordanCertificate, Membership, Rational, Ray};
use crate::polytope::{central_project, central_unproject, AffinePoint, SphericalPolytope};

#[derive(Clone, Debug, PartialEq)]
pub enum MappingSpec {
    /// Sphere to the chart hyperplane `{x : chart·x = 1}`.
    Central(Ray),
    /// Chart hyperplane back to rays.
    InverseCentral(Ray),
    /// `x ↦ (−2x₁/xₙ₊₁, …, −2xₙ/xₙ₊₁, −1)`.
    Stereographic,
    /// `x ↦ Mx + b` on affine points.
    Affine { matrix: Vec<Vec<Rational>>, offset: Vec<Rational> },
}

/// Input or output of a mapping.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Ray(Ray),
    Affine(AffinePoint),
}

impl MappingSpec {
    pub fn affine(matrix: Vec<Vec<Rational>>, offset: Vec<Rational>) -> Result<MappingSpec> {
        if matrix.is_empty() || matrix.iter().any(|r| r.len() != matrix[0].len()) {
            return Err(Error::InvalidParameter("affine matrix must be a nonempty rectangle".into()));
        }
        if offset.len() != matrix.len() {
            return Err(Error::DimensionMismatch { expected: matrix.len(), found: offset.len() });
        }
        Ok(MappingSpec::Affine { matrix, offset })
    }

    fn takes_rays(&self) -> bool {
        matches!(self, MappingSpec::Central(_) | MappingSpec::Stereographic)
    }

    pub fn apply(&self, q: &Point) -> Result<Point> {
        match (self, q) {
            (MappingSpec::Central(c), Point::Ray(r)) => Ok(Point::Affine(central_project(c, r)?)),
            (MappingSpec::InverseCentral(c), Point::Affine(x)) => Ok(Point::Ray(central_unproject(c, x)?)),
            (MappingSpec::Stereographic, Point::Ray(r)) => Ok(Point::Affine(stereographic(r)?)),
            (MappingSpec::Affine { matrix, offset }, Point::Affine(x)) => {
                if x.len() != matrix[0].len() {
                    return Err(Error::DimensionMismatch { expected: matrix[0].len(), found: x.len() });
                }
                Ok(Point::Affine(
                    matrix
                        .iter()
                        .zip(offset)
                        .map(|(row, b)| row.iter().zip(x).map(|(m, v)| m * v).sum::<Rational>() + b)
                        .collect(),
                ))
            }
            _ => Err(Error::DomainViolation(format!(
                "{} expects {} input",
                self.name(),
                if self.takes_rays() { "ray" } else { "affine" }
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MappingSpec::Central(_) => "central",
            MappingSpec::InverseCentral(_) => "inverse_central",
            MappingSpec::Stereographic => "stereographic",
            MappingSpec::Affine { .. } => "affine",
        }
    }
}

fn stereographic(r: &Ray) -> Result<AffinePoint> {
    let (last, head) = r.coords().split_last().ok_or(Error::EmptyInput)?;
    if last.is_zero() {
        return Err(Error::DomainViolation(format!("{r} has vanishing last coordinate")));
    }
    let two = Rational::from_integer(2.into());
    let mut out: AffinePoint = head.iter().map(|x| -(&two * x) / last).collect();
    out.push(-Rational::one());
    Ok(out)
}

/// Vertices of the affine hull of `points`, in input order and without
/// duplicates: a point is kept unless it is a convex combination of the
/// other distinct points.
pub fn affine_vertices(points: &[AffinePoint]) -> Result<Vec<AffinePoint>> {
    let n = points.first().ok_or(Error::EmptyInput)?.len();
    let mut distinct: Vec<AffinePoint> = Vec::new();
    for p in points {
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    // (x, 1) lifts make convex combinations into conic ones; the lifted set
    // is pointed, so the exact membership oracle applies
    let lift = |p: &AffinePoint| {
        let mut v = p.clone();
        v.push(Rational::one());
        Ray::new(v)
    };
    let lifted: Vec<Ray> = distinct.iter().map(lift).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (i, p) in distinct.iter().enumerate() {
        let others: Vec<Ray> = lifted.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, r)| r.clone()).collect();
        let redundant = !others.is_empty() && matches!(cone_membership(&lifted[i], &others)?, Membership::Inside(_));
        if !redundant {
            out.push(p.clone());
        }
    }
    Ok(out)
}

fn same_vertex_set(a: &[AffinePoint], b: &[AffinePoint]) -> bool {
    a.len() == b.len() && a.iter().all(|p| b.contains(p))
}

fn affine_points(pts: &[Point]) -> Result<Vec<AffinePoint>> {
    pts.iter()
        .map(|p| match p {
            Point::Affine(x) => Ok(x.clone()),
            Point::Ray(r) => Err(Error::DomainViolation(format!("expected an affine point, got ray {r}"))),
        })
        .collect()
}

/// `f(conv U) = conv f(U)`, compared exactly through irredundant vertex
/// sets: the hull of the images against the image of the hull's vertices.
pub fn check_conv_commutes(m: &MappingSpec, points: &[Point]) -> Result<bool> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    let images: Vec<Point> = points.iter().map(|p| m.apply(p)).collect::<Result<_>>()?;
    match m {
        MappingSpec::Central(_) => {
            let rays: Vec<Ray> = ray_points(points)?;
            let hull = SphericalPolytope::s_conv(&rays)?;
            let mapped: Vec<Point> =
                hull.vertices().iter().map(|v| m.apply(&Point::Ray(v.clone()))).collect::<Result<_>>()?;
            Ok(same_vertex_set(
                &affine_vertices(&affine_points(&images)?)?,
                &affine_vertices(&affine_points(&mapped)?)?,
            ))
        }
        MappingSpec::InverseCentral(_) => {
            let verts = affine_vertices(&affine_points(points)?)?;
            let mapped: Vec<Ray> =
                ray_points(&verts.into_iter().map(|v| m.apply(&Point::Affine(v))).collect::<Result<Vec<_>>>()?)?;
            let hull = SphericalPolytope::s_conv(&ray_points(&images)?)?;
            Ok(hull == SphericalPolytope::s_conv(&mapped)? && hull.vertices().len() == mapped.len())
        }
        MappingSpec::Affine { .. } => {
            let verts = affine_vertices(&affine_points(points)?)?;
            let mapped: Vec<Point> = verts.into_iter().map(|v| m.apply(&Point::Affine(v))).collect::<Result<_>>()?;
            Ok(same_vertex_set(
                &affine_vertices(&affine_points(&images)?)?,
                &affine_vertices(&affine_points(&mapped)?)?,
            ))
        }
        MappingSpec::Stereographic => Err(Error::DomainViolation(
            "stereographic projection is not a convex set mapping; see stereographic_counterexample".into(),
        )),
    }
}

fn ray_points(pts: &[Point]) -> Result<Vec<Ray>> {
    pts.iter()
        .map(|p| match p {
            Point::Ray(r) => Ok(r.clone()),
            Point::Affine(_) => Err(Error::DomainViolation("expected a ray".into())),
        })
        .collect()
}

/// The cone `{q : (n − γ·chart)·q >= 0}` whose trace on the open hemisphere
/// about `chart` is the preimage of the chart half-space `{x : n·x >= γ}`.
pub fn halfspace_preimage(chart: &Ray, normal: &[Rational], gamma: &Rational) -> Result<Ray> {
    if normal.len() != chart.len() {
        return Err(Error::DimensionMismatch { expected: chart.len(), found: normal.len() });
    }
    Ray::new(normal.iter().zip(chart.coords()).map(|(a, c)| a - gamma * c).collect())
}

/// Exact agreement of chart-side and sphere-side half-space membership on
/// every point of the open hemisphere about `chart`.
pub fn check_halfspace_preimage(chart: &Ray, normal: &[Rational], gamma: &Rational, points: &[Ray]) -> Result<bool> {
    let h = halfspace_preimage(chart, normal, gamma)?;
    for q in points {
        let x = central_project(chart, q)?;
        let chart_side = normal.iter().zip(&x).map(|(a, b)| a * b).sum::<Rational>() >= *gamma;
        let sphere_side = !h.dot(q)?.is_negative();
        if chart_side != sphere_side {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-hemisphericity of the preimage of the line `{(m, 0, −1)}` under the
/// stereographic formula on S².
#[derive(Clone, Debug, Serialize)]
pub struct StereographicCertificate {
    /// `(1,0,0)` and `(−1,0,0)`: limits of preimage points (the formula is
    /// undefined where the last coordinate vanishes).
    pub pair: [Ray; 2],
    #[serde(with = "crate::exact::as_string::vec")]
    pub pair_dependence: Vec<Rational>,
    /// Preimage points converging to the pair, with their images.
    pub approach: Vec<Approach>,
    /// Points of the preimage itself (last coordinate nonzero, none of them
    /// the pole) with a Gordan dependence among them.
    pub in_set: Vec<Ray>,
    #[serde(with = "crate::exact::as_string::vec")]
    pub in_set_dependence: Vec<Rational>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Approach {
    pub point: Ray,
    #[serde(with = "crate::exact::as_string::vec")]
    pub image: AffinePoint,
}

fn on_line(x: &AffinePoint) -> bool {
    x.len() == 3 && x[1].is_zero() && x[2] == -Rational::one()
}

fn dependence(points: &[Ray]) -> Result<Option<Vec<Rational>>> {
    Ok(match hemisphericity(points)? {
        GordanCertificate::Dependence(l) => Some(l),
        GordanCertificate::Witness(_) => None,
    })
}

pub fn stereographic_counterexample() -> Result<StereographicCertificate> {
    let ray = |v: &[i64]| Ray::from_ints(v);
    let pair = [ray(&[1, 0, 0])?, ray(&[-1, 0, 0])?];
    let mut approach = Vec::new();
    let mut verified = true;
    for k in 1..=6 {
        let t = Rational::new(1.into(), (1i64 << k).into());
        for s in [1, -1] {
            for z in [t.clone(), -t.clone()] {
                let q = Ray::new(vec![Rational::from_integer(s.into()), Rational::zero(), z])?;
                let img = stereographic(&q)?;
                verified &= on_line(&img);
                approach.push(Approach { point: q, image: img });
            }
        }
    }
    let pair_dependence = dependence(&pair)?.unwrap_or_default();
    verified &=
        pair_dependence.len() == 2 && pair_dependence[0] == pair_dependence[1] && pair_dependence[0].is_positive();
    let in_set = vec![ray(&[1, 0, 1])?, ray(&[-1, 0, 1])?, ray(&[0, 0, -1])?];
    for q in &in_set {
        verified &= stereographic(q).is_ok_and(|x| on_line(&x));
    }
    let in_set_dependence = dependence(&in_set)?.unwrap_or_default();
    verified &= !in_set_dependence.is_empty();
    Ok(StereographicCertificate { pair, pair_dependence, approach, in_set, in_set_dependence, verified })
}
