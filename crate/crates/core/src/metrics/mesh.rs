use std::collections::HashMap;

use num::{BigInt, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{norm, ConeDistance, UnitPoint};
use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::IVec;
use crate::polytope::SphericalPolytope;

/// Default target spacing, radians.
pub const DEFAULT_RESOLUTION: f64 = 0.02;

#[derive(Clone, Debug)]
enum Body {
    Cone(ConeDistance),
    Points(Vec<UnitPoint>),
}

/// Exact description of a cone sample: weights on the unit vertex vectors.
#[derive(Clone, Debug)]
struct Node {
    weights: Vec<f64>,
    // Σ weights · unit vertex, not normalized
    point: Vec<f64>,
}

impl Node {
    fn unit(&self) -> Vec<f64> {
        let n = norm(&self.point);
        self.point.iter().map(|c| c / n).collect()
    }
}

/// Sampled body: every point of the body is within `resolution` of a sample.
#[derive(Clone, Debug)]
pub struct BodyMesh {
    resolution: f64,
    samples: Vec<UnitPoint>,
    body: Body,
    // for exact re-checks of cone samples
    cone: Option<ConvexCone>,
    vertex_prims: Vec<IVec>,
    nodes: Vec<Node>,
}

fn chord_angle(a: &[f64], b: &[f64]) -> f64 {
    let c: f64 = a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt();
    2.0 * (c / 2.0).min(1.0).asin()
}

/// Pulling triangulation of a face through the lattice: cone from its first
/// vertex over the triangulated facets that miss it.
fn triangulate(p: &SphericalPolytope, face: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![face[0]]];
    }
    let apex = face[0];
    let lattice = p.face_lattice();
    let mut out = Vec::new();
    for sub in lattice.faces(k - 1) {
        if sub.binary_search(&apex).is_ok() || !sub.iter().all(|v| face.binary_search(v).is_ok()) {
            continue;
        }
        for mut s in triangulate(p, sub, k - 1) {
            s.insert(0, apex);
            out.push(s);
        }
    }
    out
}

impl BodyMesh {
    /// Meshes a spherical polytope by longest-edge bisection of a
    /// triangulation until every edge is at most `resolution`.
    pub fn of_polytope(p: &SphericalPolytope, resolution: f64) -> Result<BodyMesh> {
        if !(resolution.is_finite() && resolution > 0.0) {
            return Err(Error::InvalidParameter(format!("resolution must be positive, got {resolution}")));
        }
        let verts = p.vertices();
        let nv = verts.len();
        let units: Vec<Vec<f64>> = verts.iter().map(|v| UnitPoint::from_ray(v).coords().to_vec()).collect();
        let all: Vec<usize> = (0..nv).collect();
        let simplices = if p.dim() == 0 { vec![vec![0]] } else { triangulate(p, &all, p.dim()) };

        let mut nodes: Vec<Node> = (0..nv)
            .map(|i| {
                let mut weights = vec![0.0; nv];
                weights[i] = 1.0;
                Node { weights, point: units[i].clone() }
            })
            .collect();
        let mut unit_cache: Vec<Vec<f64>> = units.clone();
        let mut midpoints: HashMap<(usize, usize), usize> = HashMap::new();
        let mut stack = simplices;
        while let Some(s) = stack.pop() {
            let mut longest: Option<(f64, usize, usize)> = None;
            for a in 0..s.len() {
                for b in a + 1..s.len() {
                    let len = chord_angle(&unit_cache[s[a]], &unit_cache[s[b]]);
                    if longest.is_none_or(|(l, _, _)| len > l) {
                        longest = Some((len, a, b));
                    }
                }
            }
            let Some((len, a, b)) = longest else { continue };
            if len <= resolution {
                continue;
            }
            let key = (s[a].min(s[b]), s[a].max(s[b]));
            let mid = *midpoints.entry(key).or_insert_with(|| {
                let (na, nb) = (&nodes[key.0], &nodes[key.1]);
                let (la, lb) = (norm(&na.point), norm(&nb.point));
                let weights = na.weights.iter().zip(&nb.weights).map(|(x, y)| x / la + y / lb).collect();
                let point = na.point.iter().zip(&nb.point).map(|(x, y)| x / la + y / lb).collect();
                let node = Node { weights, point };
                unit_cache.push(node.unit());
                nodes.push(node);
                nodes.len() - 1
            });
            let mut left = s.clone();
            left[b] = mid;
            let mut right = s;
            right[a] = mid;
            stack.push(right);
            stack.push(left);
        }
        let samples = unit_cache.into_iter().map(|u| UnitPoint::new(u).expect("unit")).collect();
        Ok(BodyMesh {
            resolution,
            samples,
            body: Body::Cone(ConeDistance::new(p.cone())?),
            cone: Some(p.cone().clone()),
            vertex_prims: verts.iter().map(|v| v.primitive().clone()).collect(),
            nodes,
        })
    }

    /// Meshes a pointed nonzero cone.
    pub fn of_cone(c: &ConvexCone, resolution: f64) -> Result<BodyMesh> {
        if c.is_empty() {
            return Err(Error::EmptyMesh);
        }
        BodyMesh::of_polytope(&SphericalPolytope::from_cone(c.clone())?, resolution)
    }

    /// A finite point set meshed by itself (resolution 0).
    pub fn of_points(points: Vec<UnitPoint>) -> Result<BodyMesh> {
        let first = points.first().ok_or(Error::EmptyMesh)?;
        if points.iter().any(|p| p.len() != first.len()) {
            return Err(Error::DimensionMismatch { expected: first.len(), found: 0 });
        }
        Ok(BodyMesh {
            resolution: 0.0,
            samples: points.clone(),
            body: Body::Points(points),
            cone: None,
            vertex_prims: Vec::new(),
            nodes: Vec::new(),
        })
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn samples(&self) -> &[UnitPoint] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Geodesic distance from `x` to the body (not to the samples).
    pub fn distance(&self, x: &UnitPoint) -> f64 {
        match &self.body {
            Body::Cone(c) => c.distance(x),
            Body::Points(ps) => ps.iter().map(|p| super::geodesic(p, x)).fold(f64::INFINITY, f64::min),
        }
    }

    /// The pointwise antipodal mesh.
    pub fn neg(&self) -> BodyMesh {
        let body = match &self.body {
            Body::Cone(c) => Body::Cone(ConeDistance { gens: -c.gens.clone() }),
            Body::Points(ps) => Body::Points(ps.iter().map(UnitPoint::neg).collect()),
        };
        BodyMesh {
            resolution: self.resolution,
            samples: self.samples.iter().map(UnitPoint::neg).collect(),
            body,
            cone: self.cone.as_ref().map(ConvexCone::neg),
            vertex_prims: self.vertex_prims.iter().map(|v| v.iter().map(|c| -c).collect()).collect(),
            nodes: self.nodes.clone(),
        }
    }

    /// Rounds each cone sample's weights to rationals and checks that the
    /// resulting nonnegative combination of vertices lies in the cone, exactly.
    pub fn certify(&self) -> bool {
        let Some(cone) = &self.cone else { return true };
        let scale = f64::from(1u32 << 30);
        let prim_norms: Vec<f64> = self
            .vertex_prims
            .iter()
            .map(|p| p.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY).powi(2)).sum::<f64>().sqrt())
            .collect();
        self.nodes.par_iter().all(|node| {
            let coef: Vec<f64> = node.weights.iter().zip(&prim_norms).map(|(w, n)| w / n).collect();
            let cmax = coef.iter().cloned().fold(0.0, f64::max);
            let mut v: IVec = vec![BigInt::zero(); cone.len()];
            for (c, prim) in coef.iter().zip(&self.vertex_prims) {
                let k = (c / cmax * scale).round();
                if k <= 0.0 {
                    continue;
                }
                let k = BigInt::from(k as i64);
                for (a, x) in v.iter_mut().zip(prim) {
                    *a += &k * x;
                }
            }
            v.iter().any(|c| !c.is_zero()) && cone.contains_vec(&v)
        })
    }
}

/// A Hausdorff estimate with its error bar.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Hausdorff {
    pub h: f64,
    pub error_bar: f64,
}

fn directed(a: &BodyMesh, b: &BodyMesh) -> f64 {
    a.samples.par_iter().map(|s| b.distance(s)).reduce(|| 0.0, f64::max)
}

/// `max(sup_a d(a, B), sup_b d(b, A))` over the samples, with exact
/// distances to the opposite body.
pub fn hausdorff(a: &BodyMesh, b: &BodyMesh) -> Result<Hausdorff> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyMesh);
    }
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    let h = directed(a, b).max(directed(b, a));
    Ok(Hausdorff { h, error_bar: a.resolution.max(b.resolution) })
}
