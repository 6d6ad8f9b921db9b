use num::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::semi_separation_center;
use crate::cone::ConvexCone;
use crate::error::{Error, Result, StarClause};
use crate::exact::{cones_disjoint, dot_i, hemisphericity, Ray};
use crate::polytope::SphericalPolytope;

pub const DEFAULT_CEILING: usize = 12;
pub const MAX_VERTICES_ENV: &str = "SPHERECONVEX_MAX_VERTICES";

/// The enumeration ceiling: `SPHERECONVEX_MAX_VERTICES` if set, else 12.
pub fn enumeration_ceiling() -> Result<usize> {
    match std::env::var(MAX_VERTICES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{MAX_VERTICES_ENV} must be an integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

/// Which side of a partition spans a proper face of the whole hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceWitness {
    Left,
    Right,
    Both,
    None,
}

impl FaceWitness {
    fn from_sides(left: bool, right: bool) -> FaceWitness {
        match (left, right) {
            (true, true) => FaceWitness::Both,
            (true, false) => FaceWitness::Left,
            (false, true) => FaceWitness::Right,
            (false, false) => FaceWitness::None,
        }
    }

    pub fn any(self) -> bool {
        self != FaceWitness::None
    }
}

/// An ordered partition `(I, J)` of the point indices (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionPair {
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    /// The hulls of the two sides do not meet.
    pub disjoint: bool,
    pub face_witness: FaceWitness,
}

impl PartitionPair {
    /// Disjoint hulls and one side a face.
    pub fn is_face_pair(&self) -> bool {
        self.disjoint && self.face_witness.any()
    }
}

/// Partition census of a point list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub m: usize,
    pub pairs: Vec<PartitionPair>,
    /// Absent when the hull is not a full-dimensional polytope.
    pub count_by_face: Option<usize>,
    pub count_by_partition: usize,
}

impl Census {
    pub fn of(points: &[Ray]) -> Result<Census> {
        let pairs = enumerate_partition_pairs(points)?;
        let count_by_partition = pairs.iter().filter(|p| p.is_face_pair()).count();
        let count_by_face = match SphericalPolytope::s_conv(points) {
            Ok(p) if p.is_full_dimensional() => Some(count_face_partition_pairs(&p, CountMode::ByFace)?),
            _ => None,
        };
        Ok(Census { m: points.len(), pairs, count_by_face, count_by_partition })
    }
}

/// Decides "the hull of these points is a proper face of `hull`".
struct FaceOracle<'a> {
    hull: &'a SphericalPolytope,
    // tight[k][f]: point k lies on facet f
    tight: Vec<Vec<bool>>,
    // for each hull vertex, the first matching point index
    vertex_point: Vec<usize>,
}

impl<'a> FaceOracle<'a> {
    fn new(hull: &'a SphericalPolytope, points: &[Ray]) -> Self {
        let tight = points
            .iter()
            .map(|p| hull.facet_normals().iter().map(|f| dot_i(f.primitive(), p.primitive()).is_zero()).collect())
            .collect();
        let vertex_point = hull
            .vertices()
            .iter()
            .map(|v| points.iter().position(|p| p == v).expect("hull vertex is an input point"))
            .collect();
        FaceOracle { hull, tight, vertex_point }
    }

    fn is_face(&self, side: &[usize]) -> bool {
        let nf = self.hull.facet_normals().len();
        let through: Vec<usize> = (0..nf).filter(|&f| side.iter().all(|&k| self.tight[k][f])).collect();
        if through.is_empty() {
            return false;
        }
        self.vertex_point.iter().filter(|&&k| through.iter().all(|&f| self.tight[k][f])).all(|k| side.contains(k))
    }
}

fn sub(points: &[Ray], idx: &[usize]) -> Vec<Ray> {
    idx.iter().map(|&k| points[k].clone()).collect()
}

fn hulls_disjoint(a: &[Ray], b: &[Ray]) -> Result<bool> {
    // a side without a hull has no spherical polytope to separate
    if !hemisphericity(a)?.is_hemispherical() || !hemisphericity(b)?.is_hemispherical() {
        return Ok(false);
    }
    Ok(cones_disjoint(a, b)?.is_disjoint())
}

/// All `2^m − 2` ordered partitions, sorted by `(|I|, I)`.
pub fn enumerate_partition_pairs(points: &[Ray]) -> Result<Vec<PartitionPair>> {
    enumerate_partition_pairs_with_ceiling(points, enumeration_ceiling()?)
}

pub fn enumerate_partition_pairs_with_ceiling(points: &[Ray], ceiling: usize) -> Result<Vec<PartitionPair>> {
    let m = points.len();
    if m < 2 {
        return Err(Error::InvalidParameter("partitions need at least two points".into()));
    }
    if m > ceiling {
        return Err(Error::CeilingExceeded { count: m, ceiling });
    }
    for p in points {
        crate::exact::check_len(points[0].len(), p.len())?;
    }
    let hull = SphericalPolytope::s_conv(points).ok();
    let oracle = hull.as_ref().map(|h| FaceOracle::new(h, points));
    let mut pairs: Vec<PartitionPair> = (1u64..(1 << m) - 1)
        .into_par_iter()
        .map(|mask| {
            let i: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 1).collect();
            let j: Vec<usize> = (0..m).filter(|&k| mask >> k & 1 == 0).collect();
            let disjoint = hulls_disjoint(&sub(points, &i), &sub(points, &j))?;
            let face_witness = match &oracle {
                Some(o) => FaceWitness::from_sides(o.is_face(&i), o.is_face(&j)),
                None => FaceWitness::None,
            };
            Ok(PartitionPair { i, j, disjoint, face_witness })
        })
        .collect::<Result<_>>()?;
    pairs.sort_by(|a, b| (a.i.len(), &a.i).cmp(&(b.i.len(), &b.i)));
    Ok(pairs)
}

/// Face-partition-pair counting semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CountMode {
    /// Two slots per proper face, each validated.
    #[default]
    ByFace,
    /// Ordered vertex partitions with disjoint hulls and a face side.
    ByPartition,
}

impl std::str::FromStr for CountMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CountMode> {
        match s {
            "by-face" | "by_face" => Ok(CountMode::ByFace),
            "by-partition" | "by_partition" => Ok(CountMode::ByPartition),
            _ => Err(Error::InvalidParameter(format!("unknown count mode {s:?}"))),
        }
    }
}

/// `#_f` of a full-dimensional spherical polytope.
pub fn count_face_partition_pairs(p: &SphericalPolytope, mode: CountMode) -> Result<usize> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional { dim: p.dim(), ambient: p.ambient() });
    }
    let verts = p.vertices();
    match mode {
        CountMode::ByFace => {
            // Every slot's two sides cover the vertex set, so one hull
            // recovery check serves all of them. A normal that is zero on the
            // face and positive on the rest separates the cones exactly; the
            // LP is the fallback when it does not.
            if ConvexCone::from_rays(p.cone().len(), verts) != *p.cone() {
                return Ok(0);
            }
            let lattice = p.face_lattice();
            let faces: Vec<&Vec<usize>> = lattice.iter().map(|(_, f)| f).collect();
            let valid = faces
                .par_iter()
                .map(|face| {
                    let rest: Vec<usize> = (0..verts.len()).filter(|k| face.binary_search(k).is_err()).collect();
                    if rest.is_empty() {
                        return Ok(0);
                    }
                    let n = lattice.supporting_normal(p, face);
                    let exposed = verts.iter().enumerate().all(|(k, v)| {
                        let s = dot_i(&n, v.primitive());
                        if face.binary_search(&k).is_ok() {
                            s.is_zero()
                        } else {
                            s.is_positive()
                        }
                    });
                    if exposed || hulls_disjoint(&sub(verts, face), &sub(verts, &rest))? {
                        Ok(2)
                    } else {
                        Ok(0)
                    }
                })
                .collect::<Result<Vec<usize>>>()?;
            Ok(valid.into_iter().sum())
        }
        CountMode::ByPartition => Ok(enumerate_partition_pairs(verts)?.iter().filter(|q| q.is_face_pair()).count()),
    }
}

/// Checks that every pair `(P₁, P₂)` satisfies the partition-pair condition
/// for `p`, then whether each `C(P₁, −P₂)` equals `p°`.
pub fn pairs_same_center(pairs: &[(SphericalPolytope, SphericalPolytope)], p: &SphericalPolytope) -> Result<bool> {
    let polar = p.polar();
    let mut same = true;
    for (k, (p1, p2)) in pairs.iter().enumerate() {
        let claimed: Vec<&Ray> = p1.vertices().iter().chain(p2.vertices()).collect();
        let covers = p.vertices().iter().all(|v| claimed.iter().filter(|c| **c == v).count() == 1)
            && claimed.iter().all(|c| p.vertices().contains(c))
            && claimed.len() == p.vertices().len();
        if !covers {
            return Err(Error::ConditionStarViolated { pair: k, clause: StarClause::Partition });
        }
        if !cones_disjoint(p1.vertices(), p2.vertices())?.is_disjoint() {
            return Err(Error::ConditionStarViolated { pair: k, clause: StarClause::Disjointness });
        }
        let c = semi_separation_center(p1, &p2.neg())?;
        same &= c.cone() == Some(&polar);
    }
    Ok(same)
}
