//! Spherical polytopes as pointed polyhedral cones.

mod chart;
mod generate;
mod lattice;

use std::sync::OnceLock;

use num::{BigInt, Zero};

pub use chart::{central_project, central_unproject, AffinePoint};
pub use generate::{generate, Kind};
pub use lattice::{FaceId, FaceLattice};

use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::{check_len, dot_i, hemisphericity, GordanCertificate, IVec, Ray};

/// s-conv of a finite hemispherical point set: a pointed cone with its
/// irredundant vertex list and facet normals.
///
/// Vertices keep the coordinates they were given with, in input order; the
/// face lattice refers to them by index.
#[derive(Clone, Debug)]
pub struct SphericalPolytope {
    vertices: Vec<Ray>,
    cone: ConvexCone,
    lattice: OnceLock<FaceLattice>,
}

impl SphericalPolytope {
    /// The spherical convex hull. Fails with the Gordan dependence when the
    /// points are not hemispherical.
    pub fn s_conv(points: &[Ray]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        for p in points {
            check_len(first.len(), p.len())?;
        }
        if let GordanCertificate::Dependence(dependence) = hemisphericity(points)? {
            return Err(Error::NonHemispherical { dependence });
        }
        let cone = ConvexCone::from_rays(first.len(), points);
        let mut picked: Vec<usize> = cone
            .rays()
            .iter()
            .map(|r| points.iter().position(|p| p == r).expect("extreme ray comes from the input"))
            .collect();
        picked.sort_unstable();
        let vertices = picked.into_iter().map(|i| points[i].clone()).collect();
        Ok(SphericalPolytope { vertices, cone, lattice: OnceLock::new() })
    }

    /// Wraps a nonempty pointed cone.
    pub fn from_cone(cone: ConvexCone) -> Result<Self> {
        if cone.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !cone.is_pointed() {
            let basis: Vec<Ray> = cone.lineality().to_vec();
            let mut both = basis.clone();
            both.extend(basis.iter().map(Ray::neg));
            let dependence = match hemisphericity(&both)? {
                GordanCertificate::Dependence(d) => d,
                GordanCertificate::Witness(_) => unreachable!("a line is never hemispherical"),
            };
            return Err(Error::NonHemispherical { dependence });
        }
        Ok(SphericalPolytope { vertices: cone.rays().to_vec(), cone, lattice: OnceLock::new() })
    }

    pub fn vertices(&self) -> &[Ray] {
        &self.vertices
    }

    pub fn facet_normals(&self) -> &[Ray] {
        self.cone.facets()
    }

    pub fn cone(&self) -> &ConvexCone {
        &self.cone
    }

    /// Sphere dimension d of the ambient S^d.
    pub fn ambient(&self) -> usize {
        self.cone.len() - 1
    }

    /// Intrinsic dimension: cone dimension minus one.
    pub fn dim(&self) -> usize {
        self.cone.cone_dim() - 1
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient()
    }

    pub fn contains(&self, q: &Ray) -> bool {
        self.cone.contains(q)
    }

    /// The dual cone, a spherical polytope again when `self` is full-dimensional.
    pub fn polar(&self) -> ConvexCone {
        self.cone.polar()
    }

    pub fn polar_polytope(&self) -> Result<SphericalPolytope> {
        SphericalPolytope::from_cone(self.polar())
    }

    /// The antipodal polytope -W, same vertex order.
    pub fn neg(&self) -> SphericalPolytope {
        SphericalPolytope {
            vertices: self.vertices.iter().map(Ray::neg).collect(),
            cone: self.cone.neg(),
            lattice: OnceLock::new(),
        }
    }

    /// Sum of the primitive vertex vectors: strictly positive on every facet
    /// normal, so a relative interior point.
    pub fn interior_point(&self) -> Ray {
        let len = self.cone.len();
        let mut sum: IVec = vec![BigInt::zero(); len];
        for v in &self.vertices {
            for (s, c) in sum.iter_mut().zip(v.primitive()) {
                *s += c;
            }
        }
        Ray::from_ivec(sum)
    }

    /// For each facet normal, the sorted indices of the vertices on it.
    pub fn facet_incidence(&self) -> Vec<Vec<usize>> {
        self.facet_normals()
            .iter()
            .map(|f| {
                (0..self.vertices.len())
                    .filter(|&i| dot_i(f.primitive(), self.vertices[i].primitive()).is_zero())
                    .collect()
            })
            .collect()
    }

    pub fn face_lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| FaceLattice::build(self))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.face_lattice().f_vector()
    }

    fn require_full_dim(&self) -> Result<()> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional { dim: self.dim(), ambient: self.ambient() });
        }
        Ok(())
    }

    /// Every vertex lies in exactly d facets.
    pub fn is_simple(&self) -> Result<bool> {
        self.require_full_dim()?;
        let d = self.ambient();
        let incidence = self.facet_incidence();
        let mut count = vec![0usize; self.vertices.len()];
        for facet in &incidence {
            for &v in facet {
                count[v] += 1;
            }
        }
        Ok(count.iter().all(|&c| c == d))
    }

    /// Every facet has exactly d vertices.
    pub fn is_simplicial(&self) -> Result<bool> {
        self.require_full_dim()?;
        let d = self.ambient();
        Ok(self.facet_incidence().iter().all(|f| f.len() == d))
    }
}

/// Cone equality: same point set on the sphere.
impl PartialEq for SphericalPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.cone == other.cone
    }
}

impl Eq for SphericalPolytope {}

/// Polar of a raw point list, `⋂ H(P)`, without forming the hull first.
pub fn polar_of_points(points: &[Ray]) -> Result<ConvexCone> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    for p in points {
        check_len(first.len(), p.len())?;
    }
    let ineqs: Vec<IVec> = points.iter().map(|p| p.primitive().clone()).collect();
    Ok(ConvexCone::from_inequalities(first.len(), &ineqs, &[]))
}
