//! Semi-separation center sets, finite-point strata and partition pairs.

mod classify;
mod partition;

pub use classify::{classify_direction, density_check, DensityVerdict, SeparationReport, Stratum};
pub use partition::{
    count_face_partition_pairs, enumerate_partition_pairs, enumerate_partition_pairs_with_ceiling, enumeration_ceiling,
    pairs_same_center, Census, CountMode, FaceWitness, PartitionPair, DEFAULT_CEILING, MAX_VERTICES_ENV,
};

use crate::cone::ConvexCone;
use crate::error::Result;
use crate::exact::check_len;
use crate::polytope::SphericalPolytope;

/// Anything with a cone: polytopes and general convex cones.
pub trait AsCone {
    fn as_cone(&self) -> &ConvexCone;
}

impl AsCone for ConvexCone {
    fn as_cone(&self) -> &ConvexCone {
        self
    }
}

impl AsCone for SphericalPolytope {
    fn as_cone(&self) -> &ConvexCone {
        self.cone()
    }
}

/// `C(W₁, W₂)`, which may be empty on the sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiCenter {
    Empty,
    Cone(ConvexCone),
}

impl SemiCenter {
    fn from_cone(c: ConvexCone) -> SemiCenter {
        if c.is_empty() {
            SemiCenter::Empty
        } else {
            SemiCenter::Cone(c)
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, SemiCenter::Empty)
    }

    pub fn cone(&self) -> Option<&ConvexCone> {
        match self {
            SemiCenter::Empty => None,
            SemiCenter::Cone(c) => Some(c),
        }
    }

    /// The underlying cone, the zero cone when empty.
    pub fn into_cone(self, len: usize) -> ConvexCone {
        match self {
            SemiCenter::Empty => ConvexCone::zero(len),
            SemiCenter::Cone(c) => c,
        }
    }
}

/// `{P : P·q >= 0 on W₁, P·r <= 0 on W₂}`, as the polar of the hull of
/// `W₁ ∪ −W₂`.
pub fn semi_separation_center<A: AsCone + ?Sized, B: AsCone + ?Sized>(w1: &A, w2: &B) -> Result<SemiCenter> {
    let (a, b) = (w1.as_cone(), w2.as_cone());
    check_len(a.len(), b.len())?;
    Ok(SemiCenter::from_cone(a.hull_union(&b.neg()).polar()))
}

/// The same set computed as `W₁° ∩ (−W₂)°`.
pub fn semi_separation_center_direct<A: AsCone + ?Sized, B: AsCone + ?Sized>(w1: &A, w2: &B) -> Result<SemiCenter> {
    let (a, b) = (w1.as_cone(), w2.as_cone());
    check_len(a.len(), b.len())?;
    Ok(SemiCenter::from_cone(a.polar().intersect(&b.neg().polar())))
}

/// The pair `(X°, −X°)`, the largest pair whose semi-separation center is X.
pub fn separation_center_set_of<A: AsCone + ?Sized>(x: &A) -> (ConvexCone, ConvexCone) {
    let polar = x.as_cone().polar();
    let neg = polar.neg();
    (polar, neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Ray;

    fn ray(v: &[i64]) -> Ray {
        Ray::from_ints(v).unwrap()
    }

    fn hull(v: &[&[i64]]) -> SphericalPolytope {
        SphericalPolytope::s_conv(&v.iter().map(|x| ray(x)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn octant_against_its_antipode() {
        let w = hull(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let c = semi_separation_center(&w, &w.neg()).unwrap();
        assert_eq!(c.cone(), Some(&w.polar()));
        assert_eq!(c.cone(), Some(w.cone()));
    }

    #[test]
    fn two_points_on_the_circle() {
        let c = semi_separation_center(&hull(&[&[1, 0]]), &hull(&[&[0, 1]])).unwrap();
        assert_eq!(c.cone(), Some(hull(&[&[1, 0], &[0, -1]]).cone()));
    }

    #[test]
    fn direct_form_agrees() {
        let w1 = hull(&[&[1, 0, 2], &[0, 1, 3]]);
        let w2 = hull(&[&[-1, 1, 1], &[0, -1, 1], &[-2, 0, 1]]);
        assert_eq!(semi_separation_center(&w1, &w2).unwrap(), semi_separation_center_direct(&w1, &w2).unwrap());
    }

    #[test]
    fn overlapping_full_bodies_have_empty_center() {
        let w = hull(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert!(semi_separation_center(&w, &w).unwrap().is_empty());
    }

    #[test]
    fn largest_pair_of_an_arc() {
        let x = hull(&[&[1, 0], &[1, 1]]);
        let (p, n) = separation_center_set_of(&x);
        assert_eq!(p, *hull(&[&[1, -1], &[0, 1]]).cone());
        assert_eq!(semi_separation_center(&p, &n).unwrap().cone(), Some(x.cone()));
    }
}
