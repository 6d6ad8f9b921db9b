//! Polyhedral cones in R^{d+1} with both descriptions, via the double
//! description method in exact integer arithmetic.
//!
//! A cone is `K = cone(rays) + span(lineality)
//!            = {x : f·x >= 0 for facets f, e·x = 0 for equalities e}`.
//! Both descriptions are stored in a canonical form (canonical subspace bases,
//! rays projected orthogonally to the lineality space, facet normals projected
//! into the linear span, each list sorted), so structural equality is cone
//! equality. The polar cone `{y : y·x >= 0 for all x in K}` is a swap of the
//! two descriptions.

use num::{BigInt, Signed, Zero};

use crate::exact::linalg::{canonical_basis, project_out};
use crate::exact::{dot_i, is_zero_vec, primitive};
use crate::exact::{IVec, Ray};

/// A polyhedral convex cone, not necessarily pointed. Its trace on the sphere
/// is a spherical convex set; the zero cone is the empty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexCone {
    len: usize,
    rays: Vec<Ray>,
    lineality: Vec<Ray>,
    facets: Vec<Ray>,
    equalities: Vec<Ray>,
}

impl ConvexCone {
    /// The cone spanned by `rays` plus the linear span of `lineality`.
    pub fn from_generators(len: usize, rays: &[IVec], lineality: &[IVec]) -> Self {
        let (eqs, facets) = double_description(len, rays, lineality);
        let (lin, extreme) = double_description(len, &facets, &eqs);
        Self::assemble(len, extreme, lin, facets, eqs)
    }

    /// The cone `{x : a·x >= 0 for a in ineqs, e·x = 0 for e in eqs}`.
    pub fn from_inequalities(len: usize, ineqs: &[IVec], eqs: &[IVec]) -> Self {
        let (lin, rays) = double_description(len, ineqs, eqs);
        let (equalities, facets) = double_description(len, &rays, &lin);
        Self::assemble(len, rays, lin, facets, equalities)
    }

    /// The cone spanned by a list of rays.
    pub fn from_rays(len: usize, rays: &[Ray]) -> Self {
        let gens: Vec<IVec> = rays.iter().map(|r| r.primitive().clone()).collect();
        Self::from_generators(len, &gens, &[])
    }

    /// The whole space R^{len} (its sphere trace is all of S^d).
    pub fn full(len: usize) -> Self {
        Self::from_inequalities(len, &[], &[])
    }

    /// The zero cone (empty on the sphere).
    pub fn zero(len: usize) -> Self {
        Self::from_generators(len, &[], &[])
    }

    fn assemble(len: usize, rays: Vec<IVec>, lin: Vec<IVec>, facets: Vec<IVec>, eqs: Vec<IVec>) -> Self {
        let lin = canonical_basis(&lin);
        let eqs = canonical_basis(&eqs);
        let rays = canonical_rays(&rays, &lin);
        let facets = canonical_rays(&facets, &eqs);
        let wrap = |v: Vec<IVec>| v.into_iter().map(Ray::from_ivec).collect();
        ConvexCone { len, rays: wrap(rays), lineality: wrap(lin), facets: wrap(facets), equalities: wrap(eqs) }
    }

    /// Number of coordinates, d + 1.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True for the zero cone, whose sphere trace is empty.
    pub fn is_empty(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the cone as a subset of R^{d+1}.
    pub fn cone_dim(&self) -> usize {
        self.len - self.equalities.len()
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Ray] {
        &self.lineality
    }

    pub fn facets(&self) -> &[Ray] {
        &self.facets
    }

    pub fn equalities(&self) -> &[Ray] {
        &self.equalities
    }

    /// The dual cone `{y : y·x >= 0 for all x in self}`.
    pub fn polar(&self) -> ConvexCone {
        ConvexCone {
            len: self.len,
            rays: self.facets.clone(),
            lineality: self.equalities.clone(),
            facets: self.rays.clone(),
            equalities: self.lineality.clone(),
        }
    }

    pub fn neg(&self) -> ConvexCone {
        let neg = |v: &[Ray]| -> Vec<Ray> {
            let mut out: Vec<Ray> = v.iter().map(Ray::neg).collect();
            out.sort();
            out
        };
        // Subspace bases are sign-canonical already; negating them keeps the span.
        ConvexCone {
            len: self.len,
            rays: neg(&self.rays),
            lineality: self.lineality.clone(),
            facets: neg(&self.facets),
            equalities: self.equalities.clone(),
        }
    }

    pub fn intersect(&self, other: &ConvexCone) -> ConvexCone {
        let ineqs: Vec<IVec> = self.facets.iter().chain(&other.facets).map(|r| r.primitive().clone()).collect();
        let eqs: Vec<IVec> = self.equalities.iter().chain(&other.equalities).map(|r| r.primitive().clone()).collect();
        ConvexCone::from_inequalities(self.len, &ineqs, &eqs)
    }

    /// The smallest cone containing both.
    pub fn hull_union(&self, other: &ConvexCone) -> ConvexCone {
        let rays: Vec<IVec> = self.rays.iter().chain(&other.rays).map(|r| r.primitive().clone()).collect();
        let lin: Vec<IVec> = self.lineality.iter().chain(&other.lineality).map(|r| r.primitive().clone()).collect();
        ConvexCone::from_generators(self.len, &rays, &lin)
    }

    pub fn contains_vec(&self, v: &[BigInt]) -> bool {
        self.equalities.iter().all(|e| dot_i(e.primitive(), v).is_zero())
            && self.facets.iter().all(|f| !dot_i(f.primitive(), v).is_negative())
    }

    pub fn contains(&self, q: &Ray) -> bool {
        q.len() == self.len && self.contains_vec(q.primitive())
    }

    /// Whether `q` lies in the relative interior.
    pub fn contains_relint(&self, q: &Ray) -> bool {
        self.contains(q) && self.facets.iter().all(|f| dot_i(f.primitive(), q.primitive()).is_positive())
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &ConvexCone) -> bool {
        other.rays.iter().all(|r| self.contains_vec(r.primitive()))
            && other.lineality.iter().all(|l| {
                let neg: IVec = l.primitive().iter().map(|c| -c).collect();
                self.contains_vec(l.primitive()) && self.contains_vec(&neg)
            })
    }

    /// Equality by mutual inclusion; agrees with `==` on canonical forms.
    pub fn same_set(&self, other: &ConvexCone) -> bool {
        self.len == other.len && self.includes(other) && other.includes(self)
    }
}

fn canonical_rays(rays: &[IVec], lin: &[IVec]) -> Vec<IVec> {
    let mut out: Vec<IVec> = rays.iter().map(|r| primitive(project_out(r, lin))).filter(|r| !is_zero_vec(r)).collect();
    out.sort();
    out.dedup();
    out
}

/// Small fixed-width bitset over constraint indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }

    fn all_below(n: usize, k: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..k {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Minimal V-description of `{x : a·x >= 0 (a in ineqs), e·x = 0 (e in eqs)}`.
///
/// Returns `(lineality basis, extreme rays)`. Rays are extreme modulo the
/// lineality space; adjacency uses the combinatorial test on tight sets.
pub(crate) fn double_description(len: usize, ineqs: &[IVec], eqs: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let mut constraints: Vec<IVec> = Vec::with_capacity(ineqs.len() + 2 * eqs.len());
    for e in eqs {
        constraints.push(e.clone());
        constraints.push(e.iter().map(|c| -c).collect());
    }
    constraints.extend(ineqs.iter().cloned());
    let total = constraints.len();

    let mut lin: Vec<IVec> = (0..len)
        .map(|i| {
            let mut v = vec![BigInt::zero(); len];
            v[i] = BigInt::from(1);
            v
        })
        .collect();
    let mut rays: Vec<(IVec, Bits)> = Vec::new();

    let combine = |alpha: &BigInt, r: &IVec, beta: &BigInt, s: &IVec| -> IVec {
        primitive(r.iter().zip(s).map(|(x, y)| alpha * x - beta * y).collect())
    };

    for (k, a) in constraints.iter().enumerate() {
        if is_zero_vec(a) {
            for (_, z) in rays.iter_mut() {
                z.set(k);
            }
            continue;
        }
        if let Some(idx) = lin.iter().position(|l| !dot_i(a, l).is_zero()) {
            let mut l0 = lin.remove(idx);
            let mut al0 = dot_i(a, &l0);
            if al0.is_negative() {
                l0 = l0.iter().map(|c| -c).collect();
                al0 = -al0;
            }
            lin = lin.iter().map(|l| combine(&al0, l, &dot_i(a, l), &l0)).filter(|l| !is_zero_vec(l)).collect();
            for (r, z) in rays.iter_mut() {
                let ar = dot_i(a, r);
                if !ar.is_zero() {
                    *r = combine(&al0, r, &ar, &l0);
                }
                z.set(k);
            }
            rays.push((l0, Bits::all_below(total, k)));
            continue;
        }

        let signs: Vec<BigInt> = rays.iter().map(|(r, _)| dot_i(a, r)).collect();
        let mut next: Vec<(IVec, Bits)> = Vec::with_capacity(rays.len());
        for (i, (r, z)) in rays.iter().enumerate() {
            if signs[i].is_positive() {
                next.push((r.clone(), z.clone()));
            } else if signs[i].is_zero() {
                let mut z = z.clone();
                z.set(k);
                next.push((r.clone(), z));
            }
        }
        for (i, (p, zp)) in rays.iter().enumerate() {
            if !signs[i].is_positive() {
                continue;
            }
            for (j, (q, zq)) in rays.iter().enumerate() {
                if !signs[j].is_negative() {
                    continue;
                }
                let common = zp.and(zq);
                let adjacent = rays.iter().enumerate().all(|(t, (_, zt))| t == i || t == j || !common.subset_of(zt));
                if adjacent {
                    // (a·p) q - (a·q) p  has a·(..) = 0 and positive coefficients
                    let v = combine(&signs[i], q, &signs[j], p);
                    let mut z = common;
                    z.set(k);
                    next.push((v, z));
                }
            }
        }
        rays = next;
    }

    (lin, rays.into_iter().map(|(r, _)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> IVec {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn ray(v: &[i64]) -> Ray {
        Ray::from_ints(v).unwrap()
    }

    #[test]
    fn orthant_is_self_dual() {
        let oct = ConvexCone::from_generators(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])], &[]);
        assert_eq!(oct.rays().len(), 3);
        assert_eq!(oct.facets(), oct.rays());
        assert_eq!(oct.polar(), oct);
        assert!(oct.is_pointed());
        assert_eq!(oct.cone_dim(), 3);
    }

    #[test]
    fn interior_generator_is_removed() {
        let c = ConvexCone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1]), iv(&[1, 1])], &[]);
        assert_eq!(c.rays(), &[ray(&[0, 1]), ray(&[1, 0])]);
    }

    #[test]
    fn polar_of_single_ray_is_half_plane() {
        let c = ConvexCone::from_generators(2, &[iv(&[1, 0])], &[]);
        let p = c.polar();
        assert!(!p.is_pointed());
        assert_eq!(p.lineality(), &[ray(&[0, 1])]);
        assert_eq!(p.rays(), &[ray(&[1, 0])]);
        assert!(p.contains(&ray(&[0, -1])));
        assert!(p.contains(&ray(&[1, 0])));
        assert!(!p.contains(&ray(&[-1, 1])));
    }

    #[test]
    fn square_cone_has_four_facets() {
        let gens = [iv(&[1, 1, 4]), iv(&[1, -1, 4]), iv(&[-1, 1, 4]), iv(&[-1, -1, 4])];
        let c = ConvexCone::from_generators(3, &gens, &[]);
        assert_eq!(c.rays().len(), 4);
        assert_eq!(c.facets().len(), 4);
        for f in c.facets() {
            let tight = c.rays().iter().filter(|r| dot_i(f.primitive(), r.primitive()).is_zero()).count();
            assert_eq!(tight, 2);
        }
    }

    #[test]
    fn lower_dimensional_cone() {
        // A planar wedge inside R^3.
        let c = ConvexCone::from_generators(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0])], &[]);
        assert_eq!(c.cone_dim(), 2);
        assert_eq!(c.equalities(), &[ray(&[0, 0, 1])]);
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.polar().polar(), c);
    }

    #[test]
    fn full_and_zero() {
        let full = ConvexCone::full(3);
        assert_eq!(full.lineality().len(), 3);
        assert!(full.polar().is_empty());
        assert_eq!(ConvexCone::zero(3).polar(), full);
    }

    #[test]
    fn intersection_of_half_planes() {
        let h1 = ConvexCone::from_inequalities(2, &[iv(&[1, 0])], &[]);
        let h2 = ConvexCone::from_inequalities(2, &[iv(&[0, 1])], &[]);
        let q = h1.intersect(&h2);
        assert_eq!(q.rays(), &[ray(&[0, 1]), ray(&[1, 0])]);
        assert!(q.same_set(&ConvexCone::from_generators(2, &[iv(&[1, 0]), iv(&[0, 1])], &[])));
    }

    #[test]
    fn equality_constraints() {
        let c = ConvexCone::from_inequalities(3, &[iv(&[1, 0, 0]), iv(&[0, 1, 0])], &[iv(&[1, -1, 0])]);
        // x = y >= 0, z free
        assert_eq!(c.lineality(), &[ray(&[0, 0, 1])]);
        assert_eq!(c.rays(), &[ray(&[1, 1, 0])]);
    }
}
