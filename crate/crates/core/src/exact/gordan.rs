use num::{BigInt, Signed, Zero};

use super::linalg::rat_to_ivec;
use super::lp::{feasible_nonneg, LpOutcome};
use super::ray::check_len;
use super::{Rational, Ray};
use crate::error::{Error, Result};

/// Gordan's alternative for a finite point list `Q₁..Qₘ`: exactly one of
/// the two branches holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GordanCertificate {
    /// `R·Qᵢ > 0` for every i. The set avoids the closed hemisphere H(−R).
    Witness(Ray),
    /// Nonnegative, not all zero, with `Σ λᵢ Qᵢ = 0`.
    Dependence(Vec<Rational>),
}

impl GordanCertificate {
    pub fn is_hemispherical(&self) -> bool {
        matches!(self, GordanCertificate::Witness(_))
    }

    /// Re-checks the certificate against `points` in exact arithmetic.
    pub fn verify(&self, points: &[Ray]) -> bool {
        match self {
            GordanCertificate::Witness(r) => points.iter().all(|q| r.sign_dot(q).is_ok_and(|s| s.is_gt())),
            GordanCertificate::Dependence(lambda) => {
                if lambda.len() != points.len()
                    || lambda.iter().any(Signed::is_negative)
                    || lambda.iter().all(Zero::is_zero)
                {
                    return false;
                }
                let n = points[0].len();
                (0..n).all(|k| {
                    let s: Rational = lambda.iter().zip(points).map(|(l, q)| l * &q.coords()[k]).sum();
                    s.is_zero()
                })
            }
        }
    }
}

/// Outcome of an exact cone-membership query.
#[derive(Clone, Debug)]
pub enum Membership {
    /// `point = Σ λᵢ gᵢ` with `λ >= 0`.
    Inside(Vec<Rational>),
    /// `n·gᵢ >= 0` for every generator and `n·point < 0`.
    Outside(Ray),
}

impl Membership {
    pub fn is_inside(&self) -> bool {
        matches!(self, Membership::Inside(_))
    }
}

/// Outcome of an exact disjointness query between two spherical polytopes.
#[derive(Clone, Debug)]
pub enum Disjointness {
    Disjoint,
    /// A ray lying in both polytopes.
    Common(Ray),
}

impl Disjointness {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, Disjointness::Disjoint)
    }
}

fn common_len(points: &[Ray]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    for p in points {
        check_len(first.len(), p.len())?;
    }
    Ok(first.len())
}

fn columns_as_rows(columns: &[&Ray], n: usize) -> Vec<Vec<Rational>> {
    (0..n).map(|k| columns.iter().map(|c| Rational::from_integer(c.primitive()[k].clone())).collect()).collect()
}

/// Rescales a certificate computed on primitive representatives back to
/// coefficients for the stored coordinates.
fn rescale_to_coords(lambda: Vec<Rational>, points: &[&Ray]) -> Vec<Rational> {
    lambda
        .into_iter()
        .zip(points)
        .map(|(l, p)| {
            // coords = prim * s for a positive rational s; find s from any nonzero entry.
            let k = p.primitive().iter().position(|c| !c.is_zero()).expect("nonzero ray");
            let s = &p.coords()[k] / Rational::from_integer(p.primitive()[k].clone());
            l / s
        })
        .collect()
}

/// Decides whether `points` is hemispherical, with an exact certificate.
///
/// A single point is its own witness.
pub fn hemisphericity(points: &[Ray]) -> Result<GordanCertificate> {
    let n = common_len(points)?;
    if points.len() == 1 {
        return Ok(GordanCertificate::Witness(points[0].clone()));
    }
    let refs: Vec<&Ray> = points.iter().collect();
    let mut rows = columns_as_rows(&refs, n);
    rows.push(vec![Rational::from_integer(1.into()); points.len()]);
    let mut rhs = vec![Rational::zero(); n];
    rhs.push(Rational::from_integer(1.into()));
    match feasible_nonneg(&rows, &rhs) {
        LpOutcome::Feasible(lambda) => {
            let lambda = rescale_to_coords(lambda, &refs);
            Ok(GordanCertificate::Dependence(normalize_coefficients(lambda)))
        }
        LpOutcome::Infeasible(y) => {
            // y = (z, t): z·Qᵢ + t <= 0 and t > 0, hence (-z)·Qᵢ > 0.
            let witness: Vec<Rational> = y[..n].iter().map(|v| -v.clone()).collect();
            Ok(GordanCertificate::Witness(Ray::from_ivec(rat_to_ivec(&witness))))
        }
    }
}

/// Scales nonnegative coefficients to coprime integers, e.g. (1/2, 1/2) to (1, 1).
fn normalize_coefficients(lambda: Vec<Rational>) -> Vec<Rational> {
    let ints: Vec<BigInt> = rat_to_ivec(&lambda);
    ints.into_iter().map(Rational::from_integer).collect()
}

/// Exact membership of `point` in the cone spanned by `generators`.
///
/// `generators` must be hemispherical: the spherical convex hull of a
/// non-hemispherical set is undefined.
pub fn cone_membership(point: &Ray, generators: &[Ray]) -> Result<Membership> {
    let n = common_len(generators)?;
    check_len(n, point.len())?;
    if let GordanCertificate::Dependence(dependence) = hemisphericity(generators)? {
        return Err(Error::NonHemispherical { dependence });
    }
    let refs: Vec<&Ray> = generators.iter().collect();
    let rows = columns_as_rows(&refs, n);
    let rhs: Vec<Rational> = point.coords().to_vec();
    match feasible_nonneg(&rows, &rhs) {
        LpOutcome::Feasible(lambda) => Ok(Membership::Inside(rescale_to_coords(lambda, &refs))),
        LpOutcome::Infeasible(y) => {
            let sep: Vec<Rational> = y.iter().map(|v| -v.clone()).collect();
            Ok(Membership::Outside(Ray::from_ivec(rat_to_ivec(&sep))))
        }
    }
}

/// Whether the spherical polytopes s-conv(a) and s-conv(b) share no point.
///
/// Solves `Σλᵢaᵢ = Σμⱼbⱼ, Σλᵢ = 1, λ, μ >= 0`; a feasible point gives the
/// common ray `Σλᵢaᵢ`.
pub fn cones_disjoint(a: &[Ray], b: &[Ray]) -> Result<Disjointness> {
    let n = common_len(a)?;
    check_len(n, common_len(b)?)?;
    for set in [a, b] {
        if let GordanCertificate::Dependence(dependence) = hemisphericity(set)? {
            return Err(Error::NonHemispherical { dependence });
        }
    }
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            a.iter()
                .map(|r| Rational::from_integer(r.primitive()[k].clone()))
                .chain(b.iter().map(|r| Rational::from_integer(-r.primitive()[k].clone())))
                .collect()
        })
        .collect();
    let mut sum_row = vec![Rational::from_integer(1.into()); a.len()];
    sum_row.extend(std::iter::repeat_n(Rational::zero(), b.len()));
    rows.push(sum_row);
    let mut rhs = vec![Rational::zero(); n];
    rhs.push(Rational::from_integer(1.into()));
    match feasible_nonneg(&rows, &rhs) {
        LpOutcome::Feasible(x) => {
            let common: Vec<Rational> = (0..n)
                .map(|k| a.iter().zip(&x).map(|(r, l)| l * Rational::from_integer(r.primitive()[k].clone())).sum())
                .collect();
            Ok(Disjointness::Common(Ray::from_ivec(rat_to_ivec(&common))))
        }
        LpOutcome::Infeasible(_) => Ok(Disjointness::Disjoint),
    }
}

/// A direction `P` with `P·a > 0` on every generator of `a` and `P·b < 0` on
/// every generator of `b`, if one exists.
///
/// For hemispherical `a`, `b` this exists exactly when the two spherical
/// polytopes are disjoint.
pub fn strict_separator(a: &[Ray], b: &[Ray]) -> Result<Option<Ray>> {
    let n = common_len(a)?;
    check_len(n, common_len(b)?)?;
    let combined: Vec<Ray> = a.iter().cloned().chain(b.iter().map(Ray::neg)).collect();
    match hemisphericity(&combined)? {
        GordanCertificate::Witness(p) => Ok(Some(p)),
        GordanCertificate::Dependence(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ray(v: &[i64]) -> Ray {
        Ray::from_ints(v).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn positive_orthant_is_hemispherical() {
        let pts = [ray(&[1, 0]), ray(&[0, 1])];
        let cert = hemisphericity(&pts).unwrap();
        assert!(cert.is_hemispherical());
        assert!(cert.verify(&pts));
        // Any strictly positive witness is fine; (1,1) is the canonical one.
        if let GordanCertificate::Witness(r) = &cert {
            assert!(r.sign_dot(&ray(&[1, 1])).unwrap().is_gt());
        }
    }

    #[test]
    fn antipodal_pair_has_unit_dependence() {
        let pts = [ray(&[1, 0]), ray(&[-1, 0])];
        assert_eq!(hemisphericity(&pts).unwrap(), GordanCertificate::Dependence(ints(&[1, 1])));
    }

    #[test]
    fn zero_sum_triple() {
        let pts = [ray(&[1, 0, 0]), ray(&[0, 1, 0]), ray(&[-1, -1, 0])];
        let cert = hemisphericity(&pts).unwrap();
        assert_eq!(cert, GordanCertificate::Dependence(ints(&[1, 1, 1])));
        assert!(cert.verify(&pts));
    }

    #[test]
    fn dependence_refers_to_stored_coordinates() {
        let half = Rational::new(1.into(), 2.into());
        let a = Ray::new(vec![half.clone(), Rational::zero()]).unwrap();
        let pts = [a, ray(&[-3, 0])];
        let cert = hemisphericity(&pts).unwrap();
        assert!(cert.verify(&pts));
        assert_eq!(cert, GordanCertificate::Dependence(ints(&[6, 1])));
    }

    #[test]
    fn singleton_is_its_own_witness() {
        let p = ray(&[2, -1, 5]);
        assert_eq!(hemisphericity(std::slice::from_ref(&p)).unwrap(), GordanCertificate::Witness(p));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(hemisphericity(&[]), Err(Error::EmptyInput)));
    }

    #[test]
    fn membership_examples() {
        let gens = [ray(&[1, 0]), ray(&[0, 1])];
        match cone_membership(&ray(&[1, 1]), &gens).unwrap() {
            Membership::Inside(l) => assert_eq!(l, ints(&[1, 1])),
            Membership::Outside(_) => panic!(),
        }
        match cone_membership(&ray(&[-1, 0]), &gens).unwrap() {
            Membership::Outside(n) => {
                assert!(gens.iter().all(|g| !n.sign_dot(g).unwrap().is_lt()));
                assert!(n.sign_dot(&ray(&[-1, 0])).unwrap().is_lt());
            }
            Membership::Inside(_) => panic!(),
        }
    }

    #[test]
    fn membership_rejects_non_hemispherical_generators() {
        let gens = [ray(&[1, 0]), ray(&[-1, 0])];
        assert!(matches!(cone_membership(&ray(&[0, 1]), &gens), Err(Error::NonHemispherical { .. })));
    }

    #[test]
    fn disjointness_examples() {
        assert!(cones_disjoint(&[ray(&[1, 0])], &[ray(&[0, 1])]).unwrap().is_disjoint());
        match cones_disjoint(&[ray(&[1, 0]), ray(&[0, 1])], &[ray(&[1, 1])]).unwrap() {
            Disjointness::Common(c) => assert_eq!(c, ray(&[1, 1])),
            Disjointness::Disjoint => panic!(),
        }
    }

    #[test]
    fn separator_examples() {
        let p = strict_separator(&[ray(&[1, 0])], &[ray(&[0, 1])]).unwrap().unwrap();
        assert!(p.sign_dot(&ray(&[1, 0])).unwrap().is_gt());
        assert!(p.sign_dot(&ray(&[0, 1])).unwrap().is_lt());
        assert!(strict_separator(&[ray(&[1, 0])], &[ray(&[1, 0])]).unwrap().is_none());
    }
}
