use rand::Rng;

use super::{dot, UnitPoint};
use crate::error::{Error, Result};
use crate::exact::{Rational, Ray};
use crate::polytope::SphericalPolytope;

const DENOM: i64 = 1 << 16;
const ATTEMPTS: usize = 200;

/// Orthonormal basis of the tangent space at `c`.
pub(crate) fn tangent_basis(c: &UnitPoint) -> Vec<Vec<f64>> {
    let n = c.len();
    let mut basis: Vec<Vec<f64>> = vec![c.coords().to_vec()];
    for i in 0..n {
        let mut v = vec![0.0; n];
        v[i] = 1.0;
        for b in &basis {
            let t = dot(&v, b);
            v.iter_mut().zip(b).for_each(|(x, y)| *x -= t * y);
        }
        let nv = dot(&v, &v).sqrt();
        if nv > 1e-8 {
            basis.push(v.into_iter().map(|x| x / nv).collect());
        }
    }
    basis.remove(0);
    basis
}

/// Uniform direction in the cap of geodesic radius `radius` about `c`
/// (uniform in the tangent radius, not in area).
pub fn cap_point<R: Rng>(c: &UnitPoint, radius: f64, rng: &mut R) -> UnitPoint {
    let basis = tangent_basis(c);
    let mut dir: Vec<f64> = basis.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
    while dot(&dir, &dir) < 1e-6 {
        dir = basis.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
    }
    let nd = dot(&dir, &dir).sqrt();
    let r = rng.gen_range(0.0..radius);
    let mut v: Vec<f64> = c.coords().iter().map(|x| x * r.cos()).collect();
    for (b, t) in basis.iter().zip(&dir) {
        v.iter_mut().zip(b).for_each(|(x, y)| *x += r.sin() * t / nd * y);
    }
    UnitPoint::new(v).expect("cap points are nonzero")
}

/// Rational rounding with denominator 2^16.
pub fn rational_ray(u: &UnitPoint) -> Ray {
    let v =
        u.coords().iter().map(|x| Rational::new(((x * DENOM as f64).round() as i64).into(), DENOM.into())).collect();
    Ray::new(v).expect("rounded unit vectors are nonzero")
}

/// A full-dimensional polytope spanned by `vertices` random points of the
/// cap about `center`, resampled until `center` is interior.
pub fn cap_body<R: Rng>(center: &Ray, radius: f64, vertices: usize, rng: &mut R) -> Result<SphericalPolytope> {
    let c = UnitPoint::from_ray(center);
    for _ in 0..ATTEMPTS {
        let pts: Vec<Ray> = (0..vertices).map(|_| rational_ray(&cap_point(&c, radius, rng))).collect();
        let Ok(p) = SphericalPolytope::s_conv(&pts) else { continue };
        if super::check_class(&p, center).is_ok() {
            return Ok(p);
        }
    }
    Err(Error::InvalidParameter(format!("no body with {vertices} vertices found about {center}")))
}
