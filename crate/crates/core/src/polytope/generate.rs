use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::SphericalPolytope;
use crate::cone::ConvexCone;
use crate::error::{Error, Result};
use crate::exact::{Rational, Ray};

/// Instance families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    /// The positive orthant: e1, ..., e_{d+1}.
    Simplex,
    /// Chart cube with vertices (±1/4, ..., ±1/4).
    Cube,
    /// Moment-curve points, neighbourly for d ≥ 4.
    Cyclic,
    /// Iterated stacking onto facets of a simplex.
    Stacked,
    /// Polar of a random simplicial hull: simple with p facets.
    RandomSimplicialDual,
    /// Hull of p random points of the open chart ball.
    RandomPoints,
}

impl Kind {
    pub const ALL: [Kind; 6] =
        [Kind::Simplex, Kind::Cube, Kind::Cyclic, Kind::Stacked, Kind::RandomSimplicialDual, Kind::RandomPoints];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Simplex => "simplex",
            Kind::Cube => "cube",
            Kind::Cyclic => "cyclic",
            Kind::Stacked => "stacked",
            Kind::RandomSimplicialDual => "random_simplicial_dual",
            Kind::RandomPoints => "random_points",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown polytope kind {s:?}")))
    }
}

const DENOM: i64 = 1 << 16;

fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Chart point x in R^d to the ray (x, 1).
fn lift(x: &[Rational]) -> Ray {
    let mut c = x.to_vec();
    c.push(Rational::one());
    Ray::new(c).expect("last coordinate is one")
}

/// Builds an instance. `p` is the vertex count, except for
/// `random_simplicial_dual` where it is the facet count.
pub fn generate(kind: Kind, d: usize, p: usize, seed: u64) -> Result<SphericalPolytope> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    let need_simplex_count = |what: &str| {
        if p < d + 1 {
            Err(Error::InvalidParameter(format!("{what} needs p >= d + 1 (d = {d}, p = {p})")))
        } else {
            Ok(())
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        Kind::Simplex => {
            if p != d + 1 {
                return Err(Error::InvalidParameter(format!("simplex needs p = d + 1 (d = {d}, p = {p})")));
            }
            SphericalPolytope::s_conv(&(0..=d).map(|i| Ray::basis(d + 1, i)).collect::<Vec<_>>())
        }
        Kind::Cube => {
            if p != 2 * d {
                return Err(Error::InvalidParameter(format!("cube needs p = 2d (d = {d}, p = {p})")));
            }
            let pts: Vec<Ray> = (0..1usize << d)
                .map(|s| {
                    let x: Vec<Rational> =
                        (0..d).map(|b| if s >> b & 1 == 1 { rat(1, 4) } else { rat(-1, 4) }).collect();
                    lift(&x)
                })
                .collect();
            SphericalPolytope::s_conv(&pts)
        }
        Kind::Cyclic => {
            need_simplex_count("cyclic")?;
            let scale = BigInt::one() + BigInt::from(p).pow(d as u32);
            let pts: Vec<Ray> = (1..=p)
                .map(|i| {
                    let x: Vec<Rational> =
                        (1..=d).map(|k| Rational::new(BigInt::from(i).pow(k as u32), scale.clone())).collect();
                    lift(&x)
                })
                .collect();
            SphericalPolytope::s_conv(&pts)
        }
        Kind::Stacked => {
            need_simplex_count("stacked")?;
            stacked(d, p, &mut rng)
        }
        Kind::RandomSimplicialDual => {
            need_simplex_count("random_simplicial_dual")?;
            random_simplicial_dual(d, p, &mut rng)
        }
        Kind::RandomPoints => {
            if p == 0 {
                return Err(Error::InvalidParameter("random_points needs p >= 1".into()));
            }
            let mut pts: Vec<Ray> = Vec::with_capacity(p);
            while pts.len() < p {
                let r = lift(&ball_point(d, &mut rng));
                if !pts.contains(&r) {
                    pts.push(r);
                }
            }
            SphericalPolytope::s_conv(&pts)
        }
    }
}

/// Uniform point of the open unit ball in R^d, coordinates over 2^16.
fn ball_point(d: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    loop {
        let k: Vec<i64> = (0..d).map(|_| rng.gen_range(-DENOM + 1..DENOM)).collect();
        let norm2: i128 = k.iter().map(|&x| (x as i128) * (x as i128)).sum();
        if norm2 < (DENOM as i128) * (DENOM as i128) {
            return k.into_iter().map(|x| rat(x, DENOM)).collect();
        }
    }
}

/// Rounded point near the chart sphere of radius 1/2.
fn near_sphere_point(d: usize, rng: &mut ChaCha8Rng) -> Vec<Rational> {
    loop {
        let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if !(1e-3..=1.0).contains(&n) {
            continue;
        }
        return x.iter().map(|v| rat((v / n * 0.5 * DENOM as f64).round() as i64, DENOM)).collect();
    }
}

fn centroid(points: &[&[Rational]]) -> Vec<Rational> {
    let d = points[0].len();
    let n = Rational::from_integer(points.len().into());
    (0..d).map(|k| points.iter().map(|x| x[k].clone()).sum::<Rational>() / &n).collect()
}

fn stacked(d: usize, p: usize, rng: &mut ChaCha8Rng) -> Result<SphericalPolytope> {
    // simplex centered at the chart origin
    let mut chart: Vec<Vec<Rational>> =
        (0..d).map(|i| (0..d).map(|k| if k == i { rat(1, 4) } else { Rational::zero() }).collect()).collect();
    chart.push(vec![rat(-1, 4); d]);
    while chart.len() < p {
        let rays: Vec<Ray> = chart.iter().map(|x| lift(x)).collect();
        let hull = ConvexCone::from_rays(d + 1, &rays);
        let normals = hull.facets();
        let target = rng.gen_range(0..normals.len());
        let on: Vec<&[Rational]> = rays
            .iter()
            .zip(&chart)
            .filter(|(r, _)| normals[target].dot(r).expect("same length").is_zero())
            .map(|(_, x)| x.as_slice())
            .collect();
        let c_f = centroid(&on);
        let all: Vec<&[Rational]> = chart.iter().map(Vec::as_slice).collect();
        let c_p = centroid(&all);
        let mut t = Rational::one();
        let point = loop {
            let x: Vec<Rational> = c_f.iter().zip(&c_p).map(|(f, c)| f * (Rational::one() + &t) - c * &t).collect();
            let r = lift(&x);
            let ok = normals.iter().enumerate().all(|(i, n)| {
                let s = n.dot(&r).expect("same length");
                if i == target {
                    s.is_negative()
                } else {
                    s.is_positive()
                }
            });
            if ok {
                break x;
            }
            t /= Rational::from_integer(2.into());
        };
        chart.push(point);
    }
    SphericalPolytope::s_conv(&chart.iter().map(|x| lift(x)).collect::<Vec<_>>())
}

fn random_simplicial_dual(d: usize, p: usize, rng: &mut ChaCha8Rng) -> Result<SphericalPolytope> {
    loop {
        let pts: Vec<Ray> = (0..p).map(|_| lift(&near_sphere_point(d, rng))).collect();
        let hull = SphericalPolytope::s_conv(&pts)?;
        if hull.vertices().len() != p || !hull.is_full_dimensional() || !hull.is_simplicial()? {
            continue;
        }
        return hull.polar_polytope();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kind_names_round_trip() {
        for k in Kind::ALL {
            assert_eq!(k.name().parse::<Kind>().unwrap(), k);
        }
        assert!("prism".parse::<Kind>().is_err());
    }

    #[test]
    fn simplex_is_octant() {
        let p = generate(Kind::Simplex, 2, 3, 0).unwrap();
        let octant = SphericalPolytope::s_conv(&[Ray::basis(3, 0), Ray::basis(3, 1), Ray::basis(3, 2)]).unwrap();
        assert_eq!(p, octant);
    }

    #[test]
    fn cube_combinatorics() {
        let p = generate(Kind::Cube, 3, 6, 0).unwrap();
        assert_eq!(p.f_vector(), vec![8, 12, 6]);
        assert!(p.is_simple().unwrap());
        assert!(!p.is_simplicial().unwrap());
        assert!(p.polar_polytope().unwrap().is_simplicial().unwrap());
    }

    #[test]
    fn cyclic_f_vectors() {
        assert_eq!(generate(Kind::Cyclic, 2, 5, 0).unwrap().f_vector(), vec![5, 5]);
        assert_eq!(generate(Kind::Cyclic, 3, 6, 0).unwrap().f_vector(), vec![6, 12, 8]);
        assert_eq!(generate(Kind::Cyclic, 4, 8, 0).unwrap().f_vector(), vec![8, 28, 40, 20]);
    }

    #[test]
    fn stacked_meets_lower_bound() {
        let p = generate(Kind::Stacked, 3, 8, 7).unwrap();
        assert_eq!(p.f_vector(), vec![8, 18, 12]);
        assert!(p.is_simplicial().unwrap());
    }

    #[test]
    fn random_simplicial_dual_is_simple() {
        let p = generate(Kind::RandomSimplicialDual, 3, 7, 3).unwrap();
        assert_eq!(p.facet_normals().len(), 7);
        assert!(p.is_simple().unwrap());
    }

    #[test]
    fn random_points_reproducible() {
        let a = generate(Kind::RandomPoints, 3, 9, 42).unwrap();
        let b = generate(Kind::RandomPoints, 3, 9, 42).unwrap();
        assert_eq!(a.vertices(), b.vertices());
        assert!(a.vertices().iter().all(|v| v.coords()[..3].iter().all(|c| c.denom() <= &BigInt::from(DENOM))));
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(Kind::Cube, 3, 7, 0).is_err());
        assert!(generate(Kind::Cyclic, 4, 4, 0).is_err());
        assert!(generate(Kind::Simplex, 2, 4, 0).is_err());
    }
}
