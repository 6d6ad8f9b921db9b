use std::cmp::Ordering;

use num::{BigInt, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{check_len, hemisphericity, GordanCertificate, IVec, Ray};

/// Where a direction sits relative to a finite family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stratum {
    /// In B₀: every point strictly on one side.
    NotCenter,
    /// A separation center with witnessing partition `(i, j)`: `q·Pₖ >= 0` on
    /// `i` and `<= 0` on `j`. `orthogonal` lists the indices with `q·Pₖ = 0`;
    /// when nonempty the direction lies in B_j with j = its length.
    Center { i: Vec<usize>, j: Vec<usize>, orthogonal: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationReport {
    pub query: Ray,
    pub stratum: Stratum,
}

impl SeparationReport {
    pub fn is_center(&self) -> bool {
        matches!(self.stratum, Stratum::Center { .. })
    }

    /// The j of the B_j stratum, if any point is orthogonal to the query.
    pub fn stratum_index(&self) -> Option<usize> {
        match &self.stratum {
            Stratum::Center { orthogonal, .. } if !orthogonal.is_empty() => Some(orthogonal.len()),
            _ => None,
        }
    }

    /// Re-evaluates every sign claim exactly.
    pub fn verify(&self, points: &[Ray]) -> bool {
        let Ok(signs) = signs(points, &self.query) else { return false };
        match &self.stratum {
            Stratum::NotCenter => signs.iter().all(|s| s.is_gt()) || signs.iter().all(|s| s.is_lt()),
            Stratum::Center { i, j, orthogonal } => {
                let mut all: Vec<usize> = i.iter().chain(j).copied().collect();
                all.sort_unstable();
                let zeros: Vec<usize> = (0..signs.len()).filter(|&k| signs[k].is_eq()).collect();
                !i.is_empty()
                    && !j.is_empty()
                    && all == (0..points.len()).collect::<Vec<_>>()
                    && i.iter().all(|&k| !signs[k].is_lt())
                    && j.iter().all(|&k| !signs[k].is_gt())
                    && *orthogonal == zeros
            }
        }
    }
}

fn signs(points: &[Ray], q: &Ray) -> Result<Vec<Ordering>> {
    points.iter().map(|p| q.sign_dot(p)).collect()
}

/// Classifies `q` against `P₁..Pₘ` (m >= 2) by exact signs.
///
/// Zero-dot indices go to `i`, except that one is moved to `j` when `j`
/// would otherwise be empty.
pub fn classify_direction(points: &[Ray], q: &Ray) -> Result<SeparationReport> {
    if points.len() < 2 {
        return Err(Error::InvalidParameter("classification needs at least two points".into()));
    }
    for p in points {
        check_len(q.len(), p.len())?;
    }
    let s = signs(points, q)?;
    if s.iter().all(|x| x.is_gt()) || s.iter().all(|x| x.is_lt()) {
        return Ok(SeparationReport { query: q.clone(), stratum: Stratum::NotCenter });
    }
    let orthogonal: Vec<usize> = (0..s.len()).filter(|&k| s[k].is_eq()).collect();
    let mut i: Vec<usize> = (0..s.len()).filter(|&k| !s[k].is_lt()).collect();
    let mut j: Vec<usize> = (0..s.len()).filter(|&k| s[k].is_lt()).collect();
    if j.is_empty() {
        let last = *orthogonal.last().expect("some sign is zero");
        i.retain(|&k| k != last);
        j.push(last);
    }
    Ok(SeparationReport { query: q.clone(), stratum: Stratum::Center { i, j, orthogonal } })
}

/// Outcome of [`density_check`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityVerdict {
    pub hemispherical: bool,
    /// Radius of the exhibited ball of non-centers (hemispherical case).
    pub ball_radius: Option<f64>,
    pub samples: usize,
    pub confirmed: usize,
    pub pass: bool,
}

const SCALE: f64 = (1u64 << 30) as f64;

fn round_ray(x: &[f64]) -> Option<Ray> {
    let v: IVec = x.iter().map(|c| BigInt::from((c * SCALE).round() as i64)).collect();
    if v.iter().all(|c| c.to_i64() == Some(0)) {
        return None;
    }
    Some(Ray::from_ivec(v))
}

fn unit(v: &[f64]) -> Vec<f64> {
    let n = v.iter().map(|c| c * c).sum::<f64>().sqrt();
    v.iter().map(|c| c / n).collect()
}

fn random_unit(len: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let n2: f64 = v.iter().map(|c| c * c).sum();
        if (1e-6..=1.0).contains(&n2) {
            return unit(&v);
        }
    }
}

fn angle(a: &[f64], b: &[f64]) -> f64 {
    let d: f64 = unit(a).iter().zip(unit(b)).map(|(x, y)| x * y).sum();
    d.clamp(-1.0, 1.0).acos()
}

/// The density dichotomy: a hemispherical family has an open ball of
/// non-centers (around −R for a Gordan witness R), a non-hemispherical one
/// has every direction as a center.
pub fn density_check(points: &[Ray], samples: usize, seed: u64) -> Result<DensityVerdict> {
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    let len = points.first().ok_or(Error::EmptyInput)?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match hemisphericity(points)? {
        GordanCertificate::Witness(r) => {
            let pole = unit(&r.neg().to_f64());
            // every direction closer to -R than its angular gap to each
            // hyperplane P_i^⊥ keeps all signs negative
            let gap = points
                .iter()
                .map(|p| angle(&p.to_f64(), &pole) - std::f64::consts::FRAC_PI_2)
                .fold(f64::INFINITY, f64::min);
            let radius = gap / 2.0;
            let mut confirmed = 0;
            for _ in 0..samples {
                let u = random_unit(len, &mut rng);
                let along: f64 = u.iter().zip(&pole).map(|(a, b)| a * b).sum();
                let tangent: Vec<f64> = u.iter().zip(&pole).map(|(a, b)| a - along * b).collect();
                let tn = tangent.iter().map(|c| c * c).sum::<f64>().sqrt();
                let theta = rng.gen_range(0.0..radius);
                let x: Vec<f64> = if tn < 1e-12 {
                    pole.clone()
                } else {
                    pole.iter().zip(&tangent).map(|(p, t)| p * theta.cos() + t / tn * theta.sin()).collect()
                };
                let Some(q) = round_ray(&x) else { continue };
                if angle(&q.to_f64(), &pole) < gap && !classify_direction(points, &q)?.is_center() {
                    confirmed += 1;
                }
            }
            Ok(DensityVerdict {
                hemispherical: true,
                ball_radius: Some(radius),
                samples,
                confirmed,
                pass: radius > 0.0 && confirmed == samples,
            })
        }
        GordanCertificate::Dependence(_) => {
            let mut confirmed = 0;
            for _ in 0..samples {
                let Some(q) = round_ray(&random_unit(len, &mut rng)) else { continue };
                if classify_direction(points, &q)?.is_center() {
                    confirmed += 1;
                }
            }
            Ok(DensityVerdict {
                hemispherical: false,
                ball_radius: None,
                samples,
                confirmed,
                pass: confirmed == samples,
            })
        }
    }
}
