use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Integer coordinate vector used by the exact algorithms.
pub type IVec = Vec<BigInt>;

/// A point of S^d up to positive scaling: a nonzero rational vector in R^{d+1}.
///
/// Equality is "positive rational multiple". The stored coordinates are kept
/// as given, so [`Ray::dot`] returns the scale-dependent product of exactly
/// those coordinates; only its sign carries meaning.
#[derive(Clone)]
pub struct Ray {
    coords: Vec<Rational>,
    // primitive integer representative: positive multiple of coords, gcd 1
    prim: IVec,
}

impl Ray {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroRay);
        }
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: IVec = coords.iter().map(|c| (c * &lcm).to_integer()).collect();
        let prim = primitive(ints);
        Ok(Ray { coords, prim })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Ray::new(coords.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Builds a ray from an integer vector. Panics on the zero vector.
    pub(crate) fn from_ivec(v: IVec) -> Self {
        let prim = primitive(v);
        assert!(!is_zero_vec(&prim), "zero vector is not a ray");
        let coords = prim.iter().cloned().map(Rational::from_integer).collect();
        Ray { coords, prim }
    }

    /// The i-th standard basis vector of R^{len}.
    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = vec![BigInt::zero(); len];
        v[i] = BigInt::one();
        Ray::from_ivec(v)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Number of stored coordinates, d + 1.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    /// Always false; rays have at least one coordinate.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Sphere dimension d.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// The primitive integer vector pointing in the same direction.
    pub fn primitive(&self) -> &IVec {
        &self.prim
    }

    pub fn dot(&self, other: &Ray) -> Result<Rational> {
        check_len(self.len(), other.len())?;
        Ok(self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum())
    }

    /// Sign of the scalar product, computed on the integer representatives.
    pub fn sign_dot(&self, other: &Ray) -> Result<Ordering> {
        check_len(self.len(), other.len())?;
        Ok(dot_i(&self.prim, &other.prim).cmp(&BigInt::zero()))
    }

    pub fn neg(&self) -> Ray {
        Ray { coords: self.coords.iter().map(|c| -c).collect(), prim: self.prim.iter().map(|c| -c).collect() }
    }

    /// Multiplies the stored coordinates by a positive rational.
    pub fn scaled(&self, factor: &Rational) -> Result<Ray> {
        if !factor.is_positive() {
            return Err(Error::InvalidParameter(format!("scale factor {factor} is not positive")));
        }
        Ok(Ray { coords: self.coords.iter().map(|c| c * factor).collect(), prim: self.prim.clone() })
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Sign-normalized primitive vector (first nonzero coordinate positive).
    /// Identifies the line through the ray; used for hashing only.
    fn line_key(&self) -> (bool, &IVec) {
        let first_negative = self.prim.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        (first_negative, &self.prim)
    }
}

impl PartialEq for Ray {
    fn eq(&self, other: &Self) -> bool {
        self.prim == other.prim
    }
}

impl Eq for Ray {}

impl Hash for Ray {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let (flip, prim) = self.line_key();
        for c in prim {
            if flip {
                (-c).hash(state);
            } else {
                c.hash(state);
            }
        }
    }
}

impl PartialOrd for Ray {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ray {
    fn cmp(&self, other: &Self) -> Ordering {
        self.prim.cmp(&other.prim)
    }
}

impl fmt::Debug for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Serialized as a list of rational strings.
impl serde::Serialize for Ray {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        super::rational::as_string::vec::serialize(&self.coords, s)
    }
}

impl<'de> serde::Deserialize<'de> for Ray {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Ray, D::Error> {
        let coords = super::rational::as_string::vec::deserialize(d)?;
        Ray::new(coords).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

pub(crate) fn dot_i(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub(crate) fn primitive(mut v: IVec) -> IVec {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn dot_examples() {
        let e1 = Ray::basis(2, 0);
        let e2 = Ray::basis(2, 1);
        assert_eq!(e1.dot(&e1).unwrap(), q(1, 1));
        assert_eq!(e1.dot(&e2).unwrap(), q(0, 1));
        let u = Ray::new(vec![q(1, 2), q(1, 3)]).unwrap();
        let v = Ray::new(vec![q(3, 1), q(-3, 1)]).unwrap();
        assert_eq!(u.dot(&v).unwrap(), q(1, 2));
    }

    #[test]
    fn dot_dimension_mismatch() {
        let err = Ray::basis(2, 0).dot(&Ray::basis(3, 0)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 2, found: 3 }));
    }

    #[test]
    fn equality_is_positive_multiple() {
        let a = Ray::new(vec![q(1, 2), q(-1, 3)]).unwrap();
        let b = Ray::from_ints(&[3, -2]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, b.neg());
        assert_eq!(a.primitive(), &vec![BigInt::from(3), BigInt::from(-2)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(Ray::from_ints(&[0, 0]), Err(Error::ZeroRay)));
        assert!(matches!(Ray::new(vec![]), Err(Error::EmptyInput)));
    }
}
