use num::{BigInt, BigRational, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Parses `"a/b"` or `"a"` with integer `a`, `b` (b nonzero).
///
/// Decimal points, exponents and any other token are rejected so that
/// polytope files stay exact.
pub fn parse_rational(token: &str) -> Result<Rational> {
    let token = token.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let num = parse_integer(num).ok_or_else(|| Error::Parse(format!("not a rational: {token:?}")))?;
    let den = match den {
        Some(d) => parse_integer(d).ok_or_else(|| Error::Parse(format!("not a rational: {token:?}")))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator: {token:?}")));
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Serde adapters writing rationals as `"a/b"` strings.
pub mod as_string {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        parse_rational(&String::deserialize(d)?).map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(|r| r.to_string()).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            Vec::<String>::deserialize(d)?.iter().map(|t| parse_rational(t).map_err(D::Error::custom)).collect()
        }
    }
}
