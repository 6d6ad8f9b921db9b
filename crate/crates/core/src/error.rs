use std::fmt;

use crate::exact::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which clause of the partition-pair condition a candidate pair failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarClause {
    /// The two vertex sets do not partition the vertices of the polytope.
    Partition,
    /// The two sub-hulls intersect.
    Disjointness,
}

impl fmt::Display for StarClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StarClause::Partition => f.write_str("vertex sets do not partition the polytope's vertices"),
            StarClause::Disjointness => f.write_str("sub-hulls are not disjoint"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("the zero vector does not represent a ray")]
    ZeroRay,

    #[error("point set is not hemispherical (nonnegative dependence {})", fmt_rationals(.dependence))]
    NonHemispherical { dependence: Vec<Rational> },

    #[error("chart violation: chart·q = {value} is not positive")]
    ChartViolation { value: Rational },

    #[error("polytope is not full-dimensional (dim {dim} in S^{ambient})")]
    NotFullDimensional { dim: usize, ambient: usize },

    #[error("polytope is not simple")]
    NotSimple,

    #[error("polytope is not simplicial")]
    NotSimplicial,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration ceiling exceeded: {count} points, ceiling {ceiling}")]
    CeilingExceeded { count: usize, ceiling: usize },

    #[error("pair {pair} violates the partition-pair condition: {clause}")]
    ConditionStarViolated { pair: usize, clause: StarClause },

    #[error("class violation: {0}")]
    ClassViolation(String),

    #[error("empty mesh")]
    EmptyMesh,

    #[error("domain violation: {0}")]
    DomainViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_rationals(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}
