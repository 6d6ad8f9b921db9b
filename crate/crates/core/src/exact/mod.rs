//! Exact kernel: rationals, rays, and the linear-programming primitives
//! (Gordan dichotomy, cone membership, disjointness, strict separation).
//!
//! Every predicate here depends only on ray directions. Inputs are never
//! normalized; unit vectors only appear in [`crate::metrics`].

mod gordan;
pub(crate) mod linalg;
mod lp;
mod rational;
mod ray;

pub use gordan::{
    cone_membership, cones_disjoint, hemisphericity, strict_separator, Disjointness, GordanCertificate, Membership,
};
pub use rational::{as_string, parse_rational, Rational};
pub(crate) use ray::{check_len, dot_i, is_zero_vec, primitive};
pub use ray::{IVec, Ray};
