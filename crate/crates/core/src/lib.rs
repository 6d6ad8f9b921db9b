pub mod bounds;
pub mod cone;
pub mod error;
pub mod exact;
pub mod io;
pub mod mapping;
pub mod metrics;
pub mod polytope;
pub mod separation;
pub mod verify;

pub use error::{Error, Result};
