//! Numerics for hyperbolic surfaces given by Fenchel-Nielsen coordinates.

pub mod bounds;
pub mod conformal;
pub mod error;
pub mod examples;
pub mod fn_space;
pub mod hyperbolic;
pub mod report;
pub mod suites;
pub mod twist;

pub use error::{Error, Result};
