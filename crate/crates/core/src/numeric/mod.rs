//! Exact arithmetic: arbitrary-precision integer matrices and ℚ[√q] scalars.

mod matrix;
mod quad;

pub use matrix::{BigMatrix, MulCounter};
pub use quad::{ratio, QuadExt};
