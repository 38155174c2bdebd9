//! Hermitian one-point codes over `F_{q^2}`.
//!
//! The crate builds the codes `C_m` and `C(d,a)` from the rational points of
//! the Hermitian curve `y^q + y = x^{q+1}`, computes their duals and minimum
//! distances, enumerates minimum-weight supports geometrically and checks
//! them against linear-algebra oracles, constructs improving point sets and
//! classifies small-weight supports of dual codes.
//!
//! Modules are layered bottom-up: [`gf`] and [`linalg`] provide exact
//! arithmetic, [`geometry`] the plane and the curve, [`codes`] generic linear
//! codes, and the remaining modules the code family and its analysis.

pub mod cli;
pub mod codes;
pub mod cohomology;
pub mod error;
pub mod geometry;
pub mod gf;
pub mod improve;
pub mod linalg;
pub mod minwords;
pub mod onepoint;
pub mod smallwords;

pub use error::{Error, Result};
