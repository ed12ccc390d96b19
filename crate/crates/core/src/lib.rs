//! Non-loose Legendrian and transverse realizations of negative torus knots.
//!
//! The crate works with the two-chain contact surgery diagrams presenting
//! Legendrian `T(p,-q)` and mechanizes:
//!
//! * [`arith`]: negative continued fractions and torus knot parameters;
//! * [`diagram`]: chains of Legendrian unknots, rotation and stabilization data;
//! * [`invariants`]: `tb`, `rot`, `d3` and the knot Floer bigrading;
//! * [`classify`]: coarse equivalence classes, looseness and transverse classes;
//! * [`floer`]: `HFK^-` of the positive torus knot via its staircase;
//! * [`lens`]: reduction of the surgered diagrams to lens space chains.
//!
//! All arithmetic on derived quantities is exact.

pub mod arith;
pub mod classify;
pub mod diagram;
mod error;
pub mod floer;
pub mod invariants;
pub mod lens;
pub mod linalg;

pub use error::{Error, Result};
