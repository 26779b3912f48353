//! Exact computations with Clifford-algebra Appell polynomials and the
//! Fueter-Sce extension in odd dimensions.

pub mod appell;
pub mod arith;
pub mod axial;
pub mod cli;
pub mod clifford;
pub mod error;
pub mod fueter;
pub mod polycheck;
pub mod series;
pub mod verify;

pub use arith::Rational;
pub use error::{Error, Result};
