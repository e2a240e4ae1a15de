//! Exact computations on indecomposable polynomials over finite fields and
//! the rationals: functional decomposition, spectra, a discriminant-based
//! reduction criterion, and exact counts of decomposable polynomials.

pub mod algebra;
pub mod census;
pub mod error;

pub use error::{Error, Result};
pub mod decomp;
pub mod guard;
pub mod irred;
pub mod parallel;
pub mod redmod;
pub mod spectrum;
