//! Exact structure-constant computations for Hopf-Galois extensions.
//!
//! Everything is finite dimensional over ℚ or a prime field F_p and all
//! identities are decided by exact linear algebra.

pub mod algebra;
pub mod cleft;
pub mod cohomology;
pub mod commands;
pub mod comodule;
pub mod convcat;
pub mod endomorphism;
pub mod error;
pub mod fixtures;
pub mod galois;
pub mod hopf;
pub mod io;
pub mod lifting;
pub mod maintheorem;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod search;
pub mod tensor;

pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use scalar::{Field, Scalar};
