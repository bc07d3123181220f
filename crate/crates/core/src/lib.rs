//! Exact computations on finite group schemes: convolution algebras, the trace
//! form and its polarities, invariant integrals, Fourier transforms, comodules,
//! block decompositions, and diagonalizable groups.

pub mod blocks;
pub mod comodule;
pub mod descriptor;
pub mod diag;
pub mod dual_trace;
pub mod error;
pub mod group;
pub mod hopf;
pub mod integral;
pub mod linalg;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
