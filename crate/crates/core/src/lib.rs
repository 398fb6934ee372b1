//! Exact arithmetic toolkit for single-qubit Clifford+T operators.

pub mod error;
pub mod rings;

pub use error::{Error, ErrorClass, Result};
pub mod matrix;
pub mod normal;
pub mod synthesis;
pub mod random;
pub mod residues;
pub mod selftest;
