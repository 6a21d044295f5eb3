//! Exact verification of determinant identities for Macdonald's ninth
//! variation of Schur functions, organised around border strip decompositions.

pub mod cli;
pub mod error;
pub mod hring;
pub mod identities;
pub mod random;
pub mod render;
pub mod schur;
pub mod shapes;
pub mod strips;

pub use error::{Error, Result};
