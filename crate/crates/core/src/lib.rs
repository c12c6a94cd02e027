//! Exact computations for generalized Rota-Baxter systems on bimodules over
//! finite-dimensional associative algebras.
pub mod error;
pub mod linalg;
pub mod algebra;
pub mod rbs;
pub mod loday;
pub mod cohomology;
pub mod yang_baxter;
pub mod deformation;
pub mod homotopy;
pub mod catalog;
pub mod random;
pub mod cli;
pub use error::{Error, Result};
