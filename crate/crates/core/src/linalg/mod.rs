//! Exact linear algebra over the rationals.

pub mod matrix;
pub mod scalar;
pub mod sign;
pub mod solve;
pub mod tensor;

pub use matrix::{LinearMap, Matrix};
pub use scalar::{fmt_scalar, fmt_vector, parse_scalar, Scalar, Vector};
pub use sign::koszul_sign;
pub use solve::{linear_solve_suite, SolveReport};
pub use tensor::{basis_tuples, multilinear_apply, MultiTensor, Multilinear};
