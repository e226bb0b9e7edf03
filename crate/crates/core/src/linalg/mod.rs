//! Exact scalar arithmetic and dense linear algebra over ℚ and GF(p).

mod matrix;
mod scalar;

pub use matrix::{fmt_vector, kernel_basis, kron, mat_mul, solve_linear, Echelon, Matrix, Solution};
pub use scalar::{Field, Scalar, MAX_CHARACTERISTIC};
