//! Exact scalar arithmetic and linear algebra over the rationals.
//!
//! Everything here is exact: coefficients are arbitrary-precision rationals,
//! polynomials are stored sparsely or densely without rounding, and row
//! reduction preserves row spaces bit-for-bit.

mod bipoly;
mod matrix;
mod rational;
mod scalar;
mod unipoly;

pub use bipoly::{BiPoly, Var};
pub use matrix::{membership, row_reduce, EchelonBasis, ExactMatrix, Membership, RowReduced, SparseVec};
pub use rational::{binomial, binomial_int, int, rat, Rational};
pub use scalar::Scalar;
pub use unipoly::UniPoly;
