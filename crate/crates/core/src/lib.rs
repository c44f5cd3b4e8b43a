//! Exact computer algebra for the rank-one free boson vertex operator algebra
//! `M(1)`, its θ-fixed subalgebra `M(1)+`, the untwisted modules `M(1,λ)`, the
//! θ-twisted module `M(1)(θ)`, and Zhu's algebra `A(M(1)+)`.
//!
//! All arithmetic is exact. Relations in Zhu's algebra are certified by
//! explicit membership witnesses in a truncated generating family of `O(V)`.

pub mod checks;
pub mod error;
pub mod exactlin;
pub mod fock;
pub mod par;
pub mod report;
pub mod twisted;
pub mod vertex;
pub mod zhu;

pub use error::Error;
pub use exactlin::{BiPoly, Rational, Scalar, UniPoly};
pub use fock::{FockVector, Monomial, Parity, Sector};
pub use report::{Status, VerificationReport};
