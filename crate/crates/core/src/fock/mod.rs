//! Partition-indexed bases of the untwisted Fock spaces `M(1,λ)` and the
//! twisted space `M(1)(θ)`, and exact graded vectors over them.
//!
//! Creation indices are stored in half-units: an untwisted part `h(-n)` is
//! stored as `2n`, a twisted part `h(-r)` (r ∈ ½ + ℤ) as the odd integer `2r`.
//! The twisted conformal shift 1/16 is not part of a monomial's weight.

mod basis;
mod columns;
mod monomial;
mod vector;

pub use basis::{basis_up_to, enumerate_basis, graded_dimension};
pub use columns::ColumnBasis;
pub use monomial::{Monomial, Parity, Sector};
pub use vector::{FockVector, PolyVector, QVector};
