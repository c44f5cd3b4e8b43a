use std::fmt;

use num_traits::{One, Zero};


use super::Rational;

/// Coefficient ring for Fock vectors: either ℚ or ℚ[λ].
///
/// `zero`, `one` and `is_zero` come from `num_traits`.
pub trait Scalar: Clone + PartialEq + Zero + One + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_rational(r: &Rational) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn scale(&self, r: &Rational) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rational) -> Self {
        self * r
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}
