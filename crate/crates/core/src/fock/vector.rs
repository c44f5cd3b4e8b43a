use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{Monomial, Parity, Sector};
use crate::exactlin::{rat, Rational, Scalar, UniPoly};

/// Exact sparse linear combination of Fock monomials of one sector.
#[derive(Clone, PartialEq, Debug)]
pub struct FockVector<S: Scalar> {
    sector: Sector,
    terms: BTreeMap<Monomial, S>,
}

pub type QVector = FockVector<Rational>;
pub type PolyVector = FockVector<UniPoly>;

impl<S: Scalar> FockVector<S> {
    pub fn zero(sector: Sector) -> Self {
        FockVector { sector, terms: BTreeMap::new() }
    }

    pub fn vacuum(sector: Sector) -> Self {
        Self::from_monomial(Monomial::vacuum(sector))
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, S::one())
    }

    pub fn term(m: Monomial, c: S) -> Self {
        let mut v = Self::zero(m.sector());
        v.add_term(m, c);
        v
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: S) {
        assert_eq!(m.sector(), self.sector, "monomial sector mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign_ref(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        assert_eq!(other.sector, self.sector, "vector sector mismatch");
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.mul_ref(c));
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(other.sector, self.sector, "vector sector mismatch");
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v.clone());
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_coeffs(|c| c.scale(r))
    }

    pub fn scale_by(&self, s: &S) -> Self {
        self.map_coeffs(|c| c.mul_ref(s))
    }

    fn map_coeffs<F: Fn(&S) -> S>(&self, f: F) -> Self {
        let mut out = Self::zero(self.sector);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// The θ involution: each monomial picks up `(-1)^length`.
    pub fn theta(&self) -> Self {
        let mut out = Self::zero(self.sector);
        for (m, c) in &self.terms {
            let c = if m.parity() == Parity::Odd { c.neg() } else { c.clone() };
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn is_theta_even(&self) -> bool {
        self.terms.keys().all(|m| m.parity() == Parity::Even)
    }

    /// Homogeneous components keyed by weight.
    pub fn graded_components(&self) -> BTreeMap<Rational, Self> {
        self.components_by_weight2()
            .into_iter()
            .map(|(w2, v)| (rat(w2 as i64, 2), v))
            .collect()
    }

    /// Homogeneous components keyed by doubled weight.
    pub fn components_by_weight2(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weight2())
                .or_insert_with(|| Self::zero(self.sector))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// Doubled weight if the vector is nonzero and homogeneous.
    pub fn homogeneous_weight2(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(Monomial::weight2);
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    pub fn max_weight2(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::weight2).max()
    }

    /// Multiplies by a creation operator `h(-p/2)`.
    pub(crate) fn create(&self, half: u32) -> Self {
        let mut out = Self::zero(self.sector);
        for (m, c) in &self.terms {
            out.terms.insert(m.with_part(half), c.clone());
        }
        out
    }
}

impl QVector {
    /// Lift a rational vector into ℚ[λ] coefficients.
    pub fn to_poly(&self) -> PolyVector {
        let mut out = PolyVector::zero(self.sector);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), UniPoly::constant(c.clone()));
        }
        out
    }
}

impl<'a, S: Scalar> Add<&'a FockVector<S>> for &'a FockVector<S> {
    type Output = FockVector<S>;
    fn add(self, rhs: &FockVector<S>) -> FockVector<S> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<'a, S: Scalar> Sub<&'a FockVector<S>> for &'a FockVector<S> {
    type Output = FockVector<S>;
    fn sub(self, rhs: &FockVector<S>) -> FockVector<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &S::one().neg());
        out
    }
}

impl<S: Scalar> Neg for &FockVector<S> {
    type Output = FockVector<S>;
    fn neg(self) -> FockVector<S> {
        self.map_coeffs(|c| c.neg())
    }
}

impl<S: Scalar> fmt::Display for FockVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c == S::one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn omega() -> QVector {
        QVector::term(Monomial::untwisted(&[1, 1]), rat(1, 2))
    }

    #[test]
    fn theta_examples() {
        let h1 = QVector::from_monomial(Monomial::untwisted(&[1]));
        assert_eq!(h1.theta(), -&h1);
        let vac = QVector::vacuum(Sector::Untwisted);
        assert_eq!(vac.theta(), vac);
        assert_eq!(omega().theta().theta(), omega());
    }

    #[test]
    fn graded_components_split() {
        let v = &omega() + &QVector::vacuum(Sector::Untwisted);
        let comps = v.graded_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[&int(0)], QVector::vacuum(Sector::Untwisted));
        assert_eq!(comps[&int(2)], omega());
        assert!(QVector::zero(Sector::Untwisted).graded_components().is_empty());
    }

    #[test]
    fn cancellation_drops_terms() {
        let v = &omega() - &omega();
        assert!(v.is_zero());
    }
}
