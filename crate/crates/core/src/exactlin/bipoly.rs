use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::unipoly::{monomial_text, write_terms};
use super::{Rational, Scalar};
use crate::error::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    X,
    Y,
}

/// Sparse polynomial in two commuting indeterminates `x`, `y`.
///
/// Keys are exponent pairs `(i, j)` for `x^i y^j`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        BiPoly::term(c, 0, 0)
    }

    pub fn x() -> Self {
        BiPoly::term(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        BiPoly::term(Rational::one(), 0, 1)
    }

    pub fn term(c: Rational, i: u32, j: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(i, j, c);
        p
    }

    /// Polynomial in `x` alone from ascending coefficients.
    pub fn from_x_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = BiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i as u32, 0, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| pick(var, i, j)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn scale(&self, r: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c * r);
        }
        out
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    /// Drops every term of total degree above `degree`.
    pub fn truncate(&self, degree: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&(i, j), _)| i + j <= degree)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// Evaluation in any scalar ring (ℚ or ℚ[λ]).
    pub fn eval<S: Scalar>(&self, x: &S, y: &S) -> S {
        let mut acc = S::zero();
        for (&(i, j), c) in &self.terms {
            let mut t = S::from_rational(c);
            for _ in 0..i {
                t = t.mul_ref(x);
            }
            for _ in 0..j {
                t = t.mul_ref(y);
            }
            acc.add_assign_ref(&t);
        }
        acc
    }

    /// Coefficient of `var^k`, as a polynomial in the other variable.
    fn slice(&self, var: Var, k: u32) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), c) in &self.terms {
            if pick(var, i, j) == k {
                match var {
                    Var::X => out.add_term(0, j, c.clone()),
                    Var::Y => out.add_term(i, 0, c.clone()),
                }
            }
        }
        out
    }

    /// Division with remainder, treating `self` as a polynomial in `var`.
    ///
    /// The divisor's leading coefficient in `var` must be a nonzero constant,
    /// so the division is exact over ℚ[other variable]; the remainder has
    /// `var`-degree strictly below the divisor's.
    pub fn div_rem(&self, divisor: &BiPoly, var: Var) -> Result<(BiPoly, BiPoly), Error> {
        let dd = divisor.degree_in(var).ok_or(Error::DivisionByZero)?;
        let lead = divisor.slice(var, dd);
        let lead = match lead.terms.iter().next() {
            Some((&(0, 0), c)) if lead.len() == 1 => c.clone(),
            _ => return Err(Error::NonConstantLeading),
        };
        let mut quot = BiPoly::zero();
        let mut rem = self.clone();
        while let Some(rd) = rem.degree_in(var) {
            if rd < dd {
                break;
            }
            let top = rem.slice(var, rd).scale(&(Rational::one() / &lead));
            let shift = match var {
                Var::X => BiPoly::term(Rational::one(), rd - dd, 0),
                Var::Y => BiPoly::term(Rational::one(), 0, rd - dd),
            };
            let q = &top * &shift;
            rem = &rem - &(&q * divisor);
            quot = &quot + &q;
        }
        Ok((quot, rem))
    }
}

fn pick(var: Var, i: u32, j: u32) -> u32 {
    match var {
        Var::X => i,
        Var::Y => j,
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for BiPoly {
    /// Terms ordered by descending `y` degree, then descending `x` degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| (b.1, b.0).cmp(&(a.1, a.0)));
        write_terms(
            f,
            keys.into_iter().map(|(i, j)| (self.terms[&(i, j)].clone(), monomial_text(i, j))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};

    fn linear(cx2: i64, cx: i64, c0: i64, cy: i64) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term(2, 0, int(cx2));
        p.add_term(1, 0, int(cx));
        p.add_term(0, 0, int(c0));
        p.add_term(0, 1, int(cy));
        p
    }

    #[test]
    fn factored_product_expands() {
        // (y + x - 4x^2)(70y + 908x^2 - 515x + 27)
        let a = linear(-4, 1, 0, 1);
        let b = linear(908, -515, 27, 70);
        let p = &a * &b;
        assert_eq!(p.coeff(0, 2), int(70));
        assert_eq!(p.coeff(2, 1), int(908 - 280));
        assert_eq!(p.coeff(4, 0), int(-3632));
        assert_eq!(p.coeff(1, 0), int(27));
        assert_eq!(&p * &BiPoly::one(), p);
    }

    #[test]
    fn evaluation_at_table_point() {
        let b = linear(908, -515, 27, 70);
        assert_eq!(b.eval(&int(1), &int(-6)), int(0));
        assert_eq!(b.eval(&rat(1, 16), &rat(3, 128)), int(0));
    }

    #[test]
    fn division_in_y_and_x() {
        let a = linear(-4, 1, 0, 1);
        let b = linear(908, -515, 27, 70);
        let p = &a * &b;
        let (q, r) = p.div_rem(&b, Var::Y).unwrap();
        assert_eq!(q, a);
        assert!(r.is_zero());

        let cubic = &(&BiPoly::x() - &BiPoly::one()) * &(&BiPoly::x() - &BiPoly::constant(rat(1, 16)));
        let f = &(&cubic * &BiPoly::x()) + &BiPoly::constant(int(3));
        let (q, r) = f.div_rem(&cubic, Var::X).unwrap();
        assert_eq!(q, BiPoly::x());
        assert_eq!(r, BiPoly::constant(int(3)));

        assert_eq!(p.div_rem(&BiPoly::zero(), Var::Y), Err(Error::DivisionByZero));
        let xy = &BiPoly::x() * &BiPoly::y();
        assert_eq!(p.div_rem(&xy, Var::X), Err(Error::NonConstantLeading));
    }

    #[test]
    fn display_orders_by_y_then_x() {
        let p = linear(-4, 1, 0, 1);
        assert_eq!(p.to_string(), "y - 4*x^2 + x");
    }
}
