use std::collections::HashMap;
use std::fmt;

use crate::error::Error;
use crate::exactlin::{binomial_int, BiPoly, Rational};
use crate::fock::{QVector, Sector};
use crate::vertex::{mode, omega, singular_j};

/// A representative of a class in `A(M(1)+)`: an untwisted θ-even vector.
#[derive(Clone, PartialEq, Debug)]
pub struct ZhuElement(QVector);

impl ZhuElement {
    pub fn new(v: QVector) -> Result<Self, Error> {
        if v.sector() != Sector::Untwisted {
            return Err(Error::SectorMismatch { expected: "untwisted", found: v.sector().name() });
        }
        if !v.is_theta_even() {
            return Err(Error::NotThetaEven(v.to_string()));
        }
        Ok(ZhuElement(v))
    }

    pub fn vacuum() -> Self {
        ZhuElement(QVector::vacuum(Sector::Untwisted))
    }

    pub fn omega() -> Self {
        ZhuElement(omega())
    }

    pub fn j() -> Self {
        ZhuElement(singular_j())
    }

    pub fn constant(c: Rational) -> Self {
        ZhuElement(QVector::vacuum(Sector::Untwisted).scale(&c))
    }

    pub fn vector(&self) -> &QVector {
        &self.0
    }

    pub fn into_vector(self) -> QVector {
        self.0
    }

    pub fn add(&self, other: &ZhuElement) -> ZhuElement {
        ZhuElement(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &ZhuElement) -> ZhuElement {
        ZhuElement(&self.0 - &other.0)
    }

    pub fn scale(&self, c: &Rational) -> ZhuElement {
        ZhuElement(self.0.scale(c))
    }

    pub fn star(&self, other: &ZhuElement) -> ZhuElement {
        ZhuElement(star(&self.0, &other.0))
    }

    pub fn circ(&self, other: &ZhuElement) -> ZhuElement {
        ZhuElement(circ(&self.0, &other.0))
    }

    pub fn top_weight(&self) -> Option<u32> {
        self.0.max_weight2().map(|w| w / 2)
    }
}

impl fmt::Display for ZhuElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `Σ_i binom(wt u, i) u_{i+shift} v`, extended linearly over the graded
/// components of `u`.
fn residue_sum(u: &QVector, v: &QVector, shift: i64) -> QVector {
    let mut out = QVector::zero(Sector::Untwisted);
    for (w2, comp) in u.components_by_weight2() {
        let wt = (w2 / 2) as i64;
        for i in 0..=wt {
            let r = mode(&comp, i + shift, v);
            if !r.is_zero() {
                out.add_scaled(&r, &binomial_int(wt, i));
            }
        }
    }
    out
}

/// `u ∗ v = Σ_i binom(wt u, i) u_{i-1} v`.
pub fn star(u: &QVector, v: &QVector) -> QVector {
    residue_sum(u, v, -1)
}

/// `u ∘ v = Σ_i binom(wt u, i) u_{i-2} v`.
pub fn circ(u: &QVector, v: &QVector) -> QVector {
    residue_sum(u, v, -2)
}

/// `Σ_i binom(wt u, i) u_{i-n-2} v`, which lies in `O(V)` for every `n ≥ 0`.
pub fn circ_n(u: &QVector, v: &QVector, n: u32) -> QVector {
    residue_sum(u, v, -(n as i64) - 2)
}

/// Left-associated products `ω^{∗s} ∗ J^{∗t}`, memoized.
#[derive(Default)]
pub struct PolyRepCache {
    reps: HashMap<(u32, u32), QVector>,
}

impl PolyRepCache {
    pub fn new() -> Self {
        PolyRepCache::default()
    }

    pub fn monomial(&mut self, s: u32, t: u32) -> QVector {
        if let Some(v) = self.reps.get(&(s, t)) {
            return v.clone();
        }
        let v = match (s, t) {
            (0, 0) => QVector::vacuum(Sector::Untwisted),
            (s, 0) => star(&self.monomial(s - 1, 0), &omega()),
            (s, t) => star(&self.monomial(s, t - 1), &singular_j()),
        };
        self.reps.insert((s, t), v.clone());
        v
    }

    /// Substitutes `x ↦ [ω]`, `y ↦ [J]`, constants ↦ multiples of the vacuum.
    pub fn rep(&mut self, f: &BiPoly) -> ZhuElement {
        let mut out = QVector::zero(Sector::Untwisted);
        for (s, t, c) in f.terms() {
            out.add_scaled(&self.monomial(s, t), c);
        }
        ZhuElement(out)
    }
}

pub fn poly_rep(f: &BiPoly) -> ZhuElement {
    PolyRepCache::new().rep(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::vertex::virasoro;

    fn vac() -> QVector {
        QVector::vacuum(Sector::Untwisted)
    }

    fn l(n: i64, v: &QVector) -> QVector {
        virasoro(n, v, &int(0)).unwrap()
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&omega(), &vac()), omega());
        let j = singular_j();
        assert_eq!(star(&vac(), &j), j);
        let w = omega();
        // ω∗ω = L(-2)ω + 2L(-1)ω + 2ω... with ω_{i-1}: i=0 L(-2), i=1 L(-1), i=2 L(0)
        let expect = &(&l(-2, &w) + &l(-1, &w).scale(&int(2))) + &l(0, &w);
        assert_eq!(star(&w, &w), expect);
        assert_eq!(l(0, &w), w.scale(&int(2)));
    }

    #[test]
    fn circ_examples() {
        let j = singular_j();
        assert!(circ(&vac(), &j).is_zero());
        let expect = &l(-3, &vac()) + &l(-2, &vac()).scale(&int(2));
        assert_eq!(circ(&omega(), &vac()), expect);
        let expect = &mode(&j, -2, &vac()) + &j.scale(&int(4));
        assert_eq!(circ(&j, &vac()), expect);
    }

    #[test]
    fn poly_rep_examples() {
        assert_eq!(poly_rep(&BiPoly::x()).into_vector(), omega());
        assert_eq!(poly_rep(&BiPoly::one()).into_vector(), vac());
        let xy = &BiPoly::x() * &BiPoly::y();
        let r = poly_rep(&xy);
        assert_eq!(r.vector(), &star(&omega(), &singular_j()));
        assert_eq!(r.top_weight(), Some(6));
    }

    #[test]
    fn star_weight_bound() {
        let w = omega();
        let j = singular_j();
        let ww = star(&w, &w);
        for (a, b) in [(&w, &j), (&j, &w), (&j, &j), (&ww, &j), (&j, &ww), (&ww, &ww)] {
            let bound = a.max_weight2().unwrap() + b.max_weight2().unwrap();
            assert!(star(a, b).max_weight2().unwrap() <= bound);
        }
    }
}
