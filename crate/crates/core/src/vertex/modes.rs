//! Modes of normal-ordered free-field vertex operators.
//!
//! For `v = h(-n) u` the field is `:∂^{(n-1)}h(z) Y(u,z):`, and
//! `∂^{(n-1)}h(z) = Σ_j binom(-j-1, n-1) h(j) z^{-j-n}`. Taking the
//! coefficient of `z^{-k-1}` gives the recursion
//!
//! ```text
//! (h(-n)u)_k w = Σ_{j<0} c(j) h(j) u_{k-j-n} w + Σ_{j≥0} c(j) u_{k-j-n} h(j) w
//! ```
//!
//! with `c(j) = binom(-j-1, n-1)`. The same recursion evaluates the untwisted
//! operators (integral `j`, `h(0) = λ`) and the twisted `W_θ` operators
//! (`j ∈ ½ + ℤ`). All indices are in half-units so both cases share one path.

use std::collections::HashMap;

use crate::exactlin::{binomial, rat, Rational, Scalar};
use crate::fock::{FockVector, Monomial, QVector, Sector};

/// Memoized evaluator for the modes of one monomial's field.
pub(crate) struct ModeEngine<'a, S: Scalar> {
    halves: Vec<u32>,
    suffix_w2: Vec<i64>,
    sector: Sector,
    lambda: &'a S,
    coeffs: HashMap<(i64, u32), Rational>,
    memo: HashMap<(usize, i64, Monomial), FockVector<S>>,
}

impl<'a, S: Scalar> ModeEngine<'a, S> {
    pub(crate) fn new(v: &Monomial, sector: Sector, lambda: &'a S) -> Self {
        debug_assert_eq!(v.sector(), Sector::Untwisted);
        let halves: Vec<u32> = v.halves().collect();
        let mut suffix_w2 = vec![0i64; halves.len() + 1];
        for d in (0..halves.len()).rev() {
            suffix_w2[d] = suffix_w2[d + 1] + halves[d] as i64;
        }
        ModeEngine { halves, suffix_w2, sector, lambda, coeffs: HashMap::new(), memo: HashMap::new() }
    }

    pub(crate) fn apply(&mut self, k2: i64, w: &Monomial) -> FockVector<S> {
        self.eval(0, k2, w)
    }

    /// `binom(-j-1, n-1)` for `j = j2/2`.
    fn coeff(&mut self, j2: i64, n: u32) -> Rational {
        self.coeffs
            .entry((j2, n))
            .or_insert_with(|| binomial(&rat(-j2 - 2, 2), n - 1))
            .clone()
    }

    /// Mode `k2/2` of the field of `halves[d..]`, applied to `w`.
    fn eval(&mut self, d: usize, k2: i64, w: &Monomial) -> FockVector<S> {
        if d == self.halves.len() {
            return if k2 == -2 { FockVector::from_monomial(w.clone()) } else { FockVector::zero(self.sector) };
        }
        let result_w2 = w.weight2() as i64 + self.suffix_w2[d] - k2 - 2;
        if result_w2 < 0 {
            return FockVector::zero(self.sector);
        }
        let key = (d, k2, w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let n2 = self.halves[d] as i64;
        let n = (n2 / 2) as u32;
        let mut out = FockVector::zero(self.sector);

        // creation part, j < 0
        let sector = self.sector;
        for j2 in (-result_w2..=-1).filter(|&j| sector.admits(j)) {
            let c = self.coeff(j2, n);
            if c == Rational::from_integer(0.into()) {
                continue;
            }
            let inner = self.eval(d + 1, k2 - j2 - n2, w);
            if !inner.is_zero() {
                out.add_scaled(&inner.create((-j2) as u32), &S::from_rational(&c));
            }
        }

        // annihilation part, j > 0
        for (p, mult) in w.distinct_halves() {
            let j2 = p as i64;
            let c = self.coeff(j2, n);
            let (_, rest) = w.without_part(p).expect("part present");
            let inner = self.eval(d + 1, k2 - j2 - n2, &rest);
            if !inner.is_zero() {
                let factor = c * rat(j2 * mult as i64, 2);
                out.add_scaled(&inner, &S::from_rational(&factor));
            }
        }

        // zero mode acts as λ
        if self.sector == Sector::Untwisted && !self.lambda.is_zero() {
            let c = self.coeff(0, n);
            let inner = self.eval(d + 1, k2 - n2, w);
            if !inner.is_zero() {
                out.add_scaled(&inner, &self.lambda.scale(&c));
            }
        }

        self.memo.insert(key, out.clone());
        out
    }
}

/// Applies the `k2/2`-th mode of the normal-ordered field of the untwisted
/// vector `v` to `w`, in `w`'s sector. Linear in both `v` and `w`.
pub(crate) fn field_mode<S: Scalar>(v: &QVector, k2: i64, w: &FockVector<S>, lambda: &S) -> FockVector<S> {
    let sector = w.sector();
    let mut out = FockVector::zero(sector);
    for (vm, vc) in v.terms() {
        let mut engine = ModeEngine::new(vm, sector, lambda);
        for (wm, wc) in w.terms() {
            let r = engine.eval(0, k2, wm);
            if !r.is_zero() {
                out.add_scaled(&r, &wc.scale(vc));
            }
        }
    }
    out
}
