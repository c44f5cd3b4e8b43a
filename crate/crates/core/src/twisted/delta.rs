use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exactlin::{binomial, int, rat, BiPoly, Rational};
use crate::fock::{QVector, Sector};
use crate::vertex::heisenberg_mode;

/// Coefficients `c_{mn}` of `-log(((1+x)^{1/2} + (1+y)^{1/2}) / 2)` up to a total degree.
#[derive(Clone, PartialEq, Debug)]
pub struct DeltaCoefficients {
    degree: u32,
    series: BiPoly,
}

impl DeltaCoefficients {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `c_{mn}`; panics if `m + n` exceeds the computed degree.
    pub fn get(&self, m: u32, n: u32) -> Rational {
        assert!(m + n <= self.degree, "c_{{{m}{n}}} beyond computed degree {}", self.degree);
        self.series.coeff(m, n)
    }

    pub fn series(&self) -> &BiPoly {
        &self.series
    }
}

/// Exact power-series pipeline: binomial series for the square roots,
/// averaged, then composed with `-log(1 + u)`, truncated at total degree `n`.
pub fn delta_coefficients(degree: u32) -> DeltaCoefficients {
    let half = rat(1, 2);
    let mut u = BiPoly::zero();
    for k in 1..=degree {
        let a = binomial(&half, k) * &half;
        u.add_term(k, 0, a.clone());
        u.add_term(0, k, a);
    }
    let mut series = BiPoly::zero();
    let mut power = BiPoly::one();
    for j in 1..=degree {
        power = (&power * &u).truncate(degree);
        let sign = if j % 2 == 1 { Rational::one() } else { -Rational::one() };
        // -log(1+u) = Σ (-1)^j u^j / j
        series = &series - &power.scale(&(sign / int(j as i64)));
    }
    DeltaCoefficients { degree, series }
}

/// Finite Laurent polynomial in `z` with Fock-vector coefficients,
/// keyed by the exponent of `z` (always ≤ 0 here).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct LaurentFockVector {
    terms: BTreeMap<i64, QVector>,
}

impl LaurentFockVector {
    /// `v z^0`.
    pub fn from_vector(v: &QVector) -> Self {
        let mut out = LaurentFockVector::default();
        out.add(0, v);
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &QVector)> {
        self.terms.iter().rev().map(|(e, v)| (*e, v))
    }

    pub fn get(&self, exponent: i64) -> Option<&QVector> {
        self.terms.get(&exponent)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&mut self, exponent: i64, v: &QVector) {
        if v.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(|| QVector::zero(v.sector()));
        slot.add_assign(v);
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }
}

impl fmt::Display for LaurentFockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, v)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if e == 0 {
                write!(f, "[{v}]")?;
            } else {
                write!(f, "[{v}] z^{e}")?;
            }
        }
        Ok(())
    }
}

/// One application of `Δ_z = Σ_{m,n≥1} c_{mn} h(m)h(n) z^{-m-n}` (λ = 0, so
/// the `h(0)` terms vanish).
fn apply_delta(v: &LaurentFockVector, c: &DeltaCoefficients) -> LaurentFockVector {
    let zero = int(0);
    let mut out = LaurentFockVector::default();
    for (exp, vec) in v.terms() {
        let top = vec.max_weight2().unwrap_or(0) / 2;
        for m in 1..top {
            for n in 1..=(top - m) {
                let cmn = c.get(m, n);
                if cmn.is_zero() {
                    continue;
                }
                let inner = heisenberg_mode(2 * n as i64, vec, &zero).expect("untwisted");
                if inner.is_zero() {
                    continue;
                }
                let both = heisenberg_mode(2 * m as i64, &inner, &zero).expect("untwisted");
                out.add(exp - (m + n) as i64, &both.scale(&cmn));
            }
        }
    }
    out
}

/// One application of `Δ_z`.
pub fn delta_z(v: &LaurentFockVector) -> LaurentFockVector {
    let top = v.terms().filter_map(|(_, x)| x.max_weight2()).max().unwrap_or(0) / 2;
    apply_delta(v, &delta_coefficients(top.max(1)))
}

/// `e^{Δ_z} v` for `v ∈ M(1)`. The series terminates since each `Δ_z`
/// removes two creation factors.
pub fn exp_delta(v: &QVector) -> LaurentFockVector {
    assert_eq!(v.sector(), Sector::Untwisted, "e^Δ acts on M(1)");
    let top = v.max_weight2().unwrap_or(0) / 2;
    let c = delta_coefficients(top.max(1));
    let mut result = LaurentFockVector::from_vector(v);
    let mut term = result.clone();
    let mut k = 1i64;
    while !term.is_empty() {
        term = apply_delta(&term, &c);
        for (e, x) in term.terms() {
            result.add(e, &x.scale(&(Rational::one() / factorial(k))));
        }
        k += 1;
    }
    result
}

fn factorial(k: i64) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(i))
}
