use serde_json::{json, Value};

use crate::error::Error;
use crate::exactlin::{binomial_int, int, EchelonBasis, Rational, SparseVec};
use crate::fock::{basis_up_to, ColumnBasis, Monomial, Parity, QVector, Sector};
use crate::par::{self, Exec};
use crate::vertex::modes::ModeEngine;

use super::products::circ_n;

/// The spanning element `Σ_i binom(wt u, i) u_{i-n-2} v` of `O(V)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub u: Monomial,
    pub v: Monomial,
    pub n: u32,
}

impl Generator {
    pub fn weight(&self) -> u32 {
        (self.u.weight2() + self.v.weight2()) / 2 + self.n + 1
    }

    pub fn compute(&self) -> QVector {
        circ_n(&QVector::from_monomial(self.u.clone()), &QVector::from_monomial(self.v.clone()), self.n)
    }

    pub fn to_json(&self) -> Value {
        json!({"u": self.u.to_string(), "v": self.v.to_string(), "n": self.n})
    }
}

/// `x = Σ coeff · generator`, with every generator of top weight at most the cutoff.
#[derive(Clone, PartialEq, Debug)]
pub struct Witness {
    pub terms: Vec<(Generator, Rational)>,
}

impl Witness {
    /// Recomputes every generator from scratch and sums the combination.
    pub fn evaluate(&self) -> QVector {
        let mut out = QVector::zero(Sector::Untwisted);
        for (g, c) in &self.terms {
            out.add_scaled(&g.compute(), c);
        }
        out
    }

    pub fn verify(&self, x: &QVector) -> bool {
        &self.evaluate() == x
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(g, c)| json!({"u": g.u.to_string(), "v": g.v.to_string(), "n": g.n, "coeff": c.to_string()}))
                .collect(),
        )
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum OMembership {
    /// A certified combination, re-verified independently of the elimination.
    Witness(Witness),
    /// `x` is not in the span of generators up to the cutoff; says nothing
    /// about membership in `O(V)` itself.
    NotFound { residual: QVector },
}

/// Echelon basis of the span of all generators of top weight `≤ cutoff`,
/// over the θ-even monomials of weight `≤ cutoff`.
pub struct OSpanBasis {
    cutoff: u32,
    columns: ColumnBasis,
    generators: Vec<Generator>,
    echelon: EchelonBasis,
}

/// Generators for a fixed `u`, in `(v, n)` order.
fn generators_for(u: &Monomial, vs: &[Monomial], cutoff: u32) -> Vec<(Generator, QVector)> {
    let wu = (u.weight2() / 2) as i64;
    let zero = int(0);
    let mut engine = ModeEngine::new(u, Sector::Untwisted, &zero);
    let mut out = Vec::new();
    for v in vs {
        let wv = (v.weight2() / 2) as i64;
        let room = cutoff as i64 - wu - wv - 1;
        if room < 0 {
            continue;
        }
        // u_k v for k in [-room-2, wu-2], computed once and shared across n
        let lo = -room - 2;
        let modes: Vec<QVector> = (lo..=wu - 2).map(|k| engine.apply(2 * k, v)).collect();
        for n in 0..=room {
            let mut g = QVector::zero(Sector::Untwisted);
            for i in 0..=wu {
                let m = &modes[(i - n - 2 - lo) as usize];
                if !m.is_zero() {
                    g.add_scaled(m, &binomial_int(wu, i));
                }
            }
            out.push((Generator { u: u.clone(), v: v.clone(), n: n as u32 }, g));
        }
    }
    out
}

impl OSpanBasis {
    pub fn build(cutoff: u32, exec: Exec) -> OSpanBasis {
        let monomials = basis_up_to(Sector::Untwisted, 2 * cutoff, Some(Parity::Even));
        // heaviest monomials first, so each generator pivots on its top component
        let columns = ColumnBasis::new(Sector::Untwisted, monomials.iter().rev().cloned().collect());
        let us: Vec<Monomial> = monomials.iter().filter(|m| !m.is_vacuum()).cloned().collect();
        let batches = par::map(exec, &us, |u| {
            generators_for(u, &monomials, cutoff)
                .into_iter()
                .map(|(g, v)| (g, columns.to_sparse(&v).expect("generators stay in the truncation")))
                .collect::<Vec<_>>()
        });
        let mut echelon = EchelonBasis::new(columns.len());
        let mut generators = Vec::new();
        let mut all: Vec<_> = batches.into_iter().flatten().collect();
        // low-weight generators first keeps the echelon rows short
        all.sort_by_key(|(g, _)| g.weight());
        for (g, v) in all {
            echelon.insert(&v);
            generators.push(g);
        }
        OSpanBasis { cutoff, columns, generators, echelon }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn columns(&self) -> &ColumnBasis {
        &self.columns
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Dimension of the truncated quotient `F_W / (O-span ∩ F_W)`.
    pub fn quotient_dimension(&self) -> usize {
        self.columns.len() - self.rank()
    }

    pub(crate) fn to_sparse(&self, x: &QVector) -> Result<SparseVec, Error> {
        if x.sector() != Sector::Untwisted {
            return Err(Error::SectorMismatch { expected: "untwisted", found: x.sector().name() });
        }
        if !x.is_theta_even() {
            return Err(Error::NotThetaEven(x.to_string()));
        }
        if x.max_weight2().is_some_and(|w| w > 2 * self.cutoff) {
            return Err(Error::BadWeight(format!("{} exceeds cutoff {}", x, self.cutoff)));
        }
        self.columns.to_sparse(x)
    }

    /// Residual of `x` modulo the span, in column coordinates.
    pub(crate) fn reduce_sparse(&self, x: &SparseVec) -> (SparseVec, SparseVec) {
        self.echelon.reduce(x)
    }

    pub fn residual(&self, x: &QVector) -> Result<QVector, Error> {
        let (r, _) = self.reduce_sparse(&self.to_sparse(x)?);
        Ok(self.columns.to_vector(&r))
    }

    pub(crate) fn witness_from(&self, combo: &SparseVec) -> Witness {
        Witness { terms: combo.entries().iter().map(|(l, c)| (self.generators[*l].clone(), c.clone())).collect() }
    }

    pub fn membership(&self, x: &QVector) -> Result<OMembership, Error> {
        let (residual, combo) = self.reduce_sparse(&self.to_sparse(x)?);
        if !residual.is_zero() {
            return Ok(OMembership::NotFound { residual: self.columns.to_vector(&residual) });
        }
        let witness = self.witness_from(&combo);
        assert!(witness.verify(x), "witness does not reproduce the input");
        Ok(OMembership::Witness(witness))
    }
}

pub fn o_span(cutoff: u32) -> OSpanBasis {
    OSpanBasis::build(cutoff, Exec::default())
}

pub fn o_span_with(cutoff: u32, exec: Exec) -> OSpanBasis {
    OSpanBasis::build(cutoff, exec)
}

pub fn in_o(x: &QVector, cutoff: u32) -> Result<OMembership, Error> {
    o_span(cutoff).membership(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex::{omega, singular_j};
    use crate::zhu::products::circ;

    #[test]
    fn circ_products_are_members() {
        let basis = o_span(6);
        let vac = QVector::vacuum(Sector::Untwisted);
        for x in [circ(&omega(), &vac), circ(&singular_j(), &vac), circ(&omega(), &omega())] {
            match basis.membership(&x).unwrap() {
                OMembership::Witness(w) => assert!(w.verify(&x)),
                OMembership::NotFound { .. } => panic!("{x} should be in the span"),
            }
        }
    }

    #[test]
    fn vacuum_is_not_a_member() {
        let basis = o_span(6);
        let vac = QVector::vacuum(Sector::Untwisted);
        assert!(matches!(basis.membership(&vac).unwrap(), OMembership::NotFound { .. }));
        assert!(matches!(basis.membership(&omega()).unwrap(), OMembership::NotFound { .. }));
    }

    #[test]
    fn rejects_odd_and_heavy_inputs() {
        let basis = o_span(4);
        let odd = QVector::from_monomial(Monomial::untwisted(&[1]));
        assert!(matches!(basis.membership(&odd), Err(Error::NotThetaEven(_))));
        let heavy = QVector::from_monomial(Monomial::untwisted(&[5, 1]));
        assert!(matches!(basis.membership(&heavy), Err(Error::BadWeight(_))));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = o_span_with(6, Exec::Sequential);
        let b = o_span_with(6, Exec::Parallel);
        assert_eq!(a.rank(), b.rank());
        assert_eq!(a.echelon.rows(), b.echelon.rows());
    }
}
