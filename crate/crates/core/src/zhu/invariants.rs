use std::collections::BTreeMap;

use serde_json::json;

use num_traits::Zero;

use crate::exactlin::{binomial, int, Rational};
use crate::fock::{QVector, Sector};
use crate::report::VerificationReport;
use crate::vertex::{mode, omega, singular_j, virasoro};

use super::ospan::{OMembership, OSpanBasis};
use super::products::star;

/// O-span bases keyed by cutoff, built on first use.
#[derive(Default)]
pub struct OSpanCache {
    bases: BTreeMap<u32, OSpanBasis>,
}

impl OSpanCache {
    pub fn new() -> Self {
        OSpanCache::default()
    }

    pub fn get(&mut self, cutoff: u32) -> &OSpanBasis {
        self.bases.entry(cutoff).or_insert_with(|| OSpanBasis::build(cutoff, Default::default()))
    }

    /// Whether `x` has a verified witness at `cutoff`.
    pub fn contains(&mut self, x: &QVector, cutoff: u32) -> bool {
        match self.get(cutoff).membership(x) {
            Ok(OMembership::Witness(w)) => w.verify(x),
            _ => false,
        }
    }
}

/// `Res_z (1+z)^{wt v - 1} z^{-1} Y(v, z) u = Σ_i binom(wt v - 1, i) v_{i-1} u`.
pub fn skew_residue(v: &QVector, u: &QVector) -> QVector {
    let mut out = QVector::zero(Sector::Untwisted);
    let wu = u.max_weight2().map_or(0, |w2| w2 / 2) as i64;
    for (w2, comp) in v.components_by_weight2() {
        let wv = (w2 / 2) as i64;
        // v_{i-1}u = 0 once i - 1 ≥ wt u + wt v
        for i in 0..=(wu + wv) {
            let c = binomial(&int(wv - 1), i as u32);
            if !c.is_zero() {
                out.add_scaled(&mode(&comp, i - 1, u), &c);
            }
        }
    }
    out
}

fn l(n: i64, v: &QVector) -> QVector {
    virasoro(n, v, &int(0)).expect("untwisted")
}

/// `L(-n)v - (-1)^n {(n-1)(L(-2) + L(-1)) + L(0)} v`.
pub fn virasoro_relation(n: u32, v: &QVector) -> QVector {
    let n_i = n as i64;
    let bracket = &(&(&l(-2, v) + &l(-1, v)).scale(&int(n_i - 1)) + &l(0, v));
    let sign: Rational = int(if n % 2 == 0 { 1 } else { -1 });
    &l(-n_i, v) - &bracket.scale(&sign)
}

pub fn zhu_invariants_report() -> VerificationReport {
    let mut report =
        VerificationReport::new("zhu-invariants", "centrality of [ω], skew symmetry, L(-n) relations, associativity");
    let mut cache = OSpanCache::new();
    let w = omega();
    let j = singular_j();
    let vac = QVector::vacuum(Sector::Untwisted);
    let wj = star(&w, &j);

    for (name, v) in [("J", &j), ("ω∗J", &wj)] {
        let x = &star(&w, v) - &star(v, &w);
        report.assert(&format!("ω∗{name} - {name}∗ω in O-span(11)"), cache.contains(&x, 11));
    }

    for (un, u) in [("ω", &w), ("J", &j)] {
        for (vn, v) in [("ω", &w), ("J", &j)] {
            let x = &star(u, v) - &skew_residue(v, u);
            let cutoff = x.max_weight2().map_or(0, |w2| w2 / 2);
            report.assert(&format!("{un}∗{vn} skew rule"), cache.contains(&x, cutoff.max(1)));
        }
    }

    for (vn, v, wt) in [("1", &vac, 0u32), ("ω", &w, 2), ("J", &j, 4)] {
        for n in 1..=3 {
            let x = virasoro_relation(n, v);
            report.assert(&format!("L(-{n}) relation on {vn}"), cache.contains(&x, wt + n + 2));
        }
    }

    let gens = [("ω", &w), ("J", &j)];
    let mut triples = 0;
    for (an, a) in gens {
        for (bn, b) in gens {
            for (cn, c) in gens {
                let x = &star(&star(a, b), c) - &star(a, &star(b, c));
                report.assert(&format!("({an}∗{bn})∗{cn} = {an}∗({bn}∗{cn}) mod O-span(13)"), cache.contains(&x, 13));
                triples += 1;
            }
        }
    }
    report.note("associativity triples", json!(triples));
    report.finish()
}
