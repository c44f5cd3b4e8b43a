use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::exactlin::{int, rat, BiPoly, UniPoly, Var};
use crate::fock::QVector;
use crate::report::VerificationReport;
use crate::twisted::{published_top_levels, ModuleFamily};
use crate::vertex::singular_j;

use super::ospan::{OMembership, OSpanBasis};
use super::products::{star, PolyRepCache, ZhuElement};

fn x_poly(coeffs: &[(i64, i64)]) -> BiPoly {
    BiPoly::from_x_coeffs(&coeffs.iter().map(|&(n, d)| rat(n, d)).collect::<Vec<_>>())
}

/// `p(x)` with `[J]∗[J] = p([ω]) + q([ω])∗[J]`.
pub fn p_poly() -> BiPoly {
    x_poly(&[(0, 1), (-27, 70), (89, 10), (-212, 5), (1816, 35)])
}

pub fn q_poly() -> BiPoly {
    x_poly(&[(-27, 70), (89, 14), (-314, 35)])
}

/// `y + x - 4x²`, vanishing on the `M(1,λ)` branch.
pub(crate) fn branch_factor() -> BiPoly {
    &x_poly(&[(0, 1), (1, 1), (-4, 1)]) + &BiPoly::y()
}

/// `(x-1)(x-1/16)(x-9/16)`.
pub(crate) fn cubic_factor() -> BiPoly {
    [(1, 1), (1, 16), (9, 16)]
        .iter()
        .fold(BiPoly::one(), |acc, &(n, d)| &acc * &x_poly(&[(-n, d), (1, 1)]))
}

/// `70y + 908x² - 515x + 27`.
pub(crate) fn linear_factor() -> BiPoly {
    &x_poly(&[(27, 1), (-515, 1), (908, 1)]) + &BiPoly::y().scale(&int(70))
}

/// `P = (y + x - 4x²)(70y + 908x² - 515x + 27)`.
pub fn relation_p() -> BiPoly {
    &branch_factor() * &linear_factor()
}

/// `Q = (x-1)(x-1/16)(x-9/16)(y + x - 4x²)`.
pub fn relation_q() -> BiPoly {
    &cubic_factor() * &branch_factor()
}

/// The last factor with a quartic `x` term, `y + x - 4x⁴`.
fn quartic_reading_q() -> BiPoly {
    &cubic_factor() * &(&x_poly(&[(0, 1), (1, 1), (0, 1), (0, 1), (-4, 1)]) + &BiPoly::y())
}

fn at_table_points(f: &BiPoly) -> Vec<(ModuleFamily, UniPoly)> {
    published_top_levels().into_iter().map(|(family, w, j)| (family, f.eval(&w, &j))).collect()
}

fn vanishes_on_table(report: &mut VerificationReport, label: &str, f: &BiPoly) -> bool {
    let mut all = true;
    for (family, value) in at_table_points(f) {
        all &= report.expect_eq(&format!("{label} at {family}"), &value.to_string(), "0");
    }
    all
}

/// Searches for a witness at `cutoff`, `cutoff + 1`, ... up to `max_cutoff`.
/// A miss at every cutoff is inconclusive.
pub(crate) fn certify_membership(
    report: &mut VerificationReport,
    x: &QVector,
    cutoff: u32,
    max_cutoff: u32,
) -> Option<u32> {
    let top = x.max_weight2().map_or(0, |w| w.div_ceil(2));
    for w in cutoff.max(top)..=max_cutoff.max(cutoff) {
        let basis = OSpanBasis::build(w, Default::default());
        match basis.membership(x).expect("θ-even untwisted element within cutoff") {
            OMembership::Witness(witness) => {
                report.note("cutoff", json!(w));
                report.note("witness_terms", json!(witness.terms.len()));
                report.assert("witness reproduces the element", witness.verify(x));
                report.set_witness(json!({"cutoff": w, "terms": witness.to_json()}));
                return Some(w);
            }
            OMembership::NotFound { .. } => continue,
        }
    }
    report.inconclusive("membership", &format!("no witness up to cutoff {}", max_cutoff.max(cutoff)));
    None
}

/// Certifies `J∗J - p(ω) - q(ω)∗J ∈ O(V)` and checks `P` on the table points.
pub fn verify_prop41(cutoff: u32, max_cutoff: u32) -> VerificationReport {
    let mut report = VerificationReport::new("prop41", "J∗J = p(ω) + q(ω)∗J in A(M(1)+)");
    let expanded = &(&(&(&BiPoly::y() * &BiPoly::y()) - &(&q_poly() * &BiPoly::y())) - &p_poly()).scale(&int(70));
    report.expect_eq("70(y² - q y - p) = P", &expanded.to_string(), &relation_p().to_string());
    let mut reps = PolyRepCache::new();
    let j = singular_j();
    let x = &(&star(&j, &j) - reps.rep(&p_poly()).vector()) - &star(reps.rep(&q_poly()).vector(), &j);
    report.expect_value("top weight", json!(x.max_weight2().map(|w| w / 2)), json!(8));
    certify_membership(&mut report, &x, cutoff, max_cutoff);
    vanishes_on_table(&mut report, "P", &relation_p());
    report.finish()
}

/// Certifies `(ω-1)∗(ω-1/16)∗(ω-9/16)∗(J+ω-4ω∗ω) ∈ O(V)` and checks `Q` on
/// the table points.
pub fn verify_prop42(cutoff: u32, max_cutoff: u32) -> VerificationReport {
    let mut report = VerificationReport::new("prop42", "(ω-1)(ω-1/16)(ω-9/16)(J+ω-4ω²) = 0 in A(M(1)+)");
    let x = PolyRepCache::new().rep(&relation_q()).into_vector();
    report.expect_value("top weight", json!(x.max_weight2().map(|w| w / 2)), json!(10));
    certify_membership(&mut report, &x, cutoff, max_cutoff);
    vanishes_on_table(&mut report, "Q", &relation_q());
    let quartic: Vec<Value> = at_table_points(&quartic_reading_q())
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(family, v)| json!({"module": family.to_string(), "value": v.to_string()}))
        .collect();
    report.note(
        "last factor read as J+ω-4ω²; the printed J+ω-4ω⁴ is nonzero at",
        Value::Array(quartic),
    );
    report.finish()
}

/// Reduces `f` modulo `⟨P, Q⟩`: divide by `P` in `y`, write the remainder as
/// `B(x)(y + x - 4x²) + C(x)`, then reduce `B` modulo the cubic factor of `Q`.
pub fn normal_form(f: &BiPoly) -> BiPoly {
    let (_, r) = f.div_rem(&relation_p(), Var::Y).expect("P is monic up to a constant in y");
    let mut b = BiPoly::zero();
    let mut c = BiPoly::zero();
    for (i, j, coeff) in r.terms() {
        match j {
            0 => c.add_term(i, 0, coeff.clone()),
            1 => b.add_term(i, 0, coeff.clone()),
            _ => unreachable!("remainder has y-degree below 2"),
        }
    }
    let c = &c - &(&b * &(&branch_factor() - &BiPoly::y()));
    let (_, b) = b.div_rem(&cubic_factor(), Var::X).expect("cubic factor is monic");
    &(&b * &branch_factor()) + &c
}

/// Finds `f` with `v - poly_rep(f)` in the O-span at the basis cutoff,
/// returned in normal form.
pub fn reduce_with(basis: &OSpanBasis, v: &ZhuElement) -> Result<BiPoly, Error> {
    let w = basis.cutoff();
    let target = basis.to_sparse(v.vector())?;
    let mut reps = PolyRepCache::new();
    let mut quotient = crate::exactlin::EchelonBasis::new(basis.columns().len());
    let mut labels = Vec::new();
    for t in 0..=w / 4 {
        for s in 0..=(w - 4 * t) / 2 {
            let rep = basis.to_sparse(&reps.monomial(s, t))?;
            quotient.insert(&basis.reduce_sparse(&rep).0);
            labels.push((s, t));
        }
    }
    let (residual, _) = basis.reduce_sparse(&target);
    let (rest, combo) = quotient.reduce(&residual);
    if !rest.is_zero() {
        return Err(Error::Inconclusive { cutoff: w });
    }
    let mut f = BiPoly::zero();
    for (label, c) in combo.entries() {
        let (s, t) = labels[*label];
        f.add_term(s, t, c.clone());
    }
    Ok(normal_form(&f))
}

pub fn reduce(v: &ZhuElement, cutoff: u32) -> Result<BiPoly, Error> {
    reduce_with(&OSpanBasis::build(cutoff, Default::default()), v)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ZhuBasisSummary {
    pub cutoff: u32,
    pub truncated_dimension: usize,
    pub o_rank: usize,
    pub quotient_dimension: usize,
    pub monomials: Vec<(u32, u32)>,
    /// Monomials whose images are independent in the quotient, greedily in
    /// `(t, s)` order.
    pub independent: Vec<(u32, u32)>,
    pub spanning: bool,
}

pub fn zhu_basis(cutoff: u32) -> ZhuBasisSummary {
    let basis = OSpanBasis::build(cutoff, Default::default());
    let mut reps = PolyRepCache::new();
    let mut quotient = crate::exactlin::EchelonBasis::new(basis.columns().len());
    let mut monomials = Vec::new();
    let mut independent = Vec::new();
    for t in 0..=cutoff / 4 {
        for s in 0..=(cutoff - 4 * t) / 2 {
            let rep = basis.to_sparse(&reps.monomial(s, t)).expect("rep within cutoff");
            monomials.push((s, t));
            if quotient.insert(&basis.reduce_sparse(&rep).0).1 {
                independent.push((s, t));
            }
        }
    }
    ZhuBasisSummary {
        cutoff,
        truncated_dimension: basis.columns().len(),
        o_rank: basis.rank(),
        quotient_dimension: basis.quotient_dimension(),
        spanning: quotient.rank() == basis.quotient_dimension(),
        monomials,
        independent,
    }
}

pub fn zhu_basis_report(cutoff: u32) -> VerificationReport {
    let mut report = VerificationReport::new("zhu-basis", "A(M(1)+) is spanned by [ω]^s∗[J]^t");
    let summary = zhu_basis(cutoff);
    report.note("truncated dimension", json!(summary.truncated_dimension));
    report.note("O-span rank", json!(summary.o_rank));
    report.note("quotient dimension", json!(summary.quotient_dimension));
    report.note("independent monomials", json!(summary.independent));
    report.assert("images of x^s y^t with 2s+4t ≤ W span the quotient", summary.spanning);
    report.assert("vacuum survives", summary.independent.first() == Some(&(0, 0)));
    report.finish()
}

/// The polynomial `p(x) + q(x) y`.
#[cfg(test)]
fn j_squared() -> BiPoly {
    &p_poly() + &(&q_poly() * &BiPoly::y())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;
    use crate::fock::Sector;
    use crate::vertex::virasoro;

    #[test]
    fn p_is_seventy_times_the_monic_relation() {
        let monic = &(&(&BiPoly::y() * &BiPoly::y()) - &(&q_poly() * &BiPoly::y())) - &p_poly();
        assert_eq!(monic.scale(&int(70)), relation_p());
    }

    #[test]
    fn relations_vanish_on_table() {
        for f in [relation_p(), relation_q()] {
            for (family, v) in at_table_points(&f) {
                assert!(v.is_zero(), "{family}");
            }
        }
        let nonzero: Vec<_> = at_table_points(&quartic_reading_q()).into_iter().filter(|(_, v)| !v.is_zero()).collect();
        assert_eq!(nonzero.len(), 1);
        assert_eq!(nonzero[0].0, ModuleFamily::Lambda);
    }

    #[test]
    fn normal_form_is_idempotent_and_kills_relations() {
        assert!(normal_form(&relation_p()).is_zero());
        assert!(normal_form(&relation_q()).is_zero());
        let y2 = &BiPoly::y() * &BiPoly::y();
        assert_eq!(normal_form(&y2), normal_form(&j_squared()));
        let f = &(&y2 * &BiPoly::x().pow(3)) + &BiPoly::x().pow(7);
        let nf = normal_form(&f);
        assert_eq!(normal_form(&nf), nf);
        assert!(nf.degree_in(Var::Y).unwrap_or(0) <= 1);
    }

    #[test]
    fn reduce_examples() {
        let basis = OSpanBasis::build(9, Default::default());
        assert_eq!(reduce_with(&basis, &ZhuElement::omega()).unwrap(), BiPoly::x());
        assert_eq!(reduce_with(&basis, &ZhuElement::j()).unwrap(), BiPoly::y());
        assert_eq!(reduce_with(&basis, &ZhuElement::vacuum()).unwrap(), BiPoly::one());
        let l3 = virasoro(-3, &QVector::vacuum(Sector::Untwisted), &int(0)).unwrap();
        assert_eq!(reduce_with(&basis, &ZhuElement::new(l3).unwrap()).unwrap(), BiPoly::x().scale(&int(-2)));
        let jj = ZhuElement::j().star(&ZhuElement::j());
        assert_eq!(reduce_with(&basis, &jj).unwrap(), normal_form(&j_squared()));
    }

    #[test]
    fn prop41_certified_at_nine() {
        let r = verify_prop41(9, 9);
        assert!(r.passed(), "{}", r.to_text(true));
        assert!(r.witness.is_some());
    }

    #[test]
    fn prop42_certified_at_eleven() {
        let r = verify_prop42(11, 11);
        assert!(r.passed(), "{}", r.to_text(true));
        assert!(r.witness.is_some());
    }

    #[test]
    fn zhu_basis_examples() {
        let s0 = zhu_basis(0);
        assert_eq!(s0.quotient_dimension, 1);
        assert!(s0.spanning);
        let s4 = zhu_basis(4);
        assert_eq!(s4.monomials, vec![(0, 0), (1, 0), (2, 0), (0, 1)]);
        assert!(s4.spanning);
    }
}
