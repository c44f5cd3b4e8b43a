//! The catalog of named verification checks, in canonical order.

use std::time::Instant;

use serde_json::json;

use crate::error::Error;
use crate::exactlin::{int, rat, Rational};
use crate::fock::{graded_dimension, Monomial, Parity, QVector, Sector};
use crate::par::{self, Exec};
use crate::report::VerificationReport;
use crate::twisted::{
    delta_coefficients, exp_delta, published_top_levels, top_level_table, twisted_mode_apply, twisted_virasoro,
};
use crate::vertex::{
    borcherds_sides, check_singular, heisenberg_mode, mode, omega, operator_identity_on_basis, singular_j,
    truncated_character, virasoro, virasoro_descendant_span,
};
use crate::zhu;

pub const CHECK_IDS: [&str; 16] = [
    "dims",
    "singular",
    "commutators",
    "borcherds",
    "delta",
    "expdelta",
    "twisted",
    "toplevels",
    "decomposition",
    "prop41",
    "prop42",
    "lemma43",
    "appendix-tables",
    "zhu-basis",
    "classify",
    "zhu-invariants",
];

pub const DEFAULT_MAX_WEIGHT: u32 = 11;

pub const PUBLISHED_DIMENSIONS: [usize; 11] = [1, 0, 1, 1, 3, 3, 6, 7, 12, 14, 22];

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub max_weight: u32,
    pub exec: Exec,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { max_weight: DEFAULT_MAX_WEIGHT, exec: Exec::default() }
    }
}

/// Expands `all`, rejects unknown ids, drops duplicates, and sorts into
/// canonical order.
pub fn resolve<S: AsRef<str>>(ids: &[S]) -> Result<Vec<&'static str>, Error> {
    let mut wanted = [false; CHECK_IDS.len()];
    for id in ids {
        let id = id.as_ref();
        if id == "all" {
            wanted = [true; CHECK_IDS.len()];
            continue;
        }
        let pos = CHECK_IDS.iter().position(|c| *c == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
        wanted[pos] = true;
    }
    Ok(CHECK_IDS.iter().zip(wanted).filter(|(_, w)| *w).map(|(c, _)| *c).collect())
}

pub fn run_check(id: &str, config: &CheckConfig) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let w = config.max_weight;
    let mut report = match id {
        "dims" => dims(w),
        "singular" => check_singular(),
        "commutators" => commutators(w.min(6), config.exec),
        "borcherds" => borcherds(w.min(6), config.exec),
        "delta" => delta(),
        "expdelta" => expdelta(),
        "twisted" => twisted(),
        "toplevels" => toplevels(),
        "decomposition" => decomposition(w.min(10)),
        "prop41" => zhu::verify_prop41(w.min(9), w),
        "prop42" => zhu::verify_prop42(w.min(11), w),
        "lemma43" => zhu::verify_lemma43(),
        "appendix-tables" => zhu::verify_appendix(),
        "zhu-basis" => zhu::zhu_basis_report(w),
        "classify" => zhu::classify_report(),
        "zhu-invariants" => zhu::zhu_invariants_report(),
        other => return Err(Error::UnknownCheck(other.to_string())),
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs the checks and returns their reports in the order given.
pub fn run_checks(ids: &[&str], config: &CheckConfig) -> Result<Vec<VerificationReport>, Error> {
    ids.iter().map(|id| run_check(id, config)).collect()
}

fn dims(max_weight: u32) -> VerificationReport {
    let mut report = VerificationReport::new("dims", "graded dimensions of M(1)+");
    let computed: Vec<usize> = (0..=max_weight as i64)
        .map(|m| graded_dimension(Sector::Untwisted, &int(m), Some(Parity::Even)))
        .collect();
    let n = computed.len().min(PUBLISHED_DIMENSIONS.len());
    let row = |d: &[usize]| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    report.expect_eq("dim M(1)+_m", &row(&computed[..n]), &row(&PUBLISHED_DIMENSIONS[..n]));
    if computed.len() > n {
        report.note("beyond the published range", json!(computed[n..]));
    }
    report.finish()
}

fn l(n: i64, v: &QVector) -> QVector {
    virasoro(n, v, &int(0)).expect("untwisted")
}

/// `[L(m), J_n] = (3(m+1) - n) J_{m+n}`, both by direct modes and by the
/// commutator formula.
fn commutators(max_weight: u32, exec: Exec) -> VerificationReport {
    let mut report = VerificationReport::new("commutators", "[L(m), J_n] = (3(m+1) - n) J_{m+n}");
    let j = singular_j();
    let w = omega();
    let pairs: Vec<(i64, i64)> = (-3..=3).flat_map(|m| (-3..=3).map(move |n| (m, n))).collect();
    let outcomes = par::map(exec, &pairs, |&(m, n)| {
        let expected = |v: &QVector| mode(&j, m + n, v).scale(&int(3 * (m + 1) - n));
        let direct = operator_identity_on_basis(max_weight, true, Exec::Sequential, |v| {
            (&l(m, &mode(&j, n, v)) - &mode(&j, n, &l(m, v)), expected(v))
        });
        let formula = operator_identity_on_basis(max_weight, true, Exec::Sequential, |v| {
            (borcherds_sides(&w, &j, m + 1, n, v).1, expected(v))
        });
        (direct, formula)
    });
    let mut failures = 0;
    for (&(m, n), (direct, formula)) in pairs.iter().zip(outcomes) {
        for (how, f) in [("direct", direct), ("commutator formula", formula)] {
            if let Some(f) = f {
                failures += 1;
                report.expect_eq(
                    &format!("[L({m}), J_{n}] on {} ({how})", f.basis_vector),
                    &f.lhs.to_string(),
                    &f.rhs.to_string(),
                );
            }
        }
    }
    report.note("pairs (m, n)", json!(pairs.len()));
    report.note("basis weight bound", json!(max_weight));
    report.assert("all pairs agree on every θ-even basis vector", failures == 0);
    report.finish()
}

fn borcherds(max_weight: u32, exec: Exec) -> VerificationReport {
    let mut report = VerificationReport::new("borcherds", "commutator formula for vertex-operator modes");
    let w = omega();
    let j = singular_j();
    let cases: [(&str, &QVector, &QVector, i64, i64, u32); 4] = [
        ("[ω_2, ω_-2]", &w, &w, 2, -2, max_weight),
        ("[ω_0, J_2]", &w, &j, 0, 2, max_weight),
        ("[J_0, J_1]", &j, &j, 0, 1, max_weight.min(5)),
        ("[J_2, ω_-1]", &j, &w, 2, -1, max_weight.min(5)),
    ];
    for (name, u, v, m, n, cutoff) in cases {
        match operator_identity_on_basis(cutoff, false, exec, |x| borcherds_sides(u, v, m, n, x)) {
            None => {
                report.assert(&format!("{name} on M(1) weight <= {cutoff}"), true);
            }
            Some(f) => {
                report.expect_eq(&format!("{name} on {}", f.basis_vector), &f.lhs.to_string(), &f.rhs.to_string());
            }
        }
    }
    report.finish()
}

fn delta() -> VerificationReport {
    let mut report = VerificationReport::new("delta", "coefficients c_mn of -log((√(1+x)+√(1+y))/2)");
    let c = delta_coefficients(8);
    let published: [(u32, u32, Rational); 15] = [
        (0, 0, int(0)),
        (1, 0, rat(-1, 4)),
        (0, 1, rat(-1, 4)),
        (2, 0, rat(3, 32)),
        (1, 1, rat(1, 16)),
        (0, 2, rat(3, 32)),
        (3, 0, rat(-5, 96)),
        (2, 1, rat(-1, 32)),
        (1, 2, rat(-1, 32)),
        (0, 3, rat(-5, 96)),
        (4, 0, rat(35, 1024)),
        (3, 1, rat(5, 256)),
        (2, 2, rat(9, 512)),
        (1, 3, rat(5, 256)),
        (0, 4, rat(35, 1024)),
    ];
    for (m, n, want) in published {
        report.expect_eq(&format!("c_{m}{n}"), &c.get(m, n).to_string(), &want.to_string());
    }
    // coefficients of h(m)h(n) in Δ_z, pairing c_mn with c_nm
    let combined: [(u32, u32, Rational); 8] = [
        (0, 1, rat(-1, 2)),
        (0, 2, rat(3, 16)),
        (1, 1, rat(1, 16)),
        (0, 3, rat(-5, 48)),
        (1, 2, rat(-1, 16)),
        (0, 4, rat(35, 512)),
        (1, 3, rat(5, 128)),
        (2, 2, rat(9, 512)),
    ];
    for (m, n, want) in combined {
        let got = if m == n { c.get(m, n) } else { c.get(m, n) + c.get(n, m) };
        report.expect_eq(&format!("h({m})h({n}) in Δ_z"), &got.to_string(), &want.to_string());
    }
    let symmetric = (0..=8).all(|m| (0..=8 - m).all(|n| c.get(m, n) == c.get(n, m)));
    report.assert("c_mn = c_nm up to degree 8", symmetric);
    report.finish()
}

fn expdelta() -> VerificationReport {
    let mut report = VerificationReport::new("expdelta", "e^{Δ_z} on 𝟏, ω and J");
    let vac = QVector::vacuum(Sector::Untwisted);
    let e_vac = exp_delta(&vac);
    report.expect_eq("e^Δ 𝟏 at z^0", &e_vac.get(0).map(|v| v.to_string()).unwrap_or_default(), "|0>");
    report.expect_value("e^Δ 𝟏 terms", json!(e_vac.len()), json!(1));
    let e_omega = exp_delta(&omega());
    report.expect_eq("e^Δ ω at z^0", &e_omega.get(0).map(|v| v.to_string()).unwrap_or_default(), &omega().to_string());
    report.expect_eq(
        "e^Δ ω at z^-2",
        &e_omega.get(-2).map(|v| v.to_string()).unwrap_or_default(),
        &vac.scale(&rat(1, 16)).to_string(),
    );
    report.expect_value("e^Δ ω terms", json!(e_omega.len()), json!(2));
    let e_j = exp_delta(&singular_j());
    let h11 = QVector::from_monomial(Monomial::untwisted(&[1, 1]));
    for (exp, want) in [(0, singular_j()), (-2, h11.scale(&rat(3, 4))), (-4, vac.scale(&rat(3, 128)))] {
        report.expect_eq(
            &format!("e^Δ J at z^{exp}"),
            &e_j.get(exp).map(|v| v.to_string()).unwrap_or_default(),
            &want.to_string(),
        );
    }
    report.expect_value("e^Δ J terms", json!(e_j.len()), json!(3));
    report.finish()
}

fn twisted() -> VerificationReport {
    let mut report = VerificationReport::new("twisted", "modes of Y_θ on M(1)(θ)");
    let tvac = QVector::vacuum(Sector::Twisted);
    let thalf = QVector::from_monomial(Monomial::from_halves(Sector::Twisted, &[1]).expect("odd half"));
    let bracket = heisenberg_mode(1, &heisenberg_mode(-1, &tvac, &int(0)).expect("twisted"), &int(0)).expect("twisted");
    report.expect_eq("h(1/2)h(-1/2)|0>", &bracket.to_string(), &tvac.scale(&rat(1, 2)).to_string());
    let cases = [
        ("L(0)|0>", twisted_virasoro(0, &tvac), tvac.scale(&rat(1, 16))),
        ("L(0)h(-1/2)|0>", twisted_virasoro(0, &thalf), thalf.scale(&rat(9, 16))),
        ("J_3|0>", twisted_mode_apply(&singular_j(), 3, &tvac), tvac.scale(&rat(3, 128))),
        ("J_3h(-1/2)|0>", twisted_mode_apply(&singular_j(), 3, &thalf), thalf.scale(&rat(-45, 128))),
    ];
    for (name, got, want) in cases {
        match got {
            Ok(v) => report.expect_eq(name, &v.to_string(), &want.to_string()),
            Err(e) => {
                report.fail(name, &e.to_string());
                false
            }
        };
    }
    // [L(m), L(n)] with c = 1 on the top level and its first excitations
    let vectors = [tvac.clone(), thalf.clone()];
    let mut ok = true;
    for m in -2i64..=2 {
        for n in -2i64..=2 {
            for v in &vectors {
                let lm = |x: &QVector| twisted_virasoro(m, x).expect("twisted");
                let ln = |x: &QVector| twisted_virasoro(n, x).expect("twisted");
                let lhs = &lm(&ln(v)) - &ln(&lm(v));
                let mut rhs = twisted_virasoro(m + n, v).expect("twisted").scale(&int(m - n));
                if m + n == 0 {
                    rhs.add_scaled(v, &rat(m * m * m - m, 12));
                }
                ok &= lhs == rhs;
            }
        }
    }
    report.assert("[L(m), L(n)] = (m-n)L(m+n) + (m³-m)/12 δ on the top levels, |m|,|n| <= 2", ok);
    report.finish()
}

fn toplevels() -> VerificationReport {
    let mut report = VerificationReport::new("toplevels", "action of ω and J on top levels");
    match top_level_table() {
        Ok(rows) => {
            for (row, (family, w, j)) in rows.iter().zip(published_top_levels()) {
                report.expect_eq(&format!("{family} ω"), &row.omega.to_string(), &w.to_string());
                report.expect_eq(&format!("{family} J"), &row.j.to_string(), &j.to_string());
                let neg = -&crate::UniPoly::lambda();
                let even = row.omega.compose(&neg) == row.omega && row.j.compose(&neg) == row.j;
                report.assert(&format!("{family} invariant under λ ↦ -λ"), even);
            }
        }
        Err(e) => report.fail("table", &e.to_string()),
    }
    report.finish()
}

fn decomposition(max_weight: u32) -> VerificationReport {
    let mut report = VerificationReport::new("decomposition", "M(1)+ = L(1,0) ⊕ ⊕ L(1,(2k)²) at bounded weight");
    let character = truncated_character(max_weight as usize);
    let dims: Vec<i64> = (0..=max_weight as i64)
        .map(|m| graded_dimension(Sector::Untwisted, &int(m), Some(Parity::Even)) as i64)
        .collect();
    report.expect_value("truncated character", json!(character), json!(dims));
    let j = singular_j();
    for i in 0..=7 {
        let v = mode(&j, i, &j);
        let weight = 7 - i as u32;
        let contained = v.is_zero() || virasoro_descendant_span(weight).contains(&v);
        report.assert(&format!("J_{i}J in the Virasoro descendants of 𝟏 and J"), contained);
    }
    report.finish()
}
