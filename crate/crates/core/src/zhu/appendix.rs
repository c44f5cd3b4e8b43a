use serde::Serialize;
use serde_json::{json, Value};

use crate::exactlin::{int, row_reduce, ExactMatrix, Rational};
use crate::fock::{enumerate_basis, ColumnBasis, Monomial, Parity, QVector, Sector};
use crate::report::VerificationReport;
use crate::vertex::{mode, virasoro};

const E_BASIS: [&[u32]; 7] = [&[6, 1], &[5, 2], &[4, 3], &[4, 1, 1, 1], &[3, 2, 1, 1], &[2, 2, 2, 1], &[2, 1, 1, 1, 1, 1]];

const F_BASIS: [&[u32]; 14] = [
    &[8, 1],
    &[7, 2],
    &[6, 3],
    &[6, 1, 1, 1],
    &[5, 4],
    &[5, 2, 1, 1],
    &[4, 3, 1, 1],
    &[4, 2, 2, 1],
    &[4, 1, 1, 1, 1, 1],
    &[3, 3, 2, 1],
    &[3, 2, 2, 2],
    &[3, 2, 1, 1, 1, 1],
    &[2, 2, 2, 1, 1, 1],
    &[2, 1, 1, 1, 1, 1, 1, 1],
];

const G_BASIS: [&[u32]; 22] = [
    &[9, 1],
    &[8, 2],
    &[7, 3],
    &[7, 1, 1, 1],
    &[6, 4],
    &[6, 2, 1, 1],
    &[5, 5],
    &[5, 3, 1, 1],
    &[5, 2, 2, 1],
    &[5, 1, 1, 1, 1, 1],
    &[4, 4, 1, 1],
    &[4, 3, 2, 1],
    &[4, 2, 2, 2],
    &[4, 2, 1, 1, 1, 1],
    &[3, 3, 3, 1],
    &[3, 3, 2, 2],
    &[3, 3, 1, 1, 1, 1],
    &[3, 2, 2, 1, 1, 1],
    &[3, 1, 1, 1, 1, 1, 1, 1],
    &[2, 2, 2, 2, 1, 1],
    &[2, 2, 1, 1, 1, 1, 1, 1],
    &[1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
];

/// Rows `L(-1)f_1..f_14`, `L(-3)e_1..e_7`, `h(-1)^4_{-3}h(-1)^4` over `g_1..g_22`.
const TABLE: [(&str, [i64; 22]); 22] = [
    ("L(-1)f1", [8, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f2", [0, 7, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f3", [0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f4", [0, 0, 0, 6, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f5", [0, 0, 0, 0, 5, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f6", [0, 0, 0, 0, 0, 5, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f7", [0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 3, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f8", [0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 4, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f9", [0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f10", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 2, 1, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f11", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 6, 0, 0, 0, 0, 0, 0]),
    ("L(-1)f12", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 2, 4, 0, 0, 0, 0]),
    ("L(-1)f13", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 3, 0, 0]),
    ("L(-1)f14", [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 7, 0]),
    ("L(-3)e1", [6, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-3)e2", [0, 5, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-3)e3", [0, 0, 4, 0, 3, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-3)e4", [0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 3, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]),
    ("L(-3)e5", [0, 0, 0, 0, 0, 3, 0, 2, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0]),
    ("L(-3)e6", [0, 0, 0, 0, 0, 0, 0, 0, 6, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0]),
    ("L(-3)e7", [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 1, 0]),
    ("h(-1)^4_{-3}h(-1)^4", [96, 0, 0, 144, 0, 144, 0, 144, 0, 48, 72, 0, 0, 96, 0, 0, 48, 48, 4, 0, 6, 0]),
];

fn vector(parts: &[u32]) -> QVector {
    QVector::from_monomial(Monomial::untwisted(parts))
}

fn g_columns() -> ColumnBasis {
    ColumnBasis::new(Sector::Untwisted, G_BASIS.iter().map(|p| Monomial::untwisted(p)).collect())
}

pub fn quartic_mode_vector() -> QVector {
    let v = vector(&[1, 1, 1, 1]);
    mode(&v, -3, &v)
}

/// The displayed 11-term expansion of `h(-1)^4_{-3}h(-1)^4 𝟏`.
pub fn published_quartic_expansion() -> QVector {
    let terms: [(i64, &[u32]); 11] = [
        (96, &[9, 1]),
        (144, &[7, 1, 1, 1]),
        (144, &[6, 2, 1, 1]),
        (144, &[5, 3, 1, 1]),
        (72, &[4, 4, 1, 1]),
        (48, &[5, 1, 1, 1, 1, 1]),
        (96, &[4, 2, 1, 1, 1, 1]),
        (48, &[3, 3, 1, 1, 1, 1]),
        (48, &[3, 2, 2, 1, 1, 1]),
        (4, &[3, 1, 1, 1, 1, 1, 1, 1]),
        (6, &[2, 2, 1, 1, 1, 1, 1, 1]),
    ];
    let mut out = QVector::zero(Sector::Untwisted);
    for (c, parts) in terms {
        out.add_term(Monomial::untwisted(parts), int(c));
    }
    out
}

/// The 22 vectors of the tables, computed from first principles.
pub fn appendix_rows() -> Vec<(String, QVector)> {
    let zero = int(0);
    let mut rows = Vec::new();
    for (i, f) in F_BASIS.iter().enumerate() {
        rows.push((format!("L(-1)f{}", i + 1), virasoro(-1, &vector(f), &zero).expect("untwisted")));
    }
    for (i, e) in E_BASIS.iter().enumerate() {
        rows.push((format!("L(-3)e{}", i + 1), virasoro(-3, &vector(e), &zero).expect("untwisted")));
    }
    rows.push(("h(-1)^4_{-3}h(-1)^4".to_string(), quartic_mode_vector()));
    rows
}

/// The published tables as `(row label, coefficients over g_1..g_22)`.
pub fn published_tables() -> Vec<(String, Vec<Rational>)> {
    TABLE.iter().map(|(label, row)| (label.to_string(), row.iter().map(|&c| int(c)).collect())).collect()
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct AppendixRanks {
    pub dimension: usize,
    pub table_rank: usize,
    pub avoids_h1_power: bool,
    pub rank_with_l2_power: usize,
}

pub fn lemma_ranks() -> AppendixRanks {
    let columns = g_columns();
    let rows: Vec<_> =
        appendix_rows().iter().map(|(_, v)| columns.to_sparse(v).expect("weight 10 θ-even")).collect();
    let h1 = columns.position(&Monomial::untwisted(&[1; 10])).expect("g22");
    let table = row_reduce(&ExactMatrix::new(columns.len(), rows.clone()).expect("row width"));
    let avoids = table.reduced.rows().iter().all(|r| r.get(h1) == int(0));

    let zero = int(0);
    let mut l2 = QVector::vacuum(Sector::Untwisted);
    for _ in 0..5 {
        l2 = virasoro(-2, &l2, &zero).expect("untwisted");
    }
    let mut extended = rows;
    extended.push(columns.to_sparse(&l2).expect("weight 10 θ-even"));
    let full = row_reduce(&ExactMatrix::new(columns.len(), extended).expect("row width"));
    AppendixRanks { dimension: columns.len(), table_rank: table.rank, avoids_h1_power: avoids, rank_with_l2_power: full.rank }
}

fn coordinates(columns: &ColumnBasis, v: &QVector) -> Vec<Rational> {
    columns.to_sparse(v).expect("weight 10 θ-even").to_dense(columns.len())
}

/// Entrywise differences between computed and published table rows.
fn table_diff() -> Vec<Value> {
    let columns = g_columns();
    let mut diff = Vec::new();
    for ((label, v), (_, published)) in appendix_rows().iter().zip(published_tables()) {
        for (k, (got, want)) in coordinates(&columns, v).iter().zip(&published).enumerate() {
            if got != want {
                diff.push(json!({
                    "row": label,
                    "column": format!("g{}", k + 1),
                    "computed": got.to_string(),
                    "published": want.to_string(),
                }));
            }
        }
    }
    diff
}

fn record_ranks(report: &mut VerificationReport, ranks: &AppendixRanks) {
    report.expect_value("dim M(1)+_10", json!(ranks.dimension), json!(22));
    report.expect_value("rank of the 22 table vectors", json!(ranks.table_rank), json!(21));
    report.assert("h(-1)^10 absent from their span", ranks.avoids_h1_power);
    report.expect_value("rank with L(-2)^5", json!(ranks.rank_with_l2_power), json!(22));
}

pub fn verify_appendix() -> VerificationReport {
    let mut report = VerificationReport::new("appendix-tables", "tables of L(-1)f_i, L(-3)e_j in the g-basis");
    let basis_ok = enumerate_basis(Sector::Untwisted, &int(10), Some(Parity::Even)) == g_columns().monomials();
    report.assert("g_1..g_22 is the canonical weight-10 basis", basis_ok);
    report.expect_eq(
        "h(-1)^4_{-3}h(-1)^4",
        &quartic_mode_vector().to_string(),
        &published_quartic_expansion().to_string(),
    );
    report.diff_value("table entries differing from the published tables", Value::Array(table_diff()), json!([]));
    record_ranks(&mut report, &lemma_ranks());
    report.finish()
}

pub fn verify_lemma43() -> VerificationReport {
    let mut report =
        VerificationReport::new("lemma43", "L(-1)M_9, L(-3)M_7, h(-1)^4_{-3}h(-1)^4 and L(-2)^5 span M(1)+_10");
    record_ranks(&mut report, &lemma_ranks());
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn listed_bases_are_canonical() {
        let canon = |w: i64| enumerate_basis(Sector::Untwisted, &int(w), Some(Parity::Even));
        let listed = |b: &[&[u32]]| b.iter().map(|p| Monomial::untwisted(p)).collect::<Vec<_>>();
        assert_eq!(canon(7), listed(&E_BASIS));
        assert_eq!(canon(9), listed(&F_BASIS));
        assert_eq!(canon(10), listed(&G_BASIS));
    }

    #[test]
    fn table_examples() {
        let rows = appendix_rows();
        let columns = g_columns();
        let f1 = coordinates(&columns, &rows[0].1);
        assert_eq!(&f1[..3], &[int(8), int(1), int(0)]);
        let e7 = coordinates(&columns, &rows[20].1);
        let nonzero: Vec<_> = e7.iter().enumerate().filter(|(_, c)| **c != int(0)).map(|(k, c)| (k + 1, c.clone())).collect();
        assert_eq!(nonzero, vec![(10, int(2)), (14, int(5)), (21, int(1))]);
    }

    #[test]
    fn quartic_expansion_matches() {
        assert_eq!(quartic_mode_vector(), published_quartic_expansion());
    }

    #[test]
    fn tables_match() {
        assert_eq!(table_diff(), Vec::<Value>::new());
    }

    #[test]
    fn rank_facts() {
        let r = lemma_ranks();
        assert_eq!((r.table_rank, r.avoids_h1_power, r.rank_with_l2_power), (21, true, 22));
    }
}
