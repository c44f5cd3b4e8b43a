use crate::exactlin::{int, row_reduce, EchelonBasis, ExactMatrix};
use crate::fock::{enumerate_basis, ColumnBasis, Parity, QVector, Sector};

use super::{singular_j, virasoro};

/// Partitions of `n` with all parts `≥ min_part`, parts weakly decreasing.
fn partitions_min(n: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn go(rem: u32, max: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(rem)).rev() {
            cur.push(p);
            go(rem - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, min_part.max(1), &mut Vec::new(), &mut out);
    out
}

fn apply_virasoro_word(word: &[u32], v: &QVector) -> QVector {
    let zero = int(0);
    word.iter()
        .rev()
        .fold(v.clone(), |acc, &m| virasoro(-(m as i64), &acc, &zero).expect("untwisted"))
}

/// All `L(-m_1)...L(-m_s)|0>` (`m_i ≥ 2`) and `L(-n_1)...L(-n_t)J` (`n_i ≥ 1`)
/// of the given weight, labelled by their Virasoro words.
pub fn virasoro_descendants(weight: u32) -> Vec<(String, QVector)> {
    let vac = QVector::vacuum(Sector::Untwisted);
    let j = singular_j();
    let label = |word: &[u32], tail: &str| {
        let mut s: String = word.iter().map(|m| format!("L(-{m})")).collect();
        s.push_str(tail);
        s
    };
    let mut out: Vec<(String, QVector)> = partitions_min(weight, 2)
        .into_iter()
        .map(|w| (label(&w, "|0>"), apply_virasoro_word(&w, &vac)))
        .collect();
    if weight >= 4 {
        out.extend(
            partitions_min(weight - 4, 1)
                .into_iter()
                .map(|w| (label(&w, "J"), apply_virasoro_word(&w, &j))),
        );
    }
    out
}

/// Span of the Virasoro descendants of `|0>` and `J` inside `M(1)+` at one weight.
#[derive(Clone, Debug)]
pub struct DescendantSpan {
    pub weight: u32,
    pub columns: ColumnBasis,
    pub span: ExactMatrix,
    echelon: EchelonBasis,
}

impl DescendantSpan {
    pub fn dimension(&self) -> usize {
        self.echelon.rank()
    }

    pub fn contains(&self, v: &QVector) -> bool {
        match self.columns.to_sparse(v) {
            Ok(s) => self.echelon.reduce(&s).0.is_zero(),
            Err(_) => false,
        }
    }
}

pub fn virasoro_descendant_span(weight: u32) -> DescendantSpan {
    let columns = ColumnBasis::new(
        Sector::Untwisted,
        enumerate_basis(Sector::Untwisted, &int(weight as i64), Some(Parity::Even)),
    );
    let rows: Vec<_> = virasoro_descendants(weight)
        .iter()
        .map(|(_, v)| columns.to_sparse(v).expect("descendants are θ-even of this weight"))
        .collect();
    let matrix = ExactMatrix::new(columns.len(), rows).expect("columns match");
    let reduced = row_reduce(&matrix);
    let mut echelon = EchelonBasis::new(columns.len());
    for r in reduced.reduced.rows() {
        echelon.insert(r);
    }
    DescendantSpan { weight, columns, span: reduced.reduced, echelon }
}

/// Partition numbers `p(0..=max)` by the pentagonal-free counting recurrence.
pub fn partition_counts(max: usize) -> Vec<i64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for part in 1..=max {
        for n in part..=max {
            p[n] += p[n - part];
        }
    }
    p
}

/// Coefficients of `Σ_{k=0..3} (q^{4k²} - q^{(2k+1)²}) / Π_{j≥1}(1 - q^j)` up to `q^max`.
pub fn truncated_character(max: usize) -> Vec<i64> {
    let p = partition_counts(max);
    let at = |n: i64| if n >= 0 && (n as usize) <= max { p[n as usize] } else { 0 };
    (0..=max as i64)
        .map(|m| (0..=3i64).map(|k| at(m - 4 * k * k) - at(m - (2 * k + 1) * (2 * k + 1))).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fock::Monomial;
    use crate::vertex::{mode, omega};

    #[test]
    fn weight_four_span() {
        let s = virasoro_descendant_span(4);
        assert_eq!(s.dimension(), 3);
        let vac = QVector::vacuum(Sector::Untwisted);
        let l22 = virasoro(-2, &virasoro(-2, &vac, &int(0)).unwrap(), &int(0)).unwrap();
        assert!(s.contains(&l22));
        assert!(s.contains(&singular_j()));
    }

    #[test]
    fn weight_zero_span() {
        let s = virasoro_descendant_span(0);
        assert_eq!(s.dimension(), 1);
        assert!(s.contains(&QVector::vacuum(Sector::Untwisted)));
    }

    #[test]
    fn j0_j_in_span() {
        let j = singular_j();
        let j0j = mode(&j, 0, &j);
        assert_eq!(j0j.homogeneous_weight2(), Some(14));
        assert!(virasoro_descendant_span(7).contains(&j0j));
    }

    #[test]
    fn l_minus_two_vacuum_is_omega() {
        let vac = QVector::vacuum(Sector::Untwisted);
        assert_eq!(virasoro(-2, &vac, &int(0)).unwrap(), omega());
        let _ = (rat(1, 2), Monomial::untwisted(&[1]));
    }

    #[test]
    fn partition_numbers() {
        assert_eq!(partition_counts(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }
}
