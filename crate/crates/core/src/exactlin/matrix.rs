use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::Rational;
use crate::error::Error;

/// Sparse rational vector: `(column, value)` pairs sorted by column, no zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec::default()
    }

    /// Builds from arbitrary pairs; duplicates are summed, zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut entries: Vec<(usize, Rational)> = pairs.into_iter().collect();
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        SparseVec::from_pairs(values.iter().cloned().enumerate())
    }

    pub fn unit(col: usize) -> Self {
        SparseVec { entries: vec![(col, Rational::one())] }
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, col: usize) -> Rational {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn max_col(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    pub fn scale(&self, s: &Rational) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec { entries: self.entries.iter().map(|(c, v)| (*c, v * s)).collect() }
    }

    /// `self + s * other`.
    pub fn add_scaled(&self, s: &Rational, other: &SparseVec) -> SparseVec {
        if s.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some((ca, _)), Some((cb, _))) => ca.cmp(cb),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, &b[j].1 * s));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 + &b[j].1 * s;
                    if !v.is_zero() {
                        out.push((a[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        SparseVec { entries: out }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }
}

/// Rows of sparse rational vectors over a fixed, ordered column basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    ncols: usize,
    rows: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn new(ncols: usize, rows: Vec<SparseVec>) -> Result<Self, Error> {
        if let Some(bad) = rows.iter().filter_map(SparseVec::max_col).find(|&c| c >= ncols) {
            return Err(Error::DimensionMismatch { expected: ncols, found: bad + 1 });
        }
        Ok(ExactMatrix { ncols, rows })
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        ExactMatrix { ncols, rows: vec![SparseVec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix { ncols: n, rows: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        ExactMatrix { ncols, rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn push(&mut self, row: SparseVec) -> Result<(), Error> {
        if let Some(c) = row.max_col() {
            if c >= self.ncols {
                return Err(Error::DimensionMismatch { expected: self.ncols, found: c + 1 });
            }
        }
        self.rows.push(row);
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RowReduced {
    pub reduced: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row echelon form. Zero rows are dropped, so `reduced.nrows() == rank`.
pub fn row_reduce(m: &ExactMatrix) -> RowReduced {
    let mut basis = EchelonBasis::new(m.ncols);
    for row in &m.rows {
        basis.insert(row);
    }
    let mut order: Vec<usize> = (0..basis.rank()).collect();
    order.sort_by_key(|&i| basis.pivots[i]);
    let rows = order.iter().map(|&i| basis.rows[i].clone()).collect();
    let pivots: Vec<usize> = order.iter().map(|&i| basis.pivots[i]).collect();
    RowReduced { reduced: ExactMatrix { ncols: m.ncols, rows }, rank: pivots.len(), pivots }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Membership {
    /// One coefficient per basis row; `Σ c_i row_i` reconstructs the vector exactly.
    Member(Vec<Rational>),
    NotMember { residual: SparseVec },
}

/// Decides whether `v` lies in the row space of `basis`.
pub fn membership(v: &SparseVec, basis: &ExactMatrix) -> Result<Membership, Error> {
    if let Some(c) = v.max_col() {
        if c >= basis.ncols {
            return Err(Error::DimensionMismatch { expected: basis.ncols, found: c + 1 });
        }
    }
    let mut ech = EchelonBasis::new(basis.ncols);
    for row in &basis.rows {
        ech.insert(row);
    }
    let (residual, combo) = ech.reduce(v);
    if residual.is_zero() {
        Ok(Membership::Member(combo.to_dense(basis.nrows())))
    } else {
        Ok(Membership::NotMember { residual })
    }
}

/// Incrementally maintained reduced echelon basis with provenance.
///
/// Every inserted vector gets a sequential label. Each stored row carries the
/// combination of labels that produces it, so membership queries can return
/// witnesses in terms of the original inputs.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
    provenance: Vec<SparseVec>,
    inputs: usize,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
            provenance: Vec::new(),
            inputs: 0,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far (independent or not).
    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Returns `(residual, combination)` with
    /// `v = residual + Σ combination[label] * input[label]`.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut residual = v.clone();
        let mut combo = SparseVec::new();
        for (col, val) in v.entries() {
            if let Some(r) = self.pivot_row[*col] {
                residual = residual.add_scaled(&-val.clone(), &self.rows[r]);
                combo = combo.add_scaled(val, &self.provenance[r]);
            }
        }
        (residual, combo)
    }

    pub fn residual(&self, v: &SparseVec) -> SparseVec {
        let mut residual = v.clone();
        for (col, val) in v.entries() {
            if let Some(r) = self.pivot_row[*col] {
                residual = residual.add_scaled(&-val.clone(), &self.rows[r]);
            }
        }
        residual
    }

    /// Inserts `v`; returns its label and whether it enlarged the span.
    pub fn insert(&mut self, v: &SparseVec) -> (usize, bool) {
        let label = self.inputs;
        self.inputs += 1;
        if self.residual(v).is_zero() {
            return (label, false);
        }
        let (residual, combo) = self.reduce(v);
        let (pcol, pval) = residual.leading().expect("nonzero residual");
        let inv = Rational::one() / pval;
        let row = residual.scale(&inv);
        let prov = SparseVec::unit(label).add_scaled(&-Rational::one(), &combo).scale(&inv);
        for r in 0..self.rows.len() {
            let c = self.rows[r].get(pcol);
            if !c.is_zero() {
                let neg = -c;
                self.rows[r] = self.rows[r].add_scaled(&neg, &row);
                self.provenance[r] = self.provenance[r].add_scaled(&neg, &prov);
            }
        }
        self.pivot_row[pcol] = Some(self.rows.len());
        self.rows.push(row);
        self.pivots.push(pcol);
        self.provenance.push(prov);
        (label, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{int, rat};
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_dense(
            &rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn identity_and_zero_rank() {
        assert_eq!(row_reduce(&ExactMatrix::identity(2)).rank, 2);
        assert_eq!(row_reduce(&ExactMatrix::zeros(3, 5)).rank, 0);
        assert_eq!(row_reduce(&ExactMatrix::zeros(0, 0)).rank, 0);
    }

    #[test]
    fn two_dim_solve() {
        let basis = dense(&[&[1, 1], &[0, 1]]);
        let m = membership(&SparseVec::unit(0), &basis).unwrap();
        assert_eq!(m, Membership::Member(vec![int(1), int(-1)]));
        let zero = membership(&SparseVec::new(), &basis).unwrap();
        assert_eq!(zero, Membership::Member(vec![int(0), int(0)]));
    }

    #[test]
    fn not_member_has_residual() {
        let basis = dense(&[&[1, 1, 0]]);
        match membership(&SparseVec::unit(2), &basis).unwrap() {
            Membership::NotMember { residual } => assert_eq!(residual, SparseVec::unit(2)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mismatched_columns() {
        let basis = dense(&[&[1, 1]]);
        assert!(membership(&SparseVec::unit(4), &basis).is_err());
        assert!(ExactMatrix::new(2, vec![SparseVec::unit(3)]).is_err());
    }

    #[test]
    fn reduced_form_is_canonical() {
        let m = dense(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let r = row_reduce(&m);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 2]);
        assert_eq!(r.reduced.rows()[0], SparseVec::from_dense(&[int(1), int(2), int(0)]));
        assert_eq!(r.reduced.rows()[1], SparseVec::unit(2));
        let _ = rat(1, 2);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r)
        })
    }

    proptest! {
        #[test]
        fn row_reduce_idempotent_and_rank_preserving(rows in small_matrix()) {
            let m = ExactMatrix::from_dense(
                &rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>());
            let once = row_reduce(&m);
            let twice = row_reduce(&once.reduced);
            prop_assert_eq!(once.rank, twice.rank);
            prop_assert_eq!(&once.reduced, &twice.reduced);
            // every original row lies in the reduced row space and reconstructs exactly
            for row in m.rows() {
                match membership(row, &once.reduced).unwrap() {
                    Membership::Member(c) => {
                        let rebuilt = once.reduced.rows().iter().zip(&c)
                            .fold(SparseVec::new(), |acc, (r, k)| acc.add_scaled(k, r));
                        prop_assert_eq!(&rebuilt, row);
                    }
                    Membership::NotMember { .. } => prop_assert!(false),
                }
            }
        }

        #[test]
        fn membership_witness_reconstructs(rows in small_matrix(), coeffs in proptest::collection::vec(-3i64..4, 5)) {
            let m = ExactMatrix::from_dense(
                &rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect::<Vec<_>>());
            let target = m.rows().iter().zip(coeffs.iter())
                .fold(SparseVec::new(), |acc, (r, &k)| acc.add_scaled(&int(k), r));
            match membership(&target, &m).unwrap() {
                Membership::Member(c) => {
                    let rebuilt = m.rows().iter().zip(&c)
                        .fold(SparseVec::new(), |acc, (r, k)| acc.add_scaled(k, r));
                    prop_assert_eq!(rebuilt, target);
                }
                Membership::NotMember { .. } => prop_assert!(false),
            }
        }
    }
}
