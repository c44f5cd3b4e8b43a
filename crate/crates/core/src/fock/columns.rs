use std::collections::HashMap;

use super::{Monomial, QVector, Sector};
use crate::error::Error;
use crate::exactlin::SparseVec;

/// A fixed ordered monomial list used as the column basis of exact matrices.
#[derive(Clone, Debug)]
pub struct ColumnBasis {
    sector: Sector,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl ColumnBasis {
    pub fn new(sector: Sector, monomials: Vec<Monomial>) -> Self {
        let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        ColumnBasis { sector, monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_sparse(&self, v: &QVector) -> Result<SparseVec, Error> {
        let mut pairs = Vec::with_capacity(v.len());
        for (m, c) in v.terms() {
            let col = self.position(m).ok_or_else(|| Error::DimensionMismatch {
                expected: self.len(),
                found: self.len() + 1,
            })?;
            pairs.push((col, c.clone()));
        }
        Ok(SparseVec::from_pairs(pairs))
    }

    pub fn to_vector(&self, s: &SparseVec) -> QVector {
        let mut v = QVector::zero(self.sector);
        for (col, c) in s.entries() {
            v.add_term(self.monomials[*col].clone(), c.clone());
        }
        v
    }
}
