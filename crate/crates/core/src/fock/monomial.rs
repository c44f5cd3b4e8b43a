use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::Error;
use crate::exactlin::{rat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Sector {
    Untwisted,
    Twisted,
}

impl Sector {
    pub fn name(self) -> &'static str {
        match self {
            Sector::Untwisted => "untwisted",
            Sector::Twisted => "twisted",
        }
    }

    /// Whether a half-unit index belongs to this sector's mode lattice.
    pub fn admits(self, half: i64) -> bool {
        match self {
            Sector::Untwisted => half % 2 == 0,
            Sector::Twisted => half.rem_euclid(2) == 1,
        }
    }
}

/// θ-eigenvalue of a monomial: `(-1)^length`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_len(len: usize) -> Parity {
        if len % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Parity::Even => 1,
            Parity::Odd => -1,
        }
    }
}

/// A Fock basis vector `h(-n_1) ... h(-n_k)|0>` with `n_1 ≥ ... ≥ n_k > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    sector: Sector,
    parts: SmallVec<[u8; 16]>,
}

impl Monomial {
    pub fn vacuum(sector: Sector) -> Self {
        Monomial { sector, parts: SmallVec::new() }
    }

    /// Untwisted monomial from creation indices `n_i > 0` in any order.
    pub fn untwisted(parts: &[u32]) -> Self {
        assert!(parts.iter().all(|&n| n > 0), "creation indices must be positive");
        let halves: Vec<u32> = parts.iter().map(|n| 2 * n).collect();
        Self::from_halves_unchecked(Sector::Untwisted, &halves)
    }

    /// Monomial from doubled creation indices (`2n` or `2r`), validated against the sector.
    pub fn from_halves(sector: Sector, halves: &[u32]) -> Result<Self, Error> {
        for &p in halves {
            if p == 0 || !sector.admits(p as i64) || p > u8::MAX as u32 {
                return Err(Error::BadWeight(format!("{}/2", p)));
            }
        }
        Ok(Self::from_halves_unchecked(sector, halves))
    }

    pub(crate) fn from_halves_unchecked(sector: Sector, halves: &[u32]) -> Self {
        let mut parts: SmallVec<[u8; 16]> = halves.iter().map(|&p| p as u8).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Monomial { sector, parts }
    }

    pub fn sector(&self) -> Sector {
        self.sector
    }

    /// Doubled creation indices, weakly decreasing.
    pub fn halves(&self) -> impl ExactSizeIterator<Item = u32> + '_ {
        self.parts.iter().map(|&p| p as u32)
    }

    /// Creation indices of an untwisted monomial.
    pub fn parts(&self) -> Vec<u32> {
        debug_assert_eq!(self.sector, Sector::Untwisted);
        self.parts.iter().map(|&p| p as u32 / 2).collect()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_vacuum(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Twice the weight (sum of creation indices).
    pub fn weight2(&self) -> u32 {
        self.parts.iter().map(|&p| p as u32).sum()
    }

    pub fn weight(&self) -> Rational {
        rat(self.weight2() as i64, 2)
    }

    pub fn parity(&self) -> Parity {
        Parity::of_len(self.parts.len())
    }

    pub fn max_half(&self) -> u32 {
        self.parts.first().map_or(0, |&p| p as u32)
    }

    /// Multiplies by a creation operator `h(-p/2)`.
    pub(crate) fn with_part(&self, half: u32) -> Monomial {
        let mut parts = self.parts.clone();
        let pos = parts.iter().position(|&q| (q as u32) < half).unwrap_or(parts.len());
        parts.insert(pos, half as u8);
        Monomial { sector: self.sector, parts }
    }

    /// Removes one factor `h(-p/2)`, returning its multiplicity before removal.
    pub(crate) fn without_part(&self, half: u32) -> Option<(u32, Monomial)> {
        let first = self.parts.iter().position(|&q| q as u32 == half)?;
        let mult = self.parts[first..].iter().take_while(|&&q| q as u32 == half).count() as u32;
        let mut parts = self.parts.clone();
        parts.remove(first);
        Some((mult, Monomial { sector: self.sector, parts }))
    }

    /// Distinct doubled parts with multiplicities.
    pub(crate) fn distinct_halves(&self) -> SmallVec<[(u32, u32); 8]> {
        let mut out: SmallVec<[(u32, u32); 8]> = SmallVec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p as u32 => *m += 1,
                _ => out.push((p as u32, 1)),
            }
        }
        out
    }
}

impl Ord for Monomial {
    /// Sector, then ascending weight, then descending lexicographic order on
    /// the part sequence (`h(-9)h(-1)` before `h(-8)h(-2)` before ... `h(-1)^10`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.sector
            .cmp(&other.sector)
            .then_with(|| self.weight2().cmp(&other.weight2()))
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &p in &self.parts {
            if p % 2 == 0 {
                write!(f, "h(-{})", p / 2)?;
            } else {
                write!(f, "h(-{}/2)", p)?;
            }
        }
        write!(f, "|0>")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(Monomial::untwisted(&[1, 3]).to_string(), "h(-3)h(-1)|0>");
        assert_eq!(Monomial::vacuum(Sector::Untwisted).to_string(), "|0>");
        let t = Monomial::from_halves(Sector::Twisted, &[1, 3]).unwrap();
        assert_eq!(t.to_string(), "h(-3/2)h(-1/2)|0>");
        assert_eq!(t.weight(), rat(2, 1));
    }

    #[test]
    fn sector_classes() {
        assert!(Monomial::from_halves(Sector::Twisted, &[2]).is_err());
        assert!(Monomial::from_halves(Sector::Untwisted, &[3]).is_err());
        assert!(Monomial::from_halves(Sector::Untwisted, &[0]).is_err());
    }

    #[test]
    fn insert_remove() {
        let m = Monomial::untwisted(&[2, 1, 1]);
        assert_eq!(m.with_part(4), Monomial::untwisted(&[2, 2, 1, 1]));
        let (mult, rest) = m.without_part(2).unwrap();
        assert_eq!(mult, 2);
        assert_eq!(rest, Monomial::untwisted(&[2, 1]));
        assert!(m.without_part(6).is_none());
        assert_eq!(m.parity(), Parity::Odd);
    }

    #[test]
    fn canonical_order_matches_listing() {
        let a = Monomial::untwisted(&[9, 1]);
        let b = Monomial::untwisted(&[8, 2]);
        let c = Monomial::untwisted(&[1; 10]);
        let low = Monomial::untwisted(&[4, 4]);
        assert!(a < b && b < c);
        assert!(low < a);
    }
}
