use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Monomial, Parity, Sector};
use crate::exactlin::Rational;

/// All monomials of the given weight (and θ-parity, if given) in canonical
/// order: descending lexicographic on the weakly decreasing part sequence.
///
/// A weight outside the sector's lattice yields an empty list.
pub fn enumerate_basis(sector: Sector, weight: &Rational, parity: Option<Parity>) -> Vec<Monomial> {
    let doubled = weight * Rational::from_integer(2.into());
    if !doubled.is_integer() || doubled < Rational::from_integer(0.into()) {
        return Vec::new();
    }
    let Some(w2) = doubled.to_integer().to_u32() else {
        return Vec::new();
    };
    if sector == Sector::Untwisted && w2.is_odd() {
        return Vec::new();
    }
    basis_half(sector, w2, parity)
}

/// Basis of doubled weight `w2`.
pub(crate) fn basis_half(sector: Sector, w2: u32, parity: Option<Parity>) -> Vec<Monomial> {
    let (step, top) = match sector {
        Sector::Untwisted => (2, w2 - w2 % 2),
        Sector::Twisted => (2, if w2 % 2 == 1 { w2 } else { w2.saturating_sub(1) }),
    };
    let mut out = Vec::new();
    let mut stack = Vec::new();
    partitions(sector, w2, top, step, &mut stack, &mut out);
    if let Some(p) = parity {
        out.retain(|m| m.parity() == p);
    }
    out
}

fn partitions(
    sector: Sector,
    remaining: u32,
    max_part: u32,
    step: u32,
    stack: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if remaining == 0 {
        out.push(Monomial::from_halves_unchecked(sector, stack));
        return;
    }
    let mut part = max_part.min(remaining);
    if !sector.admits(part as i64) {
        part = part.saturating_sub(1);
    }
    while part > 0 {
        stack.push(part);
        partitions(sector, remaining - part, part, step, stack, out);
        stack.pop();
        if part < step {
            break;
        }
        part -= step;
    }
}

/// Concatenated bases of doubled weights `0..=max_w2`, ascending by weight.
pub fn basis_up_to(sector: Sector, max_w2: u32, parity: Option<Parity>) -> Vec<Monomial> {
    (0..=max_w2).flat_map(|w2| basis_half(sector, w2, parity)).collect()
}

pub fn graded_dimension(sector: Sector, weight: &Rational, parity: Option<Parity>) -> usize {
    enumerate_basis(sector, weight, parity).len()
}
