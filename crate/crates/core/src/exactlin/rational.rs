use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Generalized binomial coefficient `a (a-1) ... (a-k+1) / k!` for rational `a`.
pub fn binomial(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    let mut top = a.clone();
    for i in 1..=k {
        acc *= &top;
        acc /= int(i as i64);
        top -= Rational::one();
    }
    acc
}

/// Binomial coefficient with an integer (possibly negative) upper argument.
pub fn binomial_int(n: i64, k: i64) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    binomial(&int(n), k as u32)
}
