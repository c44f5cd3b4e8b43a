//! The θ-twisted module `M(1)(θ)`: the correction operator `Δ_z`, the
//! exponential `e^{Δ_z}`, twisted vertex-operator modes
//! `Y_θ(v,z) = W_θ(e^{Δ_z} v, z)`, and the top-level action table.

mod delta;
mod toplevel;

pub use delta::{delta_coefficients, delta_z, exp_delta, DeltaCoefficients, LaurentFockVector};
pub use toplevel::{published_top_levels, top_level_table, ModuleDescriptor, ModuleFamily};

use crate::error::Error;
use crate::exactlin::int;
use crate::fock::{QVector, Sector};
use crate::vertex::{modes, omega};

/// Applies the `m`-th mode of `Y_θ(v,z)` to `w ∈ M(1)(θ)`.
///
/// `v ∈ M(1)` must be θ-even, so its twisted modes are integrally indexed.
pub fn twisted_mode_apply(v: &QVector, m: i64, w: &QVector) -> Result<QVector, Error> {
    if v.sector() != Sector::Untwisted {
        return Err(Error::SectorMismatch { expected: "untwisted", found: v.sector().name() });
    }
    if w.sector() != Sector::Twisted {
        return Err(Error::SectorMismatch { expected: "twisted", found: w.sector().name() });
    }
    if !v.is_theta_even() {
        return Err(Error::NotThetaEven(v.to_string()));
    }
    let corrected = exp_delta(v);
    let mut out = QVector::zero(Sector::Twisted);
    for (exp, comp) in corrected.terms() {
        // z^{exp} W_θ(comp, z): coefficient of z^{-m-1} is comp's mode m + exp
        out.add_assign(&modes::field_mode(comp, 2 * (m + exp), w, &int(0)));
    }
    Ok(out)
}

/// Twisted Virasoro operator `L(n) = ω_{n+1}` on `M(1)(θ)`.
pub fn twisted_virasoro(n: i64, w: &QVector) -> Result<QVector, Error> {
    twisted_mode_apply(&omega(), n + 1, w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::fock::Monomial;
    use crate::vertex::{heisenberg_mode, singular_j};

    fn tvac() -> QVector {
        QVector::vacuum(Sector::Twisted)
    }

    fn thalf() -> QVector {
        QVector::from_monomial(Monomial::from_halves(Sector::Twisted, &[1]).unwrap())
    }

    #[test]
    fn twisted_l0_on_top_levels() {
        assert_eq!(twisted_virasoro(0, &tvac()).unwrap(), tvac().scale(&rat(1, 16)));
        assert_eq!(twisted_virasoro(0, &thalf()).unwrap(), thalf().scale(&rat(9, 16)));
    }

    #[test]
    fn twisted_zero_mode_of_j() {
        let j = singular_j();
        assert_eq!(twisted_mode_apply(&j, 3, &tvac()).unwrap(), tvac().scale(&rat(3, 128)));
        assert_eq!(twisted_mode_apply(&j, 3, &thalf()).unwrap(), thalf().scale(&rat(-45, 128)));
    }

    #[test]
    fn half_integer_bracket() {
        let created = heisenberg_mode(-1, &tvac(), &int(0)).unwrap();
        assert_eq!(created, thalf());
        let back = heisenberg_mode(1, &created, &int(0)).unwrap();
        assert_eq!(back, tvac().scale(&rat(1, 2)));
        assert!(heisenberg_mode(2, &tvac(), &int(0)).is_err());
    }

    #[test]
    fn rejects_wrong_operands() {
        let h = QVector::from_monomial(Monomial::untwisted(&[1]));
        assert!(matches!(twisted_mode_apply(&h, 0, &tvac()), Err(Error::NotThetaEven(_))));
        assert!(twisted_mode_apply(&omega(), 0, &omega()).is_err());
    }
}
