//! Untwisted mode actions on `M(1,λ)`: Heisenberg modes, vertex-operator
//! modes, the Virasoro operators, the weight-4 singular vector `J`, and
//! operator-identity checkers.

mod commutator;
mod descendants;
pub(crate) mod modes;
mod virasoro;

pub use commutator::{borcherds_commutator_check, borcherds_sides, operator_identity_on_basis, IdentityFailure};
pub use descendants::{
    partition_counts, truncated_character, virasoro_descendant_span, virasoro_descendants, DescendantSpan,
};
pub use virasoro::{check_singular, omega, singular_j, virasoro};

use crate::error::Error;
use crate::exactlin::{int, Scalar};
use crate::fock::{FockVector, QVector, Sector};

fn require_untwisted(sector: Sector) -> Result<(), Error> {
    if sector == Sector::Untwisted {
        Ok(())
    } else {
        Err(Error::SectorMismatch { expected: Sector::Untwisted.name(), found: sector.name() })
    }
}

/// Heisenberg mode with half-unit index `j2` on a vector of either sector.
///
/// Negative modes create, positive modes differentiate with bracket
/// `[h(r), h(s)] = r δ_{r+s,0}`, and `h(0)` acts as `λ` (untwisted only).
pub fn heisenberg_mode<S: Scalar>(j2: i64, w: &FockVector<S>, lambda: &S) -> Result<FockVector<S>, Error> {
    let sector = w.sector();
    if !sector.admits(j2) {
        return Err(Error::SectorMismatch { expected: sector.name(), found: "mode of the other sector" });
    }
    Ok(match j2 {
        0 => w.scale_by(lambda),
        j if j < 0 => w.create((-j) as u32),
        j => {
            let mut out = FockVector::zero(sector);
            for (m, c) in w.terms() {
                if let Some((mult, rest)) = m.without_part(j as u32) {
                    out.add_term(rest, c.scale(&crate::exactlin::rat(j * mult as i64, 2)));
                }
            }
            out
        }
    })
}

/// `h(n)` acting on `M(1,λ)`.
pub fn apply_heisenberg<S: Scalar>(n: i64, w: &FockVector<S>, lambda: &S) -> Result<FockVector<S>, Error> {
    require_untwisted(w.sector())?;
    heisenberg_mode(2 * n, w, lambda)
}

/// The mode `v_m` of `Y(v,z) = Σ v_m z^{-m-1}` applied to `w ∈ M(1,λ)`.
pub fn vertex_mode_apply<S: Scalar>(v: &QVector, m: i64, w: &FockVector<S>, lambda: &S) -> Result<FockVector<S>, Error> {
    require_untwisted(v.sector())?;
    require_untwisted(w.sector())?;
    Ok(modes::field_mode(v, 2 * m, w, lambda))
}

/// Convenience wrapper at `λ = 0`, i.e. inside the vertex algebra `M(1)`.
pub fn mode(v: &QVector, m: i64, w: &QVector) -> QVector {
    vertex_mode_apply(v, m, w, &int(0)).expect("untwisted operands")
}
