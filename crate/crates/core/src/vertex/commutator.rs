use crate::exactlin::{binomial_int, int};
use crate::fock::{basis_up_to, Monomial, QVector, Sector};
use crate::par::{self, Exec};
use crate::report::VerificationReport;

use super::mode;

/// Both sides of the commutator formula on one vector `w`:
/// `(u_m v_n - v_n u_m) w` and `Σ_{i≥0} binom(m,i) (u_i v)_{m+n-i} w`.
pub fn borcherds_sides(u: &QVector, v: &QVector, m: i64, n: i64, w: &QVector) -> (QVector, QVector) {
    let lhs = &mode(u, m, &mode(v, n, w)) - &mode(v, n, &mode(u, m, w));
    let top = (u.max_weight2().unwrap_or(0) + v.max_weight2().unwrap_or(0)) as i64 / 2;
    let mut rhs = QVector::zero(Sector::Untwisted);
    for i in 0..top {
        let b = binomial_int(m, i);
        if b == int(0) {
            continue;
        }
        let uiv = mode(u, i, v);
        if uiv.is_zero() {
            continue;
        }
        rhs.add_scaled(&mode(&uiv, m + n - i, w), &b);
    }
    (lhs, rhs)
}

#[derive(Clone, Debug)]
pub struct IdentityFailure {
    pub basis_vector: Monomial,
    pub lhs: QVector,
    pub rhs: QVector,
}

/// Evaluates `lhs(w) == rhs(w)` on every untwisted basis vector of weight
/// `≤ max_weight` (optionally only θ-even ones). Returns the first failure
/// in canonical basis order.
pub fn operator_identity_on_basis<F>(max_weight: u32, even_only: bool, exec: Exec, sides: F) -> Option<IdentityFailure>
where
    F: Fn(&QVector) -> (QVector, QVector) + Sync + Send,
{
    let parity = even_only.then_some(crate::fock::Parity::Even);
    let basis = basis_up_to(Sector::Untwisted, 2 * max_weight, parity);
    let results = par::map(exec, &basis, |m| {
        let w = QVector::from_monomial(m.clone());
        let (lhs, rhs) = sides(&w);
        (lhs != rhs).then(|| IdentityFailure { basis_vector: m.clone(), lhs, rhs })
    });
    results.into_iter().flatten().next()
}

/// Checks `[u_m, v_n] = Σ_i binom(m,i) (u_i v)_{m+n-i}` on all basis vectors
/// of `M(1)` with weight `≤ max_weight`.
pub fn borcherds_commutator_check(u: &QVector, v: &QVector, m: i64, n: i64, max_weight: u32) -> VerificationReport {
    let mut report = VerificationReport::new("borcherds", "commutator formula for vertex-operator modes");
    let failure = operator_identity_on_basis(max_weight, false, Exec::default(), |w| borcherds_sides(u, v, m, n, w));
    match failure {
        None => {
            report.assert(&format!("[u_{m}, v_{n}] on weight <= {max_weight}"), true);
        }
        Some(f) => {
            report.expect_eq(
                &format!("[u_{m}, v_{n}] on {}", f.basis_vector),
                &f.lhs.to_string(),
                &f.rhs.to_string(),
            );
        }
    }
    report.finish()
}
