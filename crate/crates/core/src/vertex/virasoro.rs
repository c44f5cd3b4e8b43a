use crate::error::Error;
use crate::exactlin::{int, rat, Scalar};
use crate::fock::{FockVector, Monomial, QVector};
use crate::report::VerificationReport;

use super::vertex_mode_apply;

/// Conformal vector `ω = ½ h(-1)²|0>`.
pub fn omega() -> QVector {
    QVector::term(Monomial::untwisted(&[1, 1]), rat(1, 2))
}

/// The weight-4 Virasoro singular vector
/// `J = h(-1)^4|0> - 2 h(-3)h(-1)|0> + 3/2 h(-2)^2|0>`.
pub fn singular_j() -> QVector {
    let mut j = QVector::from_monomial(Monomial::untwisted(&[1, 1, 1, 1]));
    j.add_term(Monomial::untwisted(&[3, 1]), int(-2));
    j.add_term(Monomial::untwisted(&[2, 2]), rat(3, 2));
    j
}

/// `L(n) = ω_{n+1}` on `M(1,λ)`.
pub fn virasoro<S: Scalar>(n: i64, w: &FockVector<S>, lambda: &S) -> Result<FockVector<S>, Error> {
    vertex_mode_apply(&omega(), n + 1, w, lambda)
}

/// `L(n)J = 0` for `1 ≤ n ≤ 6` and `L(0)J = 4J`.
pub fn check_singular() -> VerificationReport {
    let mut report = VerificationReport::new("singular", "J is a Virasoro singular vector of weight 4");
    let j = singular_j();
    let zero = int(0);
    for n in 1..=6 {
        let got = virasoro(n, &j, &zero).expect("untwisted");
        report.expect_eq(&format!("L({n})J"), &got.to_string(), "0");
    }
    let l0 = virasoro(0, &j, &zero).expect("untwisted");
    report.expect_eq("L(0)J", &l0.to_string(), &j.scale(&int(4)).to_string());
    report.finish()
}
