use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::exactlin::{int, rat, Rational, Scalar, UniPoly};
use crate::fock::{FockVector, Monomial, QVector, Sector};
use crate::vertex::{omega, singular_j, vertex_mode_apply};

use super::twisted_mode_apply;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ModuleFamily {
    #[serde(rename = "M(1)+")]
    Plus,
    #[serde(rename = "M(1)-")]
    Minus,
    #[serde(rename = "M(1,λ)")]
    Lambda,
    #[serde(rename = "M(1)(θ)+")]
    TwistedPlus,
    #[serde(rename = "M(1)(θ)-")]
    TwistedMinus,
}

impl ModuleFamily {
    pub const ALL: [ModuleFamily; 5] = [
        ModuleFamily::Plus,
        ModuleFamily::Minus,
        ModuleFamily::Lambda,
        ModuleFamily::TwistedPlus,
        ModuleFamily::TwistedMinus,
    ];
}

impl fmt::Display for ModuleFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleFamily::Plus => "M(1)+",
            ModuleFamily::Minus => "M(1)-",
            ModuleFamily::Lambda => "M(1,λ)",
            ModuleFamily::TwistedPlus => "M(1)(θ)+",
            ModuleFamily::TwistedMinus => "M(1)(θ)-",
        })
    }
}

/// A module's one-dimensional top level together with the eigenvalues of
/// `o(ω) = L(0)` and `o(J) = J_3` on it. Constants are degree-0 polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct ModuleDescriptor {
    pub family: ModuleFamily,
    pub top: String,
    pub omega: UniPoly,
    pub j: UniPoly,
}

/// `top` is a single monomial with coefficient one.
fn eigenvalue<S: Scalar>(top: &FockVector<S>, image: &FockVector<S>) -> Result<S, Error> {
    let (m, _) = top.terms().next().expect("nonzero top vector");
    let scalar = image.coeff(m);
    if &top.scale_by(&scalar) != image {
        return Err(Error::NotEigenvector(image.to_string()));
    }
    Ok(scalar)
}

fn rational_row(family: ModuleFamily, top: QVector, twisted: bool) -> Result<ModuleDescriptor, Error> {
    let (w, j) = if twisted {
        (twisted_mode_apply(&omega(), 1, &top)?, twisted_mode_apply(&singular_j(), 3, &top)?)
    } else {
        let zero = int(0);
        (vertex_mode_apply(&omega(), 1, &top, &zero)?, vertex_mode_apply(&singular_j(), 3, &top, &zero)?)
    };
    Ok(ModuleDescriptor {
        family,
        top: top.to_string(),
        omega: UniPoly::constant(eigenvalue(&top, &w)?),
        j: UniPoly::constant(eigenvalue(&top, &j)?),
    })
}

/// Computes the action of `ω` and `J` on each top level from first principles.
pub fn top_level_table() -> Result<Vec<ModuleDescriptor>, Error> {
    let mut rows = Vec::with_capacity(5);
    rows.push(rational_row(ModuleFamily::Plus, QVector::vacuum(Sector::Untwisted), false)?);
    rows.push(rational_row(
        ModuleFamily::Minus,
        QVector::from_monomial(Monomial::untwisted(&[1])),
        false,
    )?);

    let lambda = UniPoly::lambda();
    let top = FockVector::<UniPoly>::vacuum(Sector::Untwisted);
    let w = vertex_mode_apply(&omega(), 1, &top, &lambda)?;
    let j = vertex_mode_apply(&singular_j(), 3, &top, &lambda)?;
    rows.push(ModuleDescriptor {
        family: ModuleFamily::Lambda,
        top: "|λ>".to_string(),
        omega: eigenvalue(&top, &w)?,
        j: eigenvalue(&top, &j)?,
    });

    rows.push(rational_row(ModuleFamily::TwistedPlus, QVector::vacuum(Sector::Twisted), true)?);
    rows.push(rational_row(
        ModuleFamily::TwistedMinus,
        QVector::from_monomial(Monomial::from_halves(Sector::Twisted, &[1])?),
        true,
    )?);
    Ok(rows)
}

/// The published values: `(family, ω, J)`.
pub fn published_top_levels() -> Vec<(ModuleFamily, UniPoly, UniPoly)> {
    let c = |r: Rational| UniPoly::constant(r);
    let l2 = UniPoly::monomial(rat(1, 1), 2);
    let lambda_j = &(&l2 * &l2) - &l2.scale(&rat(1, 2));
    vec![
        (ModuleFamily::Plus, c(int(0)), c(int(0))),
        (ModuleFamily::Minus, c(int(1)), c(int(-6))),
        (ModuleFamily::Lambda, l2.scale(&rat(1, 2)), lambda_j),
        (ModuleFamily::TwistedPlus, c(rat(1, 16)), c(rat(3, 128))),
        (ModuleFamily::TwistedMinus, c(rat(9, 16)), c(rat(-45, 128))),
    ]
}
