use serde::Serialize;
use serde_json::json;

use num_traits::Zero;

use crate::exactlin::{int, rat, BiPoly, Rational, UniPoly};
use crate::report::VerificationReport;
use crate::twisted::{published_top_levels, ModuleFamily};

use super::relations::{branch_factor, cubic_factor, linear_factor, p_poly, q_poly, relation_p, relation_q};

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct IsolatedPoint {
    pub x: String,
    pub y: String,
    pub module: Option<ModuleFamily>,
}

/// The zero locus of `⟨P, Q⟩`: the curve `y = 4x² - x` together with the
/// points where the cubic factor of `Q` and the linear factor of `P` vanish
/// off the curve.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Classification {
    pub p_expanded: String,
    pub q_expanded: String,
    pub curve: String,
    pub curve_modules: Vec<ModuleFamily>,
    pub isolated: Vec<IsolatedPoint>,
    pub branch_identity: bool,
    pub table_annihilates: bool,
}

/// `P` expanded from the coefficients of `p` and `q`.
fn p_expanded() -> BiPoly {
    let y = BiPoly::y();
    (&(&(&y * &y) - &(&q_poly() * &y)) - &p_poly()).scale(&int(70))
}

/// `Q` expanded by hand.
fn q_expanded() -> BiPoly {
    let mut q = BiPoly::zero();
    for (c, i, j) in [
        (rat(1, 1), 3, 1),
        (rat(-13, 8), 2, 1),
        (rat(169, 256), 1, 1),
        (rat(-9, 256), 0, 1),
        (rat(-4, 1), 5, 0),
        (rat(15, 2), 4, 0),
        (rat(-273, 64), 3, 0),
        (rat(205, 256), 2, 0),
        (rat(-9, 256), 1, 0),
    ] {
        q.add_term(i, j, c);
    }
    q
}

fn constant(p: &UniPoly) -> Option<Rational> {
    p.as_constant()
}

pub fn classify() -> Classification {
    let table = published_top_levels();
    let cubic = cubic_factor();
    let linear = linear_factor();
    let mut isolated = Vec::new();
    for x0 in [int(1), rat(1, 16), rat(9, 16)] {
        assert!(cubic.eval(&x0, &int(0)).is_zero(), "{x0} is a root of the cubic factor");
        // linear factor is 70y + g(x): solve for y
        let y0 = -linear.eval(&x0, &int(0)) / int(70);
        let module = table
            .iter()
            .find(|(_, w, j)| constant(w) == Some(x0.clone()) && constant(j) == Some(y0.clone()))
            .map(|(f, _, _)| *f);
        isolated.push(IsolatedPoint { x: x0.to_string(), y: y0.to_string(), module });
    }
    let on_curve = |w: &UniPoly, j: &UniPoly| branch_factor().eval(w, j).is_zero();
    let curve_modules = table.iter().filter(|(_, w, j)| on_curve(w, j)).map(|(f, _, _)| *f).collect();
    let (_, lw, lj) = table.iter().find(|(f, _, _)| *f == ModuleFamily::Lambda).expect("λ row");
    let table_annihilates =
        table.iter().all(|(_, w, j)| relation_p().eval(w, j).is_zero() && relation_q().eval(w, j).is_zero());
    Classification {
        p_expanded: relation_p().to_string(),
        q_expanded: relation_q().to_string(),
        curve: "y = 4x^2 - x".to_string(),
        curve_modules,
        isolated,
        branch_identity: on_curve(lw, lj),
        table_annihilates,
    }
}

pub fn classify_report() -> VerificationReport {
    let mut report = VerificationReport::new("classify", "irreducible M(1)+ modules from the zero locus of P and Q");
    report.expect_eq("P factored = expanded", &relation_p().to_string(), &p_expanded().to_string());
    report.expect_eq("Q factored = expanded", &relation_q().to_string(), &q_expanded().to_string());
    let c = classify();
    let points: Vec<_> = c.isolated.iter().map(|p| json!([p.x, p.y])).collect();
    report.expect_value("isolated points", json!(points), json!([["1", "-6"], ["1/16", "3/128"], ["9/16", "-45/128"]]));
    let modules: Vec<_> = c.isolated.iter().map(|p| p.module).collect();
    report.expect_value(
        "isolated point modules",
        json!(modules),
        json!([ModuleFamily::Minus, ModuleFamily::TwistedPlus, ModuleFamily::TwistedMinus]),
    );
    report.assert("(λ²/2, λ⁴-λ²/2) lies on y = 4x² - x", c.branch_identity);
    report.expect_value("modules on the curve", json!(c.curve_modules), json!([ModuleFamily::Plus, ModuleFamily::Lambda]));
    report.assert("every table module annihilates P and Q", c.table_annihilates);
    report.note("curve", json!(c.curve));
    report.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations_expand() {
        assert_eq!(relation_p(), p_expanded());
        assert_eq!(relation_q(), q_expanded());
    }

    #[test]
    fn classification_report_passes() {
        let r = classify_report();
        assert!(r.passed(), "{}", r.to_text(true));
    }

    #[test]
    fn isolated_points_are_off_the_curve() {
        for p in classify().isolated {
            assert!(p.module.is_some());
        }
        let x = rat(1, 16);
        assert!(!branch_factor().eval(&x, &rat(3, 128)).is_zero());
    }
}
