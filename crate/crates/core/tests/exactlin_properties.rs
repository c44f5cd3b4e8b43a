use m1plus::exactlin::{
    membership, rat, row_reduce, BiPoly, ExactMatrix, Membership, Rational, SparseVec, UniPoly, Var,
};
use m1plus::fock::{basis_up_to, QVector, Sector};
use proptest::prelude::*;

fn coefficient() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(coefficient(), 0..5).prop_map(UniPoly::new)
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..4, 0u32..3, coefficient()), 0..6).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unipoly_ring_axioms(a in unipoly(), b in unipoly(), c in unipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn unipoly_division_reconstructs(a in unipoly(), b in unipoly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().map_or(true, |d| d < b.degree().unwrap()));
    }

    #[test]
    fn unipoly_evaluation_is_a_homomorphism(a in unipoly(), b in unipoly(), x in coefficient()) {
        prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
    }

    #[test]
    fn bipoly_ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn bipoly_division_reconstructs(a in bipoly(), lead in coefficient(), tail in bipoly()) {
        prop_assume!(lead != rat(0, 1));
        // divisor with constant leading coefficient in y
        let divisor = &BiPoly::term(lead, 0, 3) + &tail;
        let (q, r) = a.div_rem(&divisor, Var::Y).unwrap();
        prop_assert_eq!(&(&q * &divisor) + &r, a);
        prop_assert!(r.degree_in(Var::Y).map_or(true, |d| d < 3));
    }

    #[test]
    fn bipoly_evaluation_is_a_homomorphism(a in bipoly(), b in bipoly(), x in coefficient(), y in coefficient()) {
        prop_assert_eq!((&a * &b).eval(&x, &y), a.eval(&x, &y) * b.eval(&x, &y));
    }

    #[test]
    fn membership_reconstructs(rows in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 1..5), weights in proptest::collection::vec(-3i64..=3, 5)) {
        let dense: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect();
        let m = ExactMatrix::from_dense(&dense);
        let combo: Vec<Rational> = (0..5).map(|j| dense.iter().zip(&weights).map(|(r, &w)| &r[j] * rat(w, 1)).sum()).collect();
        let v = SparseVec::from_dense(&combo);
        let reduced = row_reduce(&m);
        prop_assert_eq!(row_reduce(&reduced.reduced).reduced, reduced.reduced.clone());
        match membership(&v, &reduced.reduced).unwrap() {
            Membership::Member(coeffs) => {
                let mut back = SparseVec::new();
                for (c, row) in coeffs.iter().zip(reduced.reduced.rows()) {
                    back = back.add_scaled(c, row);
                }
                prop_assert_eq!(back, v);
            }
            Membership::NotMember { .. } => prop_assert!(false, "combination of rows must be a member"),
        }
    }
}

#[test]
fn theta_preserves_weight_and_is_an_involution() {
    for m in basis_up_to(Sector::Untwisted, 16, None).into_iter().chain(basis_up_to(Sector::Twisted, 11, None)) {
        let v = QVector::from_monomial(m);
        let t = v.theta();
        assert_eq!(t.max_weight2(), v.max_weight2());
        assert_eq!(t.theta(), v);
    }
}
