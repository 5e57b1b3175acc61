use exact_core::{double_factorial, factorial, rat, Rational};
use gravity_1d::*;
use proptest::prelude::*;
use series_algebra::{poly_exp, GradedPoly, Monomial};

/// Gaussian expectation of `exp(sum_j t_{j-1} x^j / j!)`: the x-power of a monomial equals its degree.
fn gaussian_oracle(d: u32) -> GradedPoly {
    let mut action = GradedPoly::zero(d);
    for j in 1..=d as usize {
        let c = Rational::new(1.into(), factorial(j as u64));
        action.add_term(Monomial::from_indices(&[j - 1]), c);
    }
    let e = poly_exp(&action).unwrap();
    let mut out = GradedPoly::zero(d);
    for (m, c) in e.terms() {
        let deg = m.degree();
        if deg % 2 == 0 {
            let moment = Rational::from_integer(double_factorial(deg as i64 - 1));
            out.add_term(m.clone(), c * moment);
        }
    }
    out
}

#[test]
fn closed_sum_matches_gaussian_expectation() {
    for d in [0, 1, 2, 5, 8, 12] {
        assert_eq!(partition_function(d), gaussian_oracle(d), "D = {d}");
    }
}

#[test]
fn both_virasoro_families_annihilate_z() {
    for family in [Family::Original, Family::Reformulated] {
        for m in -1..=5 {
            let v = virasoro_check(family, m, 12);
            assert!(v.passed, "{v}");
        }
    }
}

#[test]
fn flow_and_polymer_at_degree_twelve() {
    for n in 0..=5 {
        let v = flow_check(n, 12);
        assert!(v.passed, "{v}");
    }
    let v = polymer_check(12);
    assert!(v.passed, "{v}");
}

#[test]
fn cut_and_join_reproduces_z() {
    for d in 0..=12 {
        assert_eq!(cut_and_join_Z(d), partition_function(d), "D = {d}");
    }
    assert_eq!(cut_and_join_Z(2).dump(), "1\t1\n1/2\tt0^2\n1/2\tt1\n");
}

#[test]
fn selection_rule_holds() {
    for d in 1..=12 {
        let v = selection_rule_check(d);
        assert!(v.passed, "{v}");
    }
}

#[test]
fn reading_near_the_boundary_is_not_asserted() {
    // Beyond the determined window the image of Z is generally nonzero.
    let op = VirasoroOp::new(2, Family::Original).unwrap();
    let (image, window) = apply_virasoro(&op, &partition_function(8));
    assert_eq!(window, Some(4));
    assert!(image.terms().all(|(m, _)| m.degree() > 4));
    assert!(!image.is_zero());
}

fn random_poly() -> impl Strategy<Value = GradedPoly> {
    prop::collection::vec((prop::collection::vec(0usize..5, 0..4), -6i64..7, 1i64..4), 1..5)
        .prop_map(|terms| {
            let mut p = GradedPoly::zero(12);
            for (idx, a, b) in terms {
                p.add_term(Monomial::from_indices(&idx), rat(a, b));
            }
            p
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn original_commutators(p in random_poly()) {
        for m in -1..=3 {
            for n in -1..=3 {
                let v = commutator_check(Family::Original, m, n, &p);
                prop_assert!(v.passed, "{}", v);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reformulated_commutators(p in random_poly()) {
        for m in -1..=3 {
            for n in -1..=3 {
                let v = commutator_check(Family::Reformulated, m, n, &p);
                prop_assert!(v.passed, "{}", v);
            }
        }
    }
}
