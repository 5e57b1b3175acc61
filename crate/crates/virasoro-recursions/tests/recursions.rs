use exact_core::{binomial, rat, BigInt, Rational};
use kp_npoint::{connected_npoint, AffineBackend, NPointBackend};
use num_traits::One;
use proptest::prelude::*;
use series_algebra::{MultiLaurent, NPointSeries};
use virasoro_recursions::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn thin_totals_match_cycle_formula() {
    let v = thin_total_check(14);
    assert!(v.passed, "{v}");
    assert!(thin_total_check(9).passed && thin_total_check(8).passed);
    assert!(thin_total_check(0).passed);
    let g1 = (1..4).map(|g| thin_W(g, 1).unwrap().to_series().unwrap()).fold(
        NPointSeries::new(1).unwrap(),
        |acc, s| if s.terms().count() > 0 { acc.sum(&s).unwrap() } else { acc },
    );
    assert_eq!(g1.coeff(&[2]), rat(1, 1));
    assert_eq!(g1.coeff(&[4]), rat(3, 1));
    assert_eq!(g1.coeff(&[6]), rat(15, 1));
}

#[test]
fn thin_correlators_are_homogeneous_and_symmetric() {
    for g in 0..=3 {
        for n in 1..=4usize {
            if 2 * g as usize + n > 8 || (g, n) == (0, 1) {
                continue;
            }
            let w = thin_W(g, n).unwrap();
            let d = ThinCorrelator::expected_degree(g, n);
            assert!(w.poly().terms().all(|(e, _)| e.iter().sum::<i32>() == d), "({g},{n})");
            for p in permutations(n) {
                assert_eq!(&w.poly().permute(&p), w.poly(), "({g},{n}) under {p:?}");
            }
        }
    }
}

#[test]
fn fat_totals_match_cycle_formula() {
    let v = fat_total_check(14, 3);
    assert!(v.passed, "{v}");
    let low = fat_total_check(8, 1);
    assert!(low.passed, "{low}");
    assert!(fat_total_check(0, 0).passed);
    assert_eq!(fat_W(1, 1, 3).unwrap().len(), 0);
}

#[test]
fn three_backends_agree() {
    let v = cross_pipeline_check(14, 8, 6);
    assert!(v.passed, "{v}");
}

#[test]
fn catalan_one_point() {
    let want: Vec<Rational> = [1, 1, 2, 5, 14, 42].iter().map(|&x| rat(x, 1)).collect();
    assert_eq!(fat_W01_expansion(6), want);
    let w = fat_W(0, 1, 11).unwrap();
    assert_eq!(w.coeff(&[2]), rat(1, 1));
    assert_eq!(w.coeff(&[10]), rat(42, 1));
    assert_eq!(w.len(), 5);
}

/// `1/(2(z1-z2)^2) (-1 + (z1 z2 - 4)/sqrt((z1^2-4)(z2^2-4)))` expanded in `e_i = 1/z_i`.
fn printed_two_point(order: u32) -> NPointSeries {
    let top = order as i32 + 2;
    // (1 - 4e^2)^{-1/2} = sum C(2k,k) e^{2k}
    let mut a = MultiLaurent::zero(2);
    let mut b = MultiLaurent::zero(2);
    for k in 0..=top / 2 {
        let c = binomial(2 * k as u64, k as u64);
        a.add_term(vec![2 * k, 0], c.clone());
        b.add_term(vec![0, 2 * k], c);
    }
    let mut cross = MultiLaurent::one(2);
    cross.add_term(vec![1, 1], BigInt::from(-4));
    let mut num = cross.mul_filtered(&a, |e| e.iter().sum::<i32>() <= top);
    num = num.mul_filtered(&b, |e| e.iter().sum::<i32>() <= top);
    num.add_term(vec![0, 0], BigInt::from(-1));
    // 1/(z1 - z2)^2 = e1^2 e2^2 / (e2 - e1)^2
    let q = num.div_by_difference(1, 0).unwrap().div_by_difference(1, 0).unwrap();
    let mut out = NPointSeries::new(2).unwrap();
    for (e, c) in q.sorted_terms() {
        let (x, y) = (e[0] + 2, e[1] + 2);
        if x >= y && x + y <= order as i32 && y >= 2 {
            let c = Rational::new(c, BigInt::from(2));
            out.set(&[(x - 1) as u32, (y - 1) as u32], c).unwrap();
        }
    }
    out
}

#[test]
fn two_point_matches_printed_closed_form() {
    for order in [4, 9, 16] {
        let ours = fat_W(0, 2, order).unwrap();
        let want = printed_two_point(order);
        assert_eq!(ours.first_difference(&want), None, "order {order}");
        assert!(!want.is_empty());
    }
    assert_eq!(fat_W(0, 2, 4).unwrap().coeff(&[1, 1]), rat(1, 1));
}

#[test]
fn involution_reproduces_the_kernel_identity() {
    // B(w1, w2) + B(w1, 1/w2) d(1/w2)/dw2 = dz1 dz2 / (z1 - z2)^2
    for (p, q) in [(rat(3, 1), rat(5, 2)), (rat(-7, 3), rat(2, 9)), (rat(11, 4), rat(-1, 5))] {
        let z = |w: &Rational| w + w.recip();
        let dz = |w: &Rational| Rational::one() - (w * w).recip();
        let lhs = ((&p - &q) * (&p - &q)).recip() - ((&p * &q - Rational::one()).pow(2)).recip();
        let rhs = dz(&p) * dz(&q) / (z(&p) - z(&q)).pow(2);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn fat_correlators_have_poles_only_at_branch_points() {
    for (g, n) in [(0, 3), (0, 4), (1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (0, 5)] {
        let w = fat_omega(g, n).unwrap();
        assert!(w.terms().all(|(k, _)| k.iter().all(|&e| e != 0)), "({g},{n})");
        assert!(w.max_pole_order() as i64 <= 6 * g as i64 - 4 + 2 * n as i64);
        let f = w.active_function(&w.terms().next().unwrap().0[1..]);
        // Denominator vanishes only at w = 1 or w = -1.
        for x in [rat(0, 1), rat(2, 1), rat(-3, 1), rat(1, 2)] {
            assert!(f.eval(&x).is_some());
        }
    }
}

#[test]
fn fat_dump_lists_pole_terms() {
    let d = fat_omega(0, 3).unwrap().dump();
    assert_eq!(d.lines().count(), 2);
    assert!(d.contains("(w1 - 1)^2 (w2 - 1)^2 (w3 - 1)^2"), "{d}");
}

#[test]
fn thin_backend_matches_affine() {
    let keys: Vec<Vec<u32>> = vec![vec![2], vec![3, 1], vec![1, 1, 2], vec![2, 2, 2, 2], vec![1, 1, 1, 1, 2, 2]];
    assert_eq!(ThinBackend.coefficients(&keys).unwrap(), AffineBackend.coefficients(&keys).unwrap());
    assert_eq!(ThinBackend.npoint(3, 12).unwrap(), connected_npoint(3, 12).unwrap());
    assert!(FatBackend { max_genus: 1 }.npoint(1, 14).is_err());
    assert_eq!(FatBackend { max_genus: 2 }.npoint(2, 12).unwrap(), connected_npoint(2, 12).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn thin_coefficients_are_the_cumulants(key in prop::collection::vec(1u32..8, 1..6)) {
        let mut thin = ThinCoefficients::new();
        let mut affine = kp_npoint::CumulantEngine::new();
        prop_assert_eq!(thin.total(&key), affine.coefficient(&key).unwrap());
    }

    #[test]
    fn rational_functions_evaluate_consistently(
        a in prop::collection::vec(-5i64..6, 1..4), b in prop::collection::vec(-5i64..6, 1..4),
        x in -20i64..20
    ) {
        let mut den_a = vec![3, 0, 1];
        den_a[1] = a[0];
        let f = RationalFn::from_coeffs(&a, &den_a);
        let g = RationalFn::from_coeffs(&b, &[2, 1]);
        let x = rat(x, 7);
        if let (Some(fx), Some(gx)) = (f.eval(&x), g.eval(&x)) {
            prop_assert_eq!(f.add(&g).eval(&x), Some(&fx + &gx));
            prop_assert_eq!(f.mul(&g).eval(&x), Some(fx * gx));
        }
    }
}

#[test]
fn unstable_and_zero_cases() {
    assert!(thin_W(-1, 2).unwrap().poly().is_zero());
    assert!(matches!(fat_omega(0, 2), Err(RecursionError::Unstable { .. })));
    assert_eq!(thin_genus(&[1, 1, 1, 1]), None);
    assert_eq!(thin_genus(&[2, 2]), Some(1));
}
