use exact_core::{rat, Rational};
use kp_npoint::{AffineBackend, CumulantEngine};
use proptest::prelude::*;
use series_algebra::{BiSeries, NPointSeries};

use euler_char::*;

fn params(g: u32, n: u32) -> SpecializationParams {
    SpecializationParams::new(g, n).unwrap()
}

/// Direct product of the full two-variable series for every admitted term.
fn naive_specialize(npoints: &[NPointWindow], p: &SpecializationParams, include_y: bool) -> BiSeries {
    let factor = |j: u32| {
        if include_y {
            return tilde_V(j, p);
        }
        let mut s = p.window();
        for (e, c) in v_series(j, p.z_floor()) {
            s.add_term(0, e, c).unwrap();
        }
        s
    };
    let mut total = p.window();
    for w in npoints {
        for (key, c) in w.series.terms() {
            if !p.admits(key) {
                continue;
            }
            let mut term = p.window();
            term.add_term(0, 0, c / orbit_denominator(key)).unwrap();
            for &j in key {
                term = term.mul(&factor(j)).unwrap();
            }
            total = total.add(&term).unwrap();
        }
    }
    total
}

fn readable(s: &BiSeries, p: &SpecializationParams) -> Vec<(u32, i32, Rational)> {
    let mut out = Vec::new();
    for a in 0..=p.n_max {
        for e in p.read_floor()..=a as i32 {
            out.push((a, e, s.coeff(a, e).unwrap()));
        }
    }
    out
}

#[test]
fn tilde_v_matches_printed_data() {
    let p = params(7, 1);
    let printed: [(u32, &[(i32, i64, i64)]); 5] = [
        (1, &[(-1, -1, 12), (-3, 1, 120), (-5, -1, 252), (-7, 1, 240), (-9, -1, 132)]),
        (2, &[(-2, 1, 12), (-4, -1, 40), (-6, 5, 252), (-8, -7, 240), (-10, 3, 44)]),
        (3, &[(-1, 1, 1), (-3, -1, 6), (-5, 1, 10), (-7, -5, 42), (-9, 7, 30), (-11, -15, 22)]),
        (4, &[(-2, -1, 1), (-4, 1, 2), (-6, -1, 2), (-8, 5, 6), (-10, -21, 10), (-12, 15, 2)]),
        (5, &[(-3, 2, 1), (-5, -2, 1), (-7, 3, 1), (-9, -20, 3), (-11, 21, 1), (-13, -90, 1)]),
    ];
    for (n, terms) in printed {
        let v = tilde_V(n, &p);
        for &(e, num, den) in terms {
            assert_eq!(v.coeff(0, e).unwrap(), rat(num, den), "V~_{n} at z^{e}");
        }
        let y_part = if n == 1 { rat(1, 1) } else { rat(0, 1) };
        assert_eq!(v.coeff(1, 1).unwrap(), y_part);
    }
    let v0 = tilde_V(0, &params(3, 2));
    assert_eq!(v0.coeff(2, 2).unwrap(), rat(-1, 2));
    assert_eq!(v0.coeff(0, -2).unwrap(), rat(-1, 240));
    assert_eq!(v0.coeff(0, 0).unwrap(), rat(0, 1));
}

#[test]
fn worked_examples_from_term_lists() {
    // chi(Mbar_{1,1}): y z^0 in 1/2 V~_1^2 + 1/2 V~_1 V~_3 (the remaining listed terms carry no y).
    let listed_11: &[(&[u32], i64, i64)] = &[
        (&[2], 1, 2), (&[4], 1, 8), (&[1, 1], 1, 2), (&[1, 3], 1, 2),
        (&[2, 4], 1, 4), (&[2, 2], 1, 4), (&[3, 3], 5, 24), (&[4, 4], 1, 12),
    ];
    // chi(Mbar_{1,2}): y^2 z^0.
    let listed_12: &[(&[u32], i64, i64)] =
        &[(&[1, 1, 2], 1, 2), (&[1, 1, 3, 3], 1, 2), (&[1, 1, 4], 1, 4), (&[1, 1, 1, 3], 1, 6)];
    let mut engine = CumulantEngine::new();
    for (p, listed, row, want) in [(params(1, 1), listed_11, 1, rat(5, 12)), (params(1, 2), listed_12, 2, rat(1, 4))] {
        let mut windows: Vec<NPointWindow> = Vec::new();
        for (n, order) in p.required_orders() {
            windows.push(NPointWindow { series: NPointSeries::new(n).unwrap(), order });
        }
        for &(key, num, den) in listed {
            // The listed weight is the coefficient over prod mult! prod j!.
            let c = Rational::from_integer(engine.coefficient(key).unwrap());
            assert_eq!(&c / orbit_denominator(key), rat(num, den), "{key:?}");
            if let Some(w) = windows.iter_mut().find(|w| w.series.arity() == key.len()) {
                w.series.set(key, c).unwrap();
            }
        }
        let s = specialize(&windows, &p, true).unwrap();
        assert_eq!(s.coeff(row, 0).unwrap(), want);
    }
}

#[test]
fn fast_path_matches_direct_products() {
    for (g, n) in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 2), (0, 5), (4, 0)] {
        let p = params(g, n);
        let inputs = npoint_inputs(&p, &AffineBackend).unwrap();
        for include_y in [true, false] {
            let fast = specialize(&inputs, &p, include_y).unwrap();
            let slow = naive_specialize(&inputs, &p, include_y);
            assert_eq!(readable(&fast, &p), readable(&slow, &p), "({g},{n}) y = {include_y}");
        }
    }
}

#[test]
fn series_examples() {
    let p = params(2, 3);
    let s = chi_series(&p, Backend::Affine).unwrap();
    assert_eq!(s.coeff(1, 0).unwrap(), rat(5, 12));
    assert_eq!(s.coeff(3, 2).unwrap(), rat(1, 6));
    // y = 0: chi(Mbar_{2,0}) - chi(M_{2,0}) = 119/1440 + 1/240.
    assert_eq!(s.coeff(0, -2).unwrap(), rat(25, 288));
    let slice = specialize(&npoint_inputs(&p, &AffineBackend).unwrap(), &p, false).unwrap();
    for e in p.read_floor()..=0 {
        assert_eq!(slice.coeff(0, e).unwrap(), s.coeff(0, e).unwrap());
        assert_eq!(slice.coeff(1, e).unwrap(), rat(0, 1));
    }
    assert!(s.coeff(1, -3).is_err());
}

#[test]
fn full_table_matches_published_values() {
    let table = chi_table(&params(8, 6), Backend::Affine).unwrap();
    assert_eq!(table.len(), 59);
    assert_eq!(table.mismatches(&golden_table()), vec![]);
    assert_eq!(table.get(2, 0).unwrap(), &rat(119, 1440));
    assert_eq!(table.get(1, 3).unwrap(), &rat(17, 12));
    assert_eq!(
        table.get(8, 6).unwrap().to_string(),
        "866365437544472661827562757/18438836272496640000"
    );
}

#[test]
fn genus_zero_values_are_integers() {
    let table = chi_table(&params(0, 10), Backend::Affine).unwrap();
    let got: Vec<Rational> = (3..=10).map(|n| table.get(0, n).unwrap().clone()).collect();
    let want: Vec<Rational> = [1, 2, 7, 34, 213, 1630, 14747, 153946].iter().map(|&x| rat(x, 1)).collect();
    assert_eq!(got, want);
    assert!(got.iter().all(|c| c.is_integer()));
}

#[test]
fn worked_examples_through_every_backend() {
    for b in Backend::ALL {
        let t = chi_table(&params(1, 2), b).unwrap();
        assert_eq!(t.get(1, 1).unwrap(), &rat(5, 12), "{b}");
        assert_eq!(t.get(1, 2).unwrap(), &rat(1, 2), "{b}");
    }
}

#[test]
fn backends_agree() {
    let affine = chi_table(&params(4, 4), Backend::Affine).unwrap();
    assert_eq!(chi_table(&params(4, 4), Backend::Thin).unwrap(), affine);
    for (g, n) in [(2, 3), (3, 0)] {
        let fat = chi_table(&params(g, n), Backend::Fat).unwrap();
        assert_eq!(fat, affine.restricted(g, n), "fat on ({g},{n})");
    }
    assert_eq!(fat_genus_needed(&params(1, 3)), 0);
    assert_eq!(fat_genus_needed(&params(2, 1)), 1);
}

#[test]
fn input_errors() {
    let p = params(1, 2);
    let mut inputs = npoint_inputs(&p, &AffineBackend).unwrap();
    assert!(matches!(specialize(&inputs[1..], &p, true), Err(EulerError::MissingArity(2))));
    let mut dup = inputs.clone();
    dup.push(inputs[0].clone());
    assert!(matches!(specialize(&dup, &p, true), Err(EulerError::DuplicateArity(_))));
    inputs[0].order -= 1;
    assert!(matches!(specialize(&inputs, &p, true), Err(EulerError::Incomplete { .. })));
    assert!("ribbon".parse::<Backend>().is_err());
    assert_eq!("fat".parse::<Backend>().unwrap(), Backend::Fat);
    let t = chi_table(&p, Backend::Affine).unwrap();
    assert!(matches!(t.get(2, 1), Err(EulerError::OutsideWindow { .. })));
    assert!(matches!(t.get(1, 0), Err(EulerError::Unstable { .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn enlarging_the_window_changes_nothing(g in 0u32..4, n in 0u32..4, dg in 0u32..3, dn in 0u32..3) {
        prop_assume!(2 * g + n > 2);
        let small = chi_table(&params(g, n), Backend::Affine).unwrap();
        let large = chi_table(&params(g + dg, n + dn), Backend::Affine).unwrap();
        prop_assert_eq!(large.restricted(g, n), small);
    }
}
