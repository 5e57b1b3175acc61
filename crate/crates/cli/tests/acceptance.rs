//! Acceptance suite: one PASS/FAIL line per criterion, exit status nonzero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use euler_char::{chi_table, orbit_denominator, specialize, Backend, ChiTable, NPointWindow, SpecializationParams};
use exact_core::{binomial, rat, BigInt, Partition, Rational};
use gravity_1d::{cut_and_join_Z, flow_check, partition_function, polymer_check, virasoro_check, Family};
use kp_npoint::golden::{golden_npoint, golden_order, MAX_ARITY};
use kp_npoint::{connected_npoint, ks_verify, CumulantEngine};
use series_algebra::{MultiLaurent, NPointSeries};
use symmetric_functions::{h_in_p, verify_bosonic_Z, SymFunc};
use virasoro_recursions::{cross_pipeline_check, fat_W, fat_W01_expansion};

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn params(g: u32, n: u32) -> SpecializationParams {
    SpecializationParams::new(g, n).unwrap()
}

fn chi_table_reproduction() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_moduli-euler"))
        .args(["chi", "--gmax", "8", "--nmax", "6", "--backend", "affine", "--gold"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.success(), || String::from_utf8_lossy(&out.stderr).into_owned())?;
    let table = ChiTable::from_csv(&stdout).map_err(|e| e.to_string())?;
    ensure(table.len() == 59, || format!("{} entries", table.len()))?;
    for (g, n, want) in [
        (2, 0, "119/1440"),
        (1, 3, "17/12"),
        (8, 6, "866365437544472661827562757/18438836272496640000"),
    ] {
        let got = table.get(g, n).map_err(|e| e.to_string())?.to_string();
        ensure(got == want, || format!("({g},{n}) = {got}"))?;
    }
    ensure(elapsed <= Duration::from_secs(120), || format!("took {elapsed:?}"))?;
    Ok(format!("59 entries match the published table in {:.1?}", elapsed))
}

fn genus_zero_sequence() -> Outcome {
    let table = chi_table(&params(0, 10), Backend::Affine).map_err(|e| e.to_string())?;
    let got: Vec<Rational> = (3..=10).map(|n| table.get(0, n).unwrap().clone()).collect();
    let want: Vec<Rational> = [1, 2, 7, 34, 213, 1630, 14747, 153946].iter().map(|&x| rat(x, 1)).collect();
    ensure(got == want, || format!("{got:?}"))?;
    Ok("1, 2, 7, 34, 213, 1630, 14747, 153946".into())
}

/// Specializes exactly the listed terms, after checking each listed weight.
fn from_term_list(p: &SpecializationParams, listed: &[(&[u32], i64, i64)], row: u32) -> Result<Rational, String> {
    let mut engine = CumulantEngine::new();
    let mut windows: Vec<NPointWindow> = p
        .required_orders()
        .into_iter()
        .map(|(n, order)| NPointWindow { series: NPointSeries::new(n).unwrap(), order })
        .collect();
    for &(key, num, den) in listed {
        let c = Rational::from_integer(engine.coefficient(key).map_err(|e| e.to_string())?);
        ensure(&c / orbit_denominator(key) == rat(num, den), || format!("weight of {key:?}"))?;
        if let Some(w) = windows.iter_mut().find(|w| w.series.arity() == key.len()) {
            w.series.set(key, c).unwrap();
        }
    }
    let s = specialize(&windows, p, true).map_err(|e| e.to_string())?;
    s.coeff(row, 0).map_err(|e| e.to_string())
}

fn worked_examples() -> Outcome {
    let listed_11: &[(&[u32], i64, i64)] = &[
        (&[2], 1, 2), (&[4], 1, 8), (&[1, 1], 1, 2), (&[1, 3], 1, 2),
        (&[2, 4], 1, 4), (&[2, 2], 1, 4), (&[3, 3], 5, 24), (&[4, 4], 1, 12),
    ];
    let listed_12: &[(&[u32], i64, i64)] =
        &[(&[1, 1, 2], 1, 2), (&[1, 1, 3, 3], 1, 2), (&[1, 1, 4], 1, 4), (&[1, 1, 1, 3], 1, 6)];
    let c11 = from_term_list(&params(1, 1), listed_11, 1)?;
    let c12 = from_term_list(&params(1, 2), listed_12, 2)?;
    ensure(c11 == rat(5, 12) && c12 == rat(1, 4), || format!("term lists give {c11}, {c12}"))?;
    for b in Backend::ALL {
        let t = chi_table(&params(1, 2), b).map_err(|e| e.to_string())?;
        let (x, y) = (t.get(1, 1).unwrap(), t.get(1, 2).unwrap());
        ensure(*x == rat(5, 12) && *y == rat(1, 2), || format!("{b}: {x}, {y}"))?;
    }
    Ok("5/12 and 1/2 from the term lists and from the affine, thin and fat backends".into())
}

fn npoint_golden() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let mut computed = Vec::new();
    for n in 1..=MAX_ARITY {
        let gold = golden_npoint(n).ok_or("missing golden data")?;
        let ours = connected_npoint(n, golden_order(n).unwrap()).map_err(|e| e.to_string())?;
        for (key, c) in gold.terms() {
            ensure(&ours.coeff(key) == c, || format!("G_({n}) at {key:?}: {}", ours.coeff(key)))?;
            count += 1;
        }
        computed.push(ours);
    }
    // Printed as c / z^{(e_1, ..., e_n)} with e_i = j_i + 1.
    for (exps, c) in [
        (&[3u32, 3][..], 2),
        (&[5, 5], 96),
        (&[2, 2, 2, 4], 6),
        (&[3, 3, 3, 3, 3], 384),
        (&[2, 2, 2, 2, 2, 6], 120),
    ] {
        let key: Vec<u32> = exps.iter().map(|e| e - 1).collect();
        let got = computed[key.len() - 1].coeff(&key);
        ensure(got == rat(c, 1), || format!("z^{exps:?}: {got}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{count} published coefficients of G_(1)..G_(6) in {elapsed:.1?}"))
}

fn cross_pipeline() -> Outcome {
    let v = cross_pipeline_check(14, 8, 6);
    ensure(v.passed, || v.to_string())?;
    Ok(v.detail)
}

fn constraints() -> Outcome {
    let mut checks = Vec::new();
    for family in [Family::Original, Family::Reformulated] {
        checks.extend((-1..=5).map(|m| virasoro_check(family, m, 12)));
    }
    checks.extend((0..=5).map(|n| flow_check(n, 12)));
    checks.push(polymer_check(12));
    if let Some(bad) = checks.iter().find(|v| !v.passed) {
        return Err(bad.to_string());
    }
    Ok(format!("{} checks at D = 12", checks.len()))
}

fn cut_and_join() -> Outcome {
    let (a, b) = (cut_and_join_Z(12), partition_function(12));
    ensure(a == b, || format!("{:?}", a.first_difference(&b, 12)))?;
    Ok(format!("{} terms at D = 12", b.len()))
}

fn expansion(terms: &[(&[u32], i64, i64)], cap: u32) -> SymFunc {
    let mut s = SymFunc::zero(cap);
    for (parts, a, b) in terms {
        s.add_term(Partition::new(parts.to_vec()), rat(*a, *b));
    }
    s
}

fn bosonic() -> Outcome {
    let v = verify_bosonic_Z(12);
    ensure(v.passed, || v.to_string())?;
    let listings: [(u32, &[(&[u32], i64, i64)]); 4] = [
        (2, &[(&[1, 1], 1, 2), (&[2], 1, 2)]),
        (4, &[(&[1, 1, 1, 1], 1, 24), (&[2, 1, 1], 1, 4), (&[2, 2], 1, 8), (&[3, 1], 1, 3), (&[4], 1, 4)]),
        (6, &[
            (&[1, 1, 1, 1, 1, 1], 1, 720), (&[2, 1, 1, 1, 1], 1, 48), (&[2, 2, 1, 1], 1, 16),
            (&[3, 1, 1, 1], 1, 18), (&[2, 2, 2], 1, 48), (&[3, 2, 1], 1, 6), (&[4, 1, 1], 1, 8),
            (&[5, 1], 1, 5), (&[4, 2], 1, 8), (&[3, 3], 1, 18), (&[6], 1, 6),
        ]),
        (8, &[
            (&[1; 8], 1, 40320), (&[2, 1, 1, 1, 1, 1, 1], 1, 1440), (&[3, 1, 1, 1, 1, 1], 1, 360),
            (&[2, 2, 1, 1, 1, 1], 1, 192), (&[3, 2, 1, 1, 1], 1, 36), (&[4, 1, 1, 1, 1], 1, 96),
            (&[2, 2, 2, 1, 1], 1, 96), (&[5, 1, 1, 1], 1, 30), (&[3, 3, 1, 1], 1, 36),
            (&[2, 2, 2, 2], 1, 384), (&[4, 2, 1, 1], 1, 16), (&[3, 2, 2, 1], 1, 24),
            (&[6, 1, 1], 1, 12), (&[4, 2, 2], 1, 32), (&[3, 3, 2], 1, 36), (&[5, 2, 1], 1, 10),
            (&[4, 3, 1], 1, 12), (&[4, 4], 1, 32), (&[6, 2], 1, 12), (&[5, 3], 1, 15),
            (&[7, 1], 1, 7), (&[8], 1, 8),
        ]),
    ];
    for (k, terms) in listings {
        ensure(h_in_p(k) == expansion(terms, k), || format!("h_{k}"))?;
    }
    Ok(format!("{}; h_2, h_4, h_6, h_8 term for term", v.detail))
}

fn kac_schwarz() -> Outcome {
    let v = ks_verify(20, 40);
    ensure(v.passed, || v.to_string())?;
    Ok(v.detail)
}

/// `1/(2(z1-z2)^2) (-1 + (z1 z2 - 4)/sqrt((z1^2-4)(z2^2-4)))`, expanded in `1/z_i`.
fn printed_two_point(order: u32) -> NPointSeries {
    let top = order as i32 + 2;
    let (mut a, mut b) = (MultiLaurent::zero(2), MultiLaurent::zero(2));
    for k in 0..=top / 2 {
        let c = binomial(2 * k as u64, k as u64);
        a.add_term(vec![2 * k, 0], c.clone());
        b.add_term(vec![0, 2 * k], c);
    }
    let mut num = MultiLaurent::one(2);
    num.add_term(vec![1, 1], BigInt::from(-4));
    num = num.mul_filtered(&a, |e| e.iter().sum::<i32>() <= top);
    num = num.mul_filtered(&b, |e| e.iter().sum::<i32>() <= top);
    num.add_term(vec![0, 0], BigInt::from(-1));
    let q = num.div_by_difference(1, 0).unwrap().div_by_difference(1, 0).unwrap();
    let mut out = NPointSeries::new(2).unwrap();
    for (e, c) in q.sorted_terms() {
        let (x, y) = (e[0] + 2, e[1] + 2);
        if x >= y && y >= 2 && x + y <= order as i32 {
            out.set(&[(x - 1) as u32, (y - 1) as u32], Rational::new(c, BigInt::from(2))).unwrap();
        }
    }
    out
}

fn fat_base_cases() -> Outcome {
    let catalan: Vec<Rational> = [1, 1, 2, 5, 14, 42].iter().map(|&x| rat(x, 1)).collect();
    let got = fat_W01_expansion(6);
    ensure(got == catalan, || format!("{got:?}"))?;
    let order = 20;
    let w02 = fat_W(0, 2, order).map_err(|e| e.to_string())?;
    let want = printed_two_point(order);
    ensure(w02.first_difference(&want).is_none(), || format!("{:?}", w02.first_difference(&want)))?;
    Ok(format!("Catalan 1, 1, 2, 5, 14, 42; two-point closed form on {} orbits", want.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("chi table reproduction", chi_table_reproduction),
        ("genus-0 integer sequence", genus_zero_sequence),
        ("worked examples", worked_examples),
        ("n-point golden data", npoint_golden),
        ("cross-pipeline equivalence", cross_pipeline),
        ("Virasoro, flow and polymer", constraints),
        ("cut-and-join", cut_and_join),
        ("bosonic identity", bosonic),
        ("Kac-Schwarz", kac_schwarz),
        ("fat base cases", fat_base_cases),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{:.1?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{:.1?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
