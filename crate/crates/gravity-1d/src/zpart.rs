use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use exact_core::{double_factorial, factorial, partitions_of, Rational, Verdict};
use series_algebra::{poly_log, GradedPoly, Monomial};

/// `Z` modulo degree `D`: a term `prod_j t_{j-1}^{m_j}` with `sum j m_j = 2n` has
/// coefficient `(2n-1)!! / prod (j!)^{m_j} m_j!`.
pub fn partition_function(d: u32) -> GradedPoly {
    static CACHE: OnceLock<Mutex<HashMap<u32, GradedPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(z) = cache.lock().unwrap().get(&d) {
        return z.clone();
    }
    let mut z = GradedPoly::one(d);
    for n in 1..=d / 2 {
        let numerator = double_factorial(2 * n as i64 - 1);
        for lambda in partitions_of(2 * n) {
            let mut den = exact_core::BigInt::from(1);
            let mut exps = Vec::new();
            for (j, m) in lambda.multiplicities() {
                den *= factorial(j as u64).pow(m) * factorial(m as u64);
                let a = j as usize - 1;
                if exps.len() <= a {
                    exps.resize(a + 1, 0);
                }
                exps[a] = m;
            }
            z.add_term(Monomial::from_exponents(exps), Rational::new(numerator.clone(), den));
        }
    }
    cache.lock().unwrap().insert(d, z.clone());
    z
}

/// `F = log Z` modulo degree `D`.
pub fn free_energy(d: u32) -> GradedPoly {
    poly_log(&partition_function(d)).expect("Z has constant term 1")
}

/// Genus attached to a free-energy monomial, `(sum a_i - n + 2) / 2`, if integral and non-negative.
pub fn genus_of(m: &Monomial) -> Option<u32> {
    let sum_a: i64 = m
        .exponents()
        .iter()
        .enumerate()
        .map(|(a, &e)| a as i64 * e as i64)
        .sum();
    let twice = sum_a - m.len() as i64 + 2;
    (twice >= 0 && twice % 2 == 0).then(|| (twice / 2) as u32)
}

/// Every nonzero monomial of `F` mod `D` carries a well-defined genus.
pub fn selection_rule_check(d: u32) -> Verdict {
    let f = free_energy(d);
    let bad = f.terms().find(|(m, _)| genus_of(m).is_none()).map(|(m, _)| m.to_string());
    match bad {
        Some(m) => Verdict::fail("selection rule", format!("monomial {m}")),
        None => Verdict::pass("selection rule", format!("{} monomials at D={d}", f.len())),
    }
}
