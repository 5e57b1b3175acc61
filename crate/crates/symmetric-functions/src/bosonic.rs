use exact_core::{double_factorial, factorial, Partition, Rational, Verdict};
use gravity_1d::partition_function;
use series_algebra::GradedPoly;

use crate::{h_in_p, SymFunc};

/// Rewrites a coupling polynomial under `t_a = a! p_{a+1}`; t-degree becomes p-weight.
pub fn substitute_couplings(p: &GradedPoly) -> SymFunc {
    let mut out = SymFunc::zero(p.degree_cap());
    for (m, c) in p.terms() {
        let mut parts = Vec::new();
        let mut k = c.clone();
        for (a, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                parts.push(a as u32 + 1);
                k *= Rational::from_integer(factorial(a as u64));
            }
        }
        out.add_term(Partition::new(parts), k);
    }
    out
}

/// `Z` under `t_a = a! p_{a+1}` equals `1 + sum_k (2k+1)!! h_{2k+2}` up to weight `D`.
#[allow(non_snake_case)]
pub fn verify_bosonic_Z(d: u32) -> Verdict {
    let name = format!("bosonic Z at weight {d}");
    let lhs = substitute_couplings(&partition_function(d));
    let mut rhs = SymFunc::one(d);
    for k in 0..d / 2 {
        if 2 * k + 2 > d {
            break;
        }
        let c = Rational::from_integer(double_factorial(2 * k as i64 + 1));
        rhs = rhs.add(&h_in_p(2 * k + 2).scale(&c));
    }
    let diff = lhs.sub(&rhs);
    let first = diff.terms().next().map(|(lambda, c)| format!("difference {c} at p{lambda}"));
    match first {
        Some(detail) => Verdict::fail(name, detail),
        None => Verdict::pass(name, format!("{} terms", lhs.len())),
    }
}
