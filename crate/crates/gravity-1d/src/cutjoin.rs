use exact_core::{factorial, rat, Rational};
use series_algebra::GradedPoly;

use crate::DiffOp;

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

/// The degree-raising operator `M` with `Z = exp(M)(1)`, restricted to couplings below `cap`.
pub fn cut_and_join_operator(cap: u32) -> DiffOp {
    let top = cap as usize;
    let mut op = DiffOp::new();
    let half = rat(1, 2);
    for k in 0..top {
        for n in 0..top {
            if n + k >= 1 && n + k <= top {
                let c = &half * fact(n + k) / (fact(n) * fact(k));
                op.push(c, &[k, n], &[n + k - 1]);
            }
        }
    }
    for n in 2..top {
        for i in 1..n {
            let j = n - i;
            let c = &half * fact(i) * fact(j) / fact(n + 1);
            op.push(c, &[n + 1], &[i - 1, j - 1]);
        }
    }
    for n in 0..top {
        op.push(rat(1, n as i64 + 2), &[n + 2], &[n]);
    }
    op.push(half.clone(), &[0, 0], &[]);
    op.push(half, &[1], &[]);
    op
}

/// `exp(M)(1)` mod degree `D`; `M` raises degree by 2, so `D/2` applications suffice.
#[allow(non_snake_case)]
pub fn cut_and_join_Z(d: u32) -> GradedPoly {
    let op = cut_and_join_operator(d);
    let mut out = GradedPoly::one(d);
    let mut term = GradedPoly::one(d);
    for k in 1..=d / 2 {
        term = op.apply(&term).scale(&rat(1, k as i64));
        out = out.add(&term);
    }
    out
}
