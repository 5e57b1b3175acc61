use exact_core::{factorial, rat, Rational, Verdict};
use series_algebra::GradedPoly;

use crate::{partition_function, DiffOp, GravityError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// First-order operators `L_m`.
    Original,
    /// `L_m^{1D}`, with the second-derivative terms obtained from the flow equations.
    Reformulated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VirasoroOp {
    m: i32,
    family: Family,
}

fn fact(n: usize) -> Rational {
    Rational::from_integer(factorial(n as u64))
}

impl VirasoroOp {
    pub fn new(m: i32, family: Family) -> Result<Self, GravityError> {
        if m < -1 {
            return Err(GravityError::BadIndex(m));
        }
        Ok(VirasoroOp { m, family })
    }

    pub fn index(&self) -> i32 {
        self.m
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The operator restricted to couplings `t_a` with `a + 1 <= cap`.
    pub fn to_diff_op(&self, cap: u32) -> DiffOp {
        let top = cap as usize; // derivative indices run over 0..top
        let mut op = DiffOp::new();
        let one = rat(1, 1);
        match self.m {
            -1 => {
                op.push(one.clone(), &[0], &[]);
                for n in 1..=top {
                    op.push(one.clone(), &[n], &[n - 1]);
                }
                op.push(rat(-1, 1), &[], &[0]);
            }
            0 => {
                op.push(one, &[], &[]);
                for n in 0..top {
                    op.push(rat(n as i64 + 1, 1), &[n], &[n]);
                }
                op.push(rat(-2, 1), &[], &[1]);
            }
            m => {
                let m = m as usize;
                match self.family {
                    Family::Original => {
                        op.push(fact(m + 1), &[], &[m - 1]);
                    }
                    Family::Reformulated => {
                        op.push(rat(m as i64 + 3, 2) * fact(m), &[], &[m - 1]);
                        for m1 in 1..m {
                            let c = fact(m1) * fact(m - m1) * rat(1, 2);
                            op.push(c, &[], &[m1 - 1, m - m1 - 1]);
                        }
                    }
                }
                for n in 0..top.saturating_sub(m) {
                    op.push(fact(m + n + 1) / fact(n), &[n], &[m + n]);
                }
                op.push(-fact(m + 2), &[], &[m + 1]);
            }
        }
        op
    }

    /// Output degrees up to `D - (m + 2)` are determined by an input known mod degree `D`.
    pub fn lowering(&self) -> u32 {
        (self.m + 2) as u32
    }
}

/// Applies the operator to `p`; only the window returned alongside is meaningful.
pub fn apply_virasoro(op: &VirasoroOp, p: &GradedPoly) -> (GradedPoly, Option<u32>) {
    let cap = p.degree_cap();
    let out = op.to_diff_op(cap).apply(p);
    (out, cap.checked_sub(op.lowering()))
}

/// `L_m Z = 0` on the determined window.
pub fn virasoro_check(family: Family, m: i32, d: u32) -> Verdict {
    let name = format!("{family:?} L_{m} Z = 0 at D={d}");
    let op = match VirasoroOp::new(m, family) {
        Ok(op) => op,
        Err(e) => return Verdict::fail(name, e.to_string()),
    };
    let (image, window) = apply_virasoro(&op, &partition_function(d));
    let Some(window) = window else {
        return Verdict::pass(name, "empty window");
    };
    let zero = GradedPoly::zero(d);
    match image.first_difference(&zero, window) {
        Some((mono, c, _)) => Verdict::fail(name, format!("{c} at {mono}")),
        None => Verdict::pass(name, format!("window {window}")),
    }
}

/// `[L_m, L_n] - (m - n) L_{m+n}` annihilates the polynomial `p` (treated as exact).
pub fn commutator_check(family: Family, m: i32, n: i32, p: &GradedPoly) -> Verdict {
    let name = format!("{family:?} [L_{m}, L_{n}]");
    let deg = p.terms().map(|(mono, _)| mono.degree()).max().unwrap_or(0);
    let cap = deg + 4;
    let p = p.with_cap(cap);
    let (Ok(a), Ok(b)) = (VirasoroOp::new(m, family), VirasoroOp::new(n, family)) else {
        return Verdict::fail(name, "index below -1");
    };
    let (a, b) = (a.to_diff_op(cap), b.to_diff_op(cap));
    let lhs = a.apply(&b.apply(&p)).sub(&b.apply(&a.apply(&p)));
    let rhs = if m == n {
        GradedPoly::zero(cap)
    } else {
        let ab = VirasoroOp::new(m + n, family).expect("m + n >= -1 when m != n");
        ab.to_diff_op(cap).apply(&p).scale(&rat((m - n) as i64, 1))
    };
    match lhs.first_difference(&rhs, cap) {
        Some((mono, l, r)) => Verdict::fail(name, format!("{l} vs {r} at {mono}")),
        None => Verdict::pass(name, ""),
    }
}

/// `dZ/dt_n = d^{n+1}Z/dt_0^{n+1} / (n+1)!` mod degree `D - n - 1`.
pub fn flow_check(n: usize, d: u32) -> Verdict {
    let name = format!("flow n={n} at D={d}");
    let z = partition_function(d);
    let Some(window) = d.checked_sub(n as u32 + 1) else {
        return Verdict::pass(name, "empty window");
    };
    let lhs = z.derivative(n);
    let mut rhs = z.clone();
    for _ in 0..=n {
        rhs = rhs.derivative(0);
    }
    let rhs = rhs.scale(&(rat(1, 1) / fact(n + 1)));
    match lhs.first_difference(&rhs, window) {
        Some((mono, l, r)) => Verdict::fail(name, format!("{l} vs {r} at {mono}")),
        None => Verdict::pass(name, format!("window {window}")),
    }
}

/// `sum_n (t_n - delta_{n,1}) / n! d^n Z/dt_0^n = 0` mod degree `D - 1`.
pub fn polymer_check(d: u32) -> Verdict {
    let name = format!("polymer at D={d}");
    let z = partition_function(d);
    let mut total = GradedPoly::zero(d);
    let mut deriv = z;
    for n in 0..=d as usize {
        let k = rat(1, 1) / fact(n);
        total = total.add(&deriv.mul_var(n).scale(&k));
        if n == 1 {
            total = total.sub(&deriv);
        }
        deriv = deriv.derivative(0);
    }
    let Some(window) = d.checked_sub(1) else {
        return Verdict::pass(name, "empty window");
    };
    match total.first_difference(&GradedPoly::zero(d), window) {
        Some((mono, c, _)) => Verdict::fail(name, format!("{c} at {mono}")),
        None => Verdict::pass(name, format!("window {window}")),
    }
}
