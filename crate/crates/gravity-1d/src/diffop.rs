use exact_core::Rational;
use num_traits::Zero;
use series_algebra::GradedPoly;

/// `coeff * prod_{a in mult} t_a * prod_{b in diff} d/dt_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffTerm {
    pub coeff: Rational,
    pub mult: Vec<usize>,
    pub diff: Vec<usize>,
}

impl DiffTerm {
    /// Change of t-degree produced by this term.
    pub fn shift(&self) -> i64 {
        let up: i64 = self.mult.iter().map(|&a| a as i64 + 1).sum();
        let down: i64 = self.diff.iter().map(|&b| b as i64 + 1).sum();
        up - down
    }
}

/// Finite differential operator in the couplings with polynomial coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffOp {
    terms: Vec<DiffTerm>,
}

impl DiffOp {
    pub fn new() -> Self {
        DiffOp::default()
    }

    pub fn push(&mut self, coeff: Rational, mult: &[usize], diff: &[usize]) {
        if !coeff.is_zero() {
            self.terms.push(DiffTerm { coeff, mult: mult.to_vec(), diff: diff.to_vec() });
        }
    }

    pub fn terms(&self) -> &[DiffTerm] {
        &self.terms
    }

    /// Most negative degree shift (zero if every term raises degree).
    pub fn max_lowering(&self) -> u32 {
        self.terms.iter().map(|t| (-t.shift()).max(0)).max().unwrap_or(0) as u32
    }

    pub fn max_raising(&self) -> u32 {
        self.terms.iter().map(|t| t.shift().max(0)).max().unwrap_or(0) as u32
    }

    /// Applies the operator; the result keeps the cap of `p`.
    pub fn apply(&self, p: &GradedPoly) -> GradedPoly {
        let mut out = GradedPoly::zero(p.degree_cap());
        for t in &self.terms {
            let mut q = p.clone();
            for &b in &t.diff {
                q = q.derivative(b);
            }
            for &a in &t.mult {
                q = q.mul_var(a);
            }
            out = out.add(&q.scale(&t.coeff));
        }
        out
    }

    /// Sum of two operators.
    pub fn plus(&self, other: &DiffOp) -> DiffOp {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        DiffOp { terms }
    }

    pub fn scaled(&self, k: &Rational) -> DiffOp {
        let mut out = DiffOp::new();
        for t in &self.terms {
            out.push(&t.coeff * k, &t.mult, &t.diff);
        }
        out
    }
}
