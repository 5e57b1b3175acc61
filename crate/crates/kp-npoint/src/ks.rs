use std::collections::BTreeMap;

use exact_core::{binomial, rat, BigInt, Rational, Verdict};
use num_traits::{One, Zero};

use crate::AffineCoords;

/// Laurent series in `z` known exactly for exponents `>= lo`; everything above `hi` is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentVector {
    lo: i32,
    hi: i32,
    coeffs: BTreeMap<i32, Rational>,
}

impl LaurentVector {
    pub fn zero(lo: i32, hi: i32) -> Self {
        LaurentVector { lo, hi, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(lo: i32, hi: i32, terms: impl IntoIterator<Item = (i32, Rational)>) -> Self {
        let mut v = LaurentVector::zero(lo, hi);
        for (e, c) in terms {
            v.add_term(e, c);
        }
        v
    }

    /// `f_n` of the 1D point, known down to `z^lo`.
    pub fn basis(n: u32, lo: i32) -> Self {
        let depth = (-lo).max(0) as u32;
        LaurentVector::from_terms(lo, n as i32, AffineCoords::one_dim().basis_vector(n, depth))
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    /// Number of exponents in the exact window.
    pub fn window(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    /// Terms below `lo` are dropped; the upper end grows as needed.
    pub fn add_term(&mut self, e: i32, c: Rational) {
        if e < self.lo || c.is_zero() {
            return;
        }
        self.hi = self.hi.max(e);
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Coefficient of `z^e`, or `None` below the exact window.
    pub fn coeff(&self, e: i32) -> Option<Rational> {
        (e >= self.lo).then(|| self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i32, &Rational)> {
        self.coeffs.iter()
    }

    /// Sum in the common exact window.
    pub fn add(&self, other: &LaurentVector) -> LaurentVector {
        let mut out = LaurentVector::zero(self.lo.max(other.lo), self.hi.max(other.hi));
        for (e, c) in self.coeffs.iter().chain(&other.coeffs) {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> LaurentVector {
        LaurentVector::from_terms(self.lo, self.hi, self.coeffs.iter().map(|(e, c)| (*e, c * k)))
    }

    /// First exponent in the common window where the two differ.
    pub fn first_difference(&self, other: &LaurentVector) -> Option<(i32, Rational, Rational)> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.max(other.hi);
        (lo..=hi).rev().find_map(|e| {
            let (a, b) = (self.coeff(e)?, other.coeff(e)?);
            (a != b).then_some((e, a, b))
        })
    }
}

/// Sum of terms `c z^p d^q`, kept with like terms combined.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KSOperator {
    terms: BTreeMap<(i32, u32), Rational>,
}

impl KSOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Rational, i32, u32)>) -> Self {
        let mut op = KSOperator::zero();
        for (c, p, q) in terms {
            op.add_term(c, p, q);
        }
        op
    }

    fn add_term(&mut self, c: Rational, p: i32, q: u32) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((p, q)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    /// `d + z - 1/z`.
    pub fn q_1d() -> Self {
        KSOperator::from_terms([(rat(1, 1), 0, 1), (rat(1, 1), 1, 0), (rat(-1, 1), -1, 0)])
    }

    /// `-z^{n+1} d - z^{n+2} + z^n`.
    pub fn q_n(n: i32) -> Self {
        KSOperator::from_terms([(rat(-1, 1), n + 1, 1), (rat(-1, 1), n + 2, 0), (rat(1, 1), n, 0)])
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, u32, &Rational)> {
        self.terms.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn add(&self, other: &KSOperator) -> KSOperator {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(c.clone(), p, q);
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> KSOperator {
        KSOperator::from_terms(self.terms.iter().map(|(&(p, q), c)| (c * k, p, q)))
    }

    /// `self o other`, normal ordered with the Leibniz rule
    /// `z^a d^b z^c d^d = sum_k C(b,k) (c)_k z^{a+c-k} d^{b-k+d}`.
    pub fn compose(&self, other: &KSOperator) -> KSOperator {
        let mut out = KSOperator::zero();
        for (&(a, b), c1) in &self.terms {
            for (&(c, d), c2) in &other.terms {
                let mut falling = BigInt::one();
                for k in 0..=b {
                    if k > 0 {
                        falling *= BigInt::from(c - k as i32 + 1);
                    }
                    if falling.is_zero() {
                        break;
                    }
                    let w = Rational::from_integer(binomial(b as u64, k as u64) * &falling);
                    out.add_term(c1 * c2 * w, a + c - k as i32, b - k + d);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &KSOperator) -> KSOperator {
        self.compose(other).add(&other.compose(self).scale(&rat(-1, 1)))
    }

    /// Largest `p - q`; the exact window of an image starts that far above the input's.
    pub fn shift(&self) -> i32 {
        self.terms.keys().map(|&(p, q)| p - q as i32).max().unwrap_or(0)
    }
}

pub fn ks_apply(op: &KSOperator, f: &LaurentVector) -> LaurentVector {
    let shift = op.shift();
    let mut out = LaurentVector::zero(f.lo + shift, f.hi + shift);
    for (&(p, q), c) in &op.terms {
        for (&e, a) in &f.coeffs {
            let mut falling = BigInt::one();
            for i in 0..q as i32 {
                falling *= BigInt::from(e - i);
            }
            out.add_term(e - q as i32 + p, c * a * Rational::from_integer(falling));
        }
    }
    out
}

fn compare(name: String, got: &LaurentVector, want: &LaurentVector, need: usize) -> Verdict {
    let lo = got.lo.max(want.lo);
    let hi = got.hi.max(want.hi);
    let span = (hi - lo + 1).max(0) as usize;
    if span < need {
        return Verdict::fail(name, format!("window of {span} coefficients, need {need}"));
    }
    match got.first_difference(want) {
        Some((e, a, b)) => Verdict::fail(name, format!("z^{e}: {a} vs {b}")),
        None => Verdict::pass(name, format!("{span} coefficients")),
    }
}

/// `Q f_0 = f_1` and `Q f_n = f_{n+1} + (n-1) f_{n-1}` on `window` coefficients, plus
/// `[Q_m, Q_n] = (m-n) Q_{m+n}` for `-1 <= m, n <= 4`.
pub fn ks_verify(n_max: u32, window: usize) -> Verdict {
    let q = KSOperator::q_1d();
    let lo = -(window as i32) - q.shift();
    let f = |n: u32| LaurentVector::basis(n, lo);
    let mut parts = vec![compare("Q f0 = z".into(), &ks_apply(&q, &f(0)), &f(1), window)];
    for n in 1..=n_max {
        let want = f(n + 1).add(&f(n - 1).scale(&rat(n as i64 - 1, 1)));
        let got = ks_apply(&q, &f(n));
        parts.push(compare(format!("Q f{n}"), &got, &want, window));
    }
    let mut bad = Vec::new();
    for m in -1..=4 {
        for n in -1..=4 {
            let lhs = KSOperator::q_n(m).commutator(&KSOperator::q_n(n));
            if lhs != KSOperator::q_n(m + n).scale(&rat((m - n) as i64, 1)) {
                bad.push(format!("[Q{m}, Q{n}]"));
            }
        }
    }
    parts.push(if bad.is_empty() {
        Verdict::pass("commutators", "36 pairs")
    } else {
        Verdict::fail("commutators", bad.join(", "))
    });
    if q != KSOperator::q_n(-1).scale(&rat(-1, 1)) {
        parts.push(Verdict::fail("Q = -Q_{-1}", ""));
    }
    Verdict::all("kac-schwarz", parts)
}
