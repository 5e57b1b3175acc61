use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use exact_core::{format_rational, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::SeriesError;

/// Monomial `prod_a t_a^{e_a}` stored as the exponent vector without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    /// Monomial from a list of coupling indices, e.g. `[0, 0, 1]` is `t0^2 t1`.
    pub fn from_indices(indices: &[usize]) -> Self {
        let mut exps = Vec::new();
        for &a in indices {
            if exps.len() <= a {
                exps.resize(a + 1, 0);
            }
            exps[a] += 1;
        }
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exponent(&self, a: usize) -> u32 {
        self.0.get(a).copied().unwrap_or(0)
    }

    /// Graded degree `sum_a (a + 1) e_a`.
    pub fn degree(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(a, &e)| (a as u32 + 1) * e)
            .sum()
    }

    /// Number of factors.
    pub fn len(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let exps = (0..n).map(|a| self.exponent(a) + other.exponent(a)).collect();
        Monomial(exps)
    }

    pub fn with_shift(&self, a: usize, delta: i32) -> Option<Monomial> {
        let e = self.exponent(a) as i32 + delta;
        if e < 0 {
            return None;
        }
        let mut exps = self.0.clone();
        if exps.len() <= a {
            exps.resize(a + 1, 0);
        }
        exps[a] = e as u32;
        Some(Monomial::from_exponents(exps))
    }

    /// Parses `t0^2 t1`; `1` or the empty string is the unit monomial.
    pub fn parse(s: &str) -> Result<Monomial, SeriesError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Monomial::one());
        }
        let err = || SeriesError::Parse(s.to_string());
        let mut exps: Vec<u32> = Vec::new();
        for factor in s.split_whitespace() {
            let body = factor.strip_prefix('t').ok_or_else(err)?;
            let (idx, pow) = match body.split_once('^') {
                Some((i, p)) => (i, p.parse::<u32>().map_err(|_| err())?),
                None => (body, 1),
            };
            let a: usize = idx.parse().map_err(|_| err())?;
            if exps.len() <= a {
                exps.resize(a + 1, 0);
            }
            exps[a] += pow;
        }
        Ok(Monomial::from_exponents(exps))
    }
}

impl Ord for Monomial {
    /// Degree first; within a degree, larger exponents of lower couplings come first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            for a in 0..n {
                match other.exponent(a).cmp(&self.exponent(a)) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (a, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{a}")?;
            } else {
                write!(f, "t{a}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `t_0, t_1, ...` truncated at graded degree `D`, with `deg t_a = a + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoly {
    degree_cap: u32,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(degree_cap: u32) -> Self {
        GradedPoly {
            degree_cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree_cap: u32) -> Self {
        GradedPoly::constant(Rational::one(), degree_cap)
    }

    pub fn constant(c: Rational, degree_cap: u32) -> Self {
        let mut p = GradedPoly::zero(degree_cap);
        p.add_term(Monomial::one(), c);
        p
    }

    /// The coupling `t_a` (zero if it does not fit under the cap).
    pub fn var(a: usize, degree_cap: u32) -> Self {
        let mut p = GradedPoly::zero(degree_cap);
        p.add_term(Monomial::from_indices(&[a]), Rational::one());
        p
    }

    pub fn from_terms<I>(terms: I, degree_cap: u32) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = GradedPoly::zero(degree_cap);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of a monomial written as text, e.g. `"t0^2 t1"`. Panics on bad input.
    pub fn coeff_of(&self, monomial: &str) -> Rational {
        self.coeff(&Monomial::parse(monomial).expect("monomial text"))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Adds `c * m`, dropping it if `m` exceeds the cap; zero results are removed.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() || m.degree() > self.degree_cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        let mut out = self.clone();
        out.degree_cap = self.degree_cap.min(other.degree_cap);
        out.terms.retain(|m, _| m.degree() <= out.degree_cap);
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> GradedPoly {
        if k.is_zero() {
            return GradedPoly::zero(self.degree_cap);
        }
        GradedPoly {
            degree_cap: self.degree_cap,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Product truncated at the (common) cap.
    pub fn mul(&self, other: &GradedPoly) -> Result<GradedPoly, SeriesError> {
        if self.degree_cap != other.degree_cap {
            return Err(SeriesError::MismatchedDegree(self.degree_cap, other.degree_cap));
        }
        let cap = self.degree_cap;
        let mut out = GradedPoly::zero(cap);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > cap {
                    // Terms are sorted by degree, so the rest of this row is over the cap.
                    break;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Drops every term above degree `d` and lowers the cap to `d`.
    pub fn truncate(&self, d: u32) -> GradedPoly {
        let cap = d.min(self.degree_cap);
        GradedPoly {
            degree_cap: cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Same terms with a different cap (terms above the new cap are dropped).
    pub fn with_cap(&self, cap: u32) -> GradedPoly {
        GradedPoly {
            degree_cap: cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= cap)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// `d/dt_a`; the cap is kept.
    pub fn derivative(&self, a: usize) -> GradedPoly {
        let mut out = GradedPoly::zero(self.degree_cap);
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            if e == 0 {
                continue;
            }
            let lowered = m.with_shift(a, -1).expect("positive exponent");
            out.add_term(lowered, c * Rational::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Multiplication by `t_a`, truncated at the cap.
    pub fn mul_var(&self, a: usize) -> GradedPoly {
        let mut out = GradedPoly::zero(self.degree_cap);
        for (m, c) in &self.terms {
            out.add_term(m.with_shift(a, 1).expect("raise"), c.clone());
        }
        out
    }

    /// Terms of degree at most `d` are equal.
    pub fn agrees_up_to(&self, other: &GradedPoly, d: u32) -> bool {
        self.first_difference(other, d).is_none()
    }

    /// Lowest monomial of degree at most `d` where the two differ.
    pub fn first_difference(&self, other: &GradedPoly, d: u32) -> Option<(Monomial, Rational, Rational)> {
        let mut keys: Vec<&Monomial> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .filter(|m| m.degree() <= d)
            .collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (a, b) = (self.coeff(m), other.coeff(m));
            (a != b).then(|| (m.clone(), a, b))
        })
    }

    /// One term per line, `coeff<TAB>monomial`, in canonical monomial order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (m, c) in &self.terms {
            s.push_str(&format_rational(c));
            s.push('\t');
            s.push_str(&m.to_string());
            s.push('\n');
        }
        s
    }
}

pub fn poly_mul(a: &GradedPoly, b: &GradedPoly) -> Result<GradedPoly, SeriesError> {
    a.mul(b)
}

/// `log(a)` for `a` with constant term 1.
pub fn poly_log(a: &GradedPoly) -> Result<GradedPoly, SeriesError> {
    if a.constant_term() != Rational::one() {
        return Err(SeriesError::ConstantTerm { op: "log", expected: "1" });
    }
    let cap = a.degree_cap;
    let x = a.sub(&GradedPoly::one(cap));
    let mut out = GradedPoly::zero(cap);
    let mut power = x.clone();
    for k in 1..=cap.max(1) {
        if power.is_zero() {
            break;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        out = out.add(&power.scale(&Rational::new(BigInt::from(sign), BigInt::from(k))));
        power = power.mul(&x)?;
    }
    Ok(out)
}

/// `exp(a)` for `a` with zero constant term.
pub fn poly_exp(a: &GradedPoly) -> Result<GradedPoly, SeriesError> {
    if !a.constant_term().is_zero() {
        return Err(SeriesError::ConstantTerm { op: "exp", expected: "0" });
    }
    let cap = a.degree_cap;
    let mut out = GradedPoly::one(cap);
    let mut term = GradedPoly::one(cap);
    for k in 1..=cap.max(1) {
        term = term.mul(a)?.scale(&Rational::new(BigInt::one(), BigInt::from(k)));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    fn p(terms: &[(&str, i64, i64)], cap: u32) -> GradedPoly {
        GradedPoly::from_terms(
            terms
                .iter()
                .map(|(m, a, b)| (Monomial::parse(m).unwrap(), rat(*a, *b))),
            cap,
        )
    }

    #[test]
    fn monomial_text_round_trip() {
        for s in ["1", "t0", "t0^2 t1", "t3 t5^4"] {
            assert_eq!(Monomial::parse(s).unwrap().to_string(), s);
        }
        assert_eq!(Monomial::parse("t0^2 t1").unwrap().degree(), 4);
    }

    #[test]
    fn product_examples() {
        let a = p(&[("t0^2", 1, 2)], 6);
        let b = p(&[("t1", 1, 2)], 6);
        assert_eq!(a.mul(&b).unwrap().coeff_of("t0^2 t1"), rat(1, 4));
        assert_eq!(a.mul(&GradedPoly::one(6)).unwrap(), a);
        assert!(a.mul(&GradedPoly::one(5)).is_err());
        let tiny = p(&[("t0^2", 1, 2)], 3);
        assert!(tiny.mul(&tiny).unwrap().is_zero());
    }

    #[test]
    fn exp_log_examples() {
        assert_eq!(poly_exp(&GradedPoly::zero(4)).unwrap(), GradedPoly::one(4));
        assert!(poly_log(&GradedPoly::one(4)).unwrap().is_zero());
        let m = p(&[("t0^2", 1, 2), ("t1", 1, 2)], 2);
        let e = poly_exp(&m).unwrap();
        assert_eq!(e, p(&[("1", 1, 1), ("t0^2", 1, 2), ("t1", 1, 2)], 2));
        assert!(poly_log(&m).is_err());
        assert!(poly_exp(&GradedPoly::one(2)).is_err());
    }

    #[test]
    fn dump_format() {
        let a = p(&[("t1", 1, 2), ("1", 1, 1), ("t0^2", -3, 4)], 4);
        assert_eq!(a.dump(), "1\t1\n-3/4\tt0^2\n1/2\tt1\n");
    }
}
