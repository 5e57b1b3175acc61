use std::fmt;

use exact_core::{format_rational, Rational};
use num_traits::{One, Zero};

/// Polynomial in `w`, coefficients ascending, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly(c)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let get = |p: &Poly, i: usize| p.0.get(i).cloned().unwrap_or_else(Rational::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(other, i)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|x| x * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut c = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut rem = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        let lead = d.lead();
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let f = rem.last().cloned().expect("nonempty") / &lead;
            for (i, c) in d.0.iter().enumerate() {
                rem[shift + i] -= &f * c;
            }
            q[shift] = f;
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(q), Poly::new(rem))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.scale(&(Rational::one() / a.lead()))
        }
    }

    pub fn eval(&self, w: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * w + c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            parts.push(match (mono.is_empty(), c == &Rational::one()) {
                (true, _) => format_rational(c),
                (false, true) => mono,
                (false, false) => format!("{}*{}", format_rational(c), mono),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFn::zero();
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead = Rational::one() / den.lead();
        RationalFn { num: num.scale(&lead), den: den.scale(&lead) }
    }

    /// From integer coefficient lists, ascending.
    pub fn from_coeffs(num: &[i64], den: &[i64]) -> Self {
        let p = |c: &[i64]| Poly::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect());
        RationalFn::new(p(num), p(den))
    }

    pub fn zero() -> Self {
        RationalFn { num: Poly::default(), den: Poly::constant(Rational::one()) }
    }

    /// `c (w - 1)^{-k}` for `e = k > 0`, `c (w + 1)^{e}` for `e < 0`, `c` for `e = 0`.
    pub fn pole(e: i16, c: Rational) -> Self {
        let root = Rational::from_integer(e.signum().into());
        let linear = Poly::new(vec![-root, Rational::one()]);
        let mut den = Poly::constant(Rational::one());
        for _ in 0..e.unsigned_abs() {
            den = den.mul(&linear);
        }
        RationalFn::new(Poly::constant(c), den)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn mul(&self, other: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Value at `w`, or `None` at a pole.
    pub fn eval(&self, w: &Rational) -> Option<Rational> {
        let d = self.den.eval(w);
        (!d.is_zero()).then(|| self.num.eval(w) / d)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
