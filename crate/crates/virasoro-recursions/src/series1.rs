use exact_core::{rat, Rational};
use num_traits::{One, Zero};

/// Finite Laurent polynomial `sum c_e t^e` in one variable, read as a series truncated
/// wherever the caller truncated it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series1 {
    lo: i32,
    c: Vec<Rational>,
}

impl Series1 {
    pub fn zero() -> Self {
        Series1 { lo: 0, c: Vec::new() }
    }

    pub fn monomial(e: i32, c: Rational) -> Self {
        Series1 { lo: e, c: vec![c] }
    }

    /// From coefficients starting at exponent `lo`.
    pub fn from_coeffs(lo: i32, c: Vec<Rational>) -> Self {
        Series1 { lo, c }
    }

    /// `1 + k t` style polynomials: coefficients from `t^0`.
    pub fn poly(c: &[(i64, i64)]) -> Self {
        Series1 { lo: 0, c: c.iter().map(|&(p, q)| rat(p, q)).collect() }
    }

    pub fn lo(&self) -> i32 {
        self.lo
    }

    /// Highest stored exponent.
    pub fn hi(&self) -> i32 {
        self.lo + self.c.len() as i32 - 1
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<i32> {
        self.c.iter().position(|x| !x.is_zero()).map(|i| self.lo + i as i32)
    }

    pub fn coeff(&self, e: i32) -> Rational {
        let i = e - self.lo;
        if i < 0 || i as usize >= self.c.len() {
            Rational::zero()
        } else {
            self.c[i as usize].clone()
        }
    }

    pub fn truncate(&self, hi: i32) -> Series1 {
        let keep = (hi - self.lo + 1).clamp(0, self.c.len() as i32) as usize;
        Series1 { lo: self.lo, c: self.c[..keep].to_vec() }
    }

    pub fn scale(&self, k: &Rational) -> Series1 {
        Series1 { lo: self.lo, c: self.c.iter().map(|x| x * k).collect() }
    }

    pub fn shift(&self, by: i32) -> Series1 {
        Series1 { lo: self.lo + by, c: self.c.clone() }
    }

    pub fn add(&self, other: &Series1) -> Series1 {
        if self.c.is_empty() {
            return other.clone();
        }
        if other.c.is_empty() {
            return self.clone();
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        Series1 { lo, c: (lo..=hi).map(|e| self.coeff(e) + other.coeff(e)).collect() }
    }

    /// Product with terms above `t^hi` dropped.
    pub fn mul(&self, other: &Series1, hi: i32) -> Series1 {
        let lo = self.lo + other.lo;
        let top = hi.min(self.hi() + other.hi());
        if top < lo || self.c.is_empty() || other.c.is_empty() {
            return Series1 { lo, c: Vec::new() };
        }
        let mut c = vec![Rational::zero(); (top - lo + 1) as usize];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.c.iter().enumerate() {
                if i + j >= c.len() {
                    break;
                }
                c[i + j] += a * b;
            }
        }
        Series1 { lo, c }
    }

    /// Coefficient of `t^e` in the product, without forming it.
    pub fn product_coeff(&self, other: &Series1, e: i32) -> Rational {
        let mut acc = Rational::zero();
        for (i, a) in self.c.iter().enumerate() {
            if !a.is_zero() {
                let b = other.coeff(e - self.lo - i as i32);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
        }
        acc
    }

    /// Integer power of a series with a nonzero `t^0` term and `lo = 0`, up to `t^hi`.
    pub fn pow_unit(&self, p: i32, hi: i32) -> Series1 {
        assert!(self.lo == 0 && !self.coeff(0).is_zero(), "pow_unit needs a unit series");
        let base = if p < 0 { self.inverse(hi) } else { self.truncate(hi) };
        let mut out = Series1::monomial(0, Rational::one());
        for _ in 0..p.unsigned_abs() {
            out = out.mul(&base, hi);
        }
        out
    }

    /// `1 / self` for a unit series, up to `t^hi`.
    pub fn inverse(&self, hi: i32) -> Series1 {
        assert!(self.lo == 0 && !self.coeff(0).is_zero(), "inverse needs a unit series");
        let inv0 = Rational::one() / self.coeff(0);
        let mut c = vec![inv0.clone()];
        for n in 1..=hi {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += self.coeff(k) * &c[(n - k) as usize];
            }
            c.push(-acc * &inv0);
        }
        Series1 { lo: 0, c }
    }

    /// Derivative in `t`.
    pub fn derivative(&self) -> Series1 {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(i, x)| x * Rational::from_integer((self.lo + i as i32).into()))
            .collect::<Vec<_>>();
        Series1 { lo: self.lo - 1, c }
    }
}

/// `v = 1/w` as a series in `e = 1/z` on `z = w + 1/w`, by iterating `v = e (1 + v^2)`.
pub fn inverse_uniformizer(hi: i32) -> Series1 {
    let e = Series1::monomial(1, Rational::one());
    let one = Series1::monomial(0, Rational::one());
    let mut v = e.clone();
    for _ in 0..=hi {
        let next = e.mul(&one.add(&v.mul(&v, hi)), hi);
        if next == v {
            break;
        }
        v = next;
    }
    v
}
