use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{ExactError, Rational};

/// `n!`.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `m!! = m (m-2) (m-4) ...`, with `(-1)!! = 0!! = 1`.
///
/// Panics for `m < -1`.
pub fn double_factorial(m: i64) -> BigInt {
    assert!(m >= -1, "double factorial undefined at {m}");
    let mut acc = BigInt::one();
    let mut k = m;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Bernoulli number `B_k` for even `k`, normalized by `sum_{j<=m} C(m+1, j) B_j = 0`.
pub fn bernoulli(k: u32) -> Result<Rational, ExactError> {
    if k % 2 == 1 {
        return Err(ExactError::OddBernoulli(k));
    }
    let mut table = BERNOULLI.lock().unwrap_or_else(|e| e.into_inner());
    if table.is_empty() {
        table.push(Rational::one());
    }
    while table.len() <= k as usize {
        let m = table.len() as u64;
        let mut s = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, j as u64)) * b;
        }
        let next = -s / Rational::from_integer(BigInt::from(m + 1));
        table.push(next);
    }
    Ok(table[k as usize].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial(5), BigInt::from(15));
        assert_eq!(double_factorial(0), BigInt::one());
        assert_eq!(double_factorial(-1), BigInt::one());
        assert_eq!(double_factorial(9), BigInt::from(945));
        assert_eq!(double_factorial(8), BigInt::from(384));
    }

    #[test]
    fn bernoulli_examples() {
        assert_eq!(bernoulli(0).unwrap(), rat(1, 1));
        assert_eq!(bernoulli(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli(4).unwrap(), rat(-1, 30));
        assert_eq!(bernoulli(12).unwrap(), rat(-691, 2730));
        assert_eq!(bernoulli(3), Err(ExactError::OddBernoulli(3)));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
