use std::collections::HashMap;

use exact_core::{binomial, double_factorial, BigInt, Rational};
use num_traits::{One, Zero};
use series_algebra::NPointSeries;

use crate::NPointError;

/// `G_(n)` as joint cumulants of the monomials `x^{j_i}` under the Gaussian moments
/// `<x^w> = (w-1)!!`, computed by the recursion on the block containing the smallest entry.
#[derive(Default)]
pub struct CumulantEngine {
    memo: HashMap<Vec<u32>, BigInt>,
    moments: Vec<BigInt>,
}

impl CumulantEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn moment(&mut self, w: u32) -> BigInt {
        if w % 2 == 1 {
            return BigInt::zero();
        }
        let w = w as usize;
        while self.moments.len() <= w {
            let k = self.moments.len() as i64;
            self.moments.push(if k % 2 == 0 { double_factorial(k - 1) } else { BigInt::zero() });
        }
        self.moments[w].clone()
    }

    /// Coefficient of `z_1^{-j_1-1}...z_n^{-j_n-1}`; entries must be positive.
    pub fn coefficient(&mut self, key: &[u32]) -> Result<BigInt, NPointError> {
        if key.is_empty() {
            return Err(NPointError::ZeroArity);
        }
        if key.contains(&0) {
            return Err(NPointError::Series(series_algebra::SeriesError::InvalidKey(key.to_vec())));
        }
        let mut k = key.to_vec();
        k.sort_unstable();
        Ok(self.sorted(&k))
    }

    fn sorted(&mut self, key: &[u32]) -> BigInt {
        let total: u32 = key.iter().sum();
        if total % 2 == 1 {
            return BigInt::zero();
        }
        if let Some(v) = self.memo.get(key) {
            return v.clone();
        }
        let head = key[0];
        let mut values: Vec<(u32, u32)> = Vec::new();
        for &x in &key[1..] {
            match values.last_mut() {
                Some((v, m)) if *v == x => *m += 1,
                _ => values.push((x, 1)),
            }
        }
        let mut result = self.moment(total);
        let mut take = vec![0u32; values.len()];
        loop {
            if take.iter().zip(&values).any(|(t, (_, m))| t != m) {
                self.subtract(head, &values, &take, total, &mut result);
            }
            // Mixed-radix counter over sub-multisets of the tail.
            let mut i = 0;
            while i < take.len() && take[i] == values[i].1 {
                take[i] = 0;
                i += 1;
            }
            if i == take.len() {
                break;
            }
            take[i] += 1;
        }
        self.memo.insert(key.to_vec(), result.clone());
        result
    }

    fn subtract(&mut self, head: u32, values: &[(u32, u32)], take: &[u32], total: u32, acc: &mut BigInt) {
        let mut block = vec![head];
        let mut weight = BigInt::one();
        for (&t, &(v, m)) in take.iter().zip(values) {
            block.extend(std::iter::repeat(v).take(t as usize));
            weight *= binomial(m as u64, t as u64);
        }
        let block_sum: u32 = block.iter().sum();
        let rest = self.moment(total - block_sum);
        if rest.is_zero() || block_sum % 2 == 1 {
            return;
        }
        let g = self.sorted(&block);
        *acc -= weight * g * rest;
    }
}

/// All sorted keys of length `n` with entries `>= 1` and `sum (j_i + 1) <= order`.
pub(crate) fn keys_up_to(n: usize, order: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, budget: u32, min: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let left = (n - cur.len()) as u32;
        let mut v = min;
        while (v + 1) * left <= budget {
            cur.push(v);
            rec(n, budget - v - 1, v, cur, out);
            cur.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    rec(n, order, 1, &mut Vec::new(), &mut out);
    out
}

/// `G_(n)` on the window `sum (j_i + 1) <= order` from the cumulant recursion.
pub fn cumulant_npoint(n: usize, order: u32) -> Result<NPointSeries, NPointError> {
    let mut out = NPointSeries::new(n)?;
    let mut engine = CumulantEngine::new();
    for key in keys_up_to(n, order) {
        let c = engine.coefficient(&key)?;
        out.set(&key, Rational::from_integer(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cumulants() {
        let mut e = CumulantEngine::new();
        assert_eq!(e.coefficient(&[2]).unwrap(), BigInt::from(1));
        assert_eq!(e.coefficient(&[4]).unwrap(), BigInt::from(3));
        // <x^2 x^2> - <x^2>^2 = 3 - 1
        assert_eq!(e.coefficient(&[2, 2]).unwrap(), BigInt::from(2));
        assert_eq!(e.coefficient(&[1, 1]).unwrap(), BigInt::from(1));
        assert_eq!(e.coefficient(&[1, 2]).unwrap(), BigInt::zero());
        assert_eq!(e.coefficient(&[3, 1, 1, 1]).unwrap(), BigInt::from(6));
        assert!(e.coefficient(&[]).is_err() && e.coefficient(&[0, 2]).is_err());
    }

    #[test]
    fn key_enumeration() {
        assert_eq!(keys_up_to(2, 5), vec![vec![1, 1], vec![1, 2]]);
        assert!(keys_up_to(3, 5).is_empty());
    }
}
