use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::{factorial, ExactError};

/// Integer partition with parts stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(i, m_i)` for each part size `i` present, ascending in `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((i, m)) if *i == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Union of parts.
    pub fn merge(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// `z_lambda = prod_i i^{m_i} m_i!`.
    pub fn z_lambda(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (i, m)| {
                acc * BigInt::from(i).pow(m) * factorial(m as u64)
            })
    }

    /// Frobenius coordinates `(arms | legs)`, both strictly decreasing.
    pub fn to_frobenius(&self) -> (Vec<u32>, Vec<u32>) {
        let conj = self.conjugate();
        let d = (0..self.parts.len())
            .take_while(|&i| self.parts[i] as usize > i)
            .count();
        let arms = (0..d).map(|i| self.parts[i] - i as u32 - 1).collect();
        let legs = (0..d).map(|i| conj.parts[i] - i as u32 - 1).collect();
        (arms, legs)
    }

    pub fn from_frobenius(arms: &[u32], legs: &[u32]) -> Result<Partition, ExactError> {
        if arms.len() != legs.len() {
            return Err(ExactError::Frobenius("arm and leg counts differ".into()));
        }
        let strictly_decreasing = |v: &[u32]| v.windows(2).all(|w| w[0] > w[1]);
        if !strictly_decreasing(arms) || !strictly_decreasing(legs) {
            return Err(ExactError::Frobenius(
                "arms and legs must be strictly decreasing".into(),
            ));
        }
        let d = arms.len();
        let rows = legs.first().map(|&l| l as usize + 1).unwrap_or(0);
        let parts = (0..rows)
            .map(|i| {
                if i < d {
                    arms[i] + i as u32 + 1
                } else {
                    (0..d).filter(|&j| legs[j] as usize + j >= i).count() as u32
                }
            })
            .collect();
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, in lexicographically descending order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        let p4: Vec<Vec<u32>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            p4,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions_of(8).len(), 22);
    }

    #[test]
    fn z_lambda_examples() {
        assert_eq!(Partition::new(vec![2]).z_lambda(), BigInt::from(2));
        assert_eq!(Partition::empty().z_lambda(), BigInt::from(1));
        assert_eq!(Partition::new(vec![1, 1]).z_lambda(), BigInt::from(2));
        assert_eq!(Partition::new(vec![2, 2, 1]).z_lambda(), BigInt::from(8));
    }

    #[test]
    fn frobenius_of_hooks() {
        let p = Partition::new(vec![3, 1, 1]);
        assert_eq!(p.to_frobenius(), (vec![2], vec![2]));
        let sq = Partition::new(vec![2, 2]);
        assert_eq!(sq.to_frobenius(), (vec![1, 0], vec![1, 0]));
        assert!(Partition::from_frobenius(&[0, 1], &[1, 0]).is_err());
    }
}
