use exact_core::{partitions_of, Partition, Rational};
use num_traits::One;

use crate::{SymError, SymFunc};

/// `h_n = sum_{|lambda| = n} p_lambda / z_lambda`, with cap `n`.
pub fn h_in_p(n: u32) -> SymFunc {
    let mut s = SymFunc::zero(n);
    for lambda in partitions_of(n) {
        let c = Rational::new(1.into(), lambda.z_lambda());
        s.add_term(lambda, c);
    }
    s
}

/// `e_n = omega(h_n)`.
pub fn e_in_p(n: u32) -> SymFunc {
    h_in_p(n).omega()
}

/// Hook Schur function `s_{(m|n)} = sum_{i=0}^{n} (-1)^i h_{m+1+i} e_{n-i}`.
pub fn schur_hook(m: u32, n: u32, cap: u32) -> Result<SymFunc, SymError> {
    let needed = m + n + 1;
    if needed > cap {
        return Err(SymError::CapExceeded { needed, cap });
    }
    let mut s = SymFunc::zero(cap);
    for i in 0..=n {
        let term = h_in_p(m + 1 + i).with_cap(cap).mul(&e_in_p(n - i));
        s = if i % 2 == 0 { s.add(&term) } else { s.sub(&term) };
    }
    Ok(s)
}

/// Determinant of a square matrix of symmetric functions, by dynamic programming over column subsets.
pub(crate) fn det(entries: &[Vec<SymFunc>], cap: u32) -> SymFunc {
    let k = entries.len();
    let mut layer: Vec<Option<SymFunc>> = vec![None; 1 << k];
    layer[0] = Some(SymFunc::one(cap));
    for (row, cols) in entries.iter().enumerate() {
        let mut next: Vec<Option<SymFunc>> = vec![None; 1 << k];
        for mask in 0..(1usize << k) {
            if mask.count_ones() as usize != row {
                continue;
            }
            let Some(acc) = &layer[mask] else { continue };
            for (j, entry) in cols.iter().enumerate() {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let inversions = (mask >> (j + 1)).count_ones();
                let mut term = acc.mul(entry).with_cap(cap);
                if inversions % 2 == 1 {
                    term = term.scale(&-Rational::one());
                }
                let slot = &mut next[mask | (1 << j)];
                *slot = Some(match slot.take() {
                    Some(s) => s.add(&term),
                    None => term,
                });
            }
        }
        layer = next;
    }
    layer[(1 << k) - 1].take().unwrap_or_else(|| SymFunc::zero(cap))
}

/// `s_lambda = det(s_{(m_i|n_j)})` in Frobenius coordinates.
pub fn schur(lambda: &Partition, cap: u32) -> Result<SymFunc, SymError> {
    if lambda.weight() > cap {
        return Err(SymError::CapExceeded { needed: lambda.weight(), cap });
    }
    let (arms, legs) = lambda.to_frobenius();
    let entries = arms
        .iter()
        .map(|&m| legs.iter().map(|&n| schur_hook(m, n, cap)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(det(&entries, cap))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn small_cases() {
        assert_eq!(h_in_p(0), SymFunc::one(0));
        let h2 = h_in_p(2);
        assert_eq!(h2.dump(), "1/2 * p1^2\n1/2 * p2\n");
        let e2 = e_in_p(2);
        assert_eq!(e2.coeff_of(&[2]), rat(-1, 2));
        assert_eq!(e_in_p(1), SymFunc::power_sum(1, 1));
        assert_eq!(schur_hook(0, 0, 1).unwrap(), SymFunc::power_sum(1, 1));
        assert!(schur_hook(2, 2, 4).is_err());
    }

    #[test]
    fn column_hook() {
        // s_{(1,1,1)} = p1^3/6 - p1 p2/2 + p3/3
        let s = schur_hook(0, 2, 3).unwrap();
        assert_eq!(s.coeff_of(&[3]), rat(1, 3));
        assert_eq!(s.coeff_of(&[2, 1]), rat(-1, 2));
        assert_eq!(s.coeff_of(&[1, 1, 1]), rat(1, 6));
        assert_eq!(s.len(), 3);
    }
}
