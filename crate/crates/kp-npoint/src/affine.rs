use exact_core::{double_factorial, BigInt, Rational};
use num_traits::{One, Zero};
use series_algebra::MultiLaurent;

use crate::NPointError;

/// Affine coordinates `a_{n,m}` of a point of the big cell, as an evaluator.
#[derive(Clone, Copy)]
pub struct AffineCoords {
    eval: fn(u32, u32) -> Rational,
}

fn one_dim(n: u32, m: u32) -> Rational {
    if n == 0 && m % 2 == 1 {
        Rational::from_integer(double_factorial(m as i64))
    } else {
        Rational::zero()
    }
}

impl AffineCoords {
    /// `a_{0,m} = m!!` for odd `m`, all others zero.
    pub fn one_dim() -> Self {
        AffineCoords { eval: one_dim }
    }

    pub fn from_fn(eval: fn(u32, u32) -> Rational) -> Self {
        AffineCoords { eval }
    }

    pub fn value(&self, n: u32, m: u32) -> Rational {
        (self.eval)(n, m)
    }

    /// Integer value; the cycle engine works over the integers.
    pub(crate) fn integer(&self, n: u32, m: u32) -> BigInt {
        let v = self.value(n, m);
        assert!(v.is_integer(), "affine coordinate a_({n},{m}) = {v} is not an integer");
        v.to_integer()
    }

    /// Normalized basis vector `f_n = z^n + sum_m a_{n,m} z^{-m-1}` with exponents down to `-depth`.
    pub fn basis_vector(&self, n: u32, depth: u32) -> Vec<(i32, Rational)> {
        let mut out = vec![(n as i32, Rational::one())];
        for m in 0..depth {
            let c = self.value(n, m);
            if !c.is_zero() {
                out.push((-(m as i32) - 1, c));
            }
        }
        out
    }
}

impl std::fmt::Debug for AffineCoords {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("AffineCoords")
    }
}

/// `A(z_i, z_j) = sum a_{n,m} z_i^{-n-1} z_j^{-m-1}` kept to total degree `>= -window`.
pub(crate) fn a_part(coords: &AffineCoords, i: usize, j: usize, nvars: usize, window: u32) -> MultiLaurent {
    let mut out = MultiLaurent::zero(nvars);
    for total in 2..=window {
        for n in 0..=total - 2 {
            let m = total - 2 - n;
            let c = coords.integer(n, m);
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0; nvars];
            e[i] -= n as i32 + 1;
            e[j] -= m as i32 + 1;
            out.add_term(e, c);
        }
    }
    out
}

/// The modified kernel in variables `z_0..z_{nvars-1}`.
///
/// For `i < j` the principal part is `sum_{k <= M} z_i^{-1-k} z_j^k`, for `i > j` it is
/// `-sum_{k <= M} z_j^{-1-k} z_i^k`; both stand for `1/(z_i - z_j)`. On the diagonal only
/// `A(z, z)` remains. The regular part is kept to total degree `>= -window`.
pub fn a_hat(
    coords: &AffineCoords,
    i: usize,
    j: usize,
    nvars: usize,
    internal_order: u32,
    window: u32,
) -> Result<MultiLaurent, NPointError> {
    if internal_order == 0 {
        return Err(NPointError::BadInternalOrder(internal_order));
    }
    let mut out = a_part(coords, i, j, nvars, window);
    if i == j {
        return Ok(out);
    }
    for k in 0..=internal_order as i32 {
        let mut e = vec![0; nvars];
        if i < j {
            e[i] = -1 - k;
            e[j] = k;
            out.add_term(e, BigInt::one());
        } else {
            e[j] = -1 - k;
            e[i] = k;
            out.add_term(e, -BigInt::one());
        }
    }
    Ok(out)
}
