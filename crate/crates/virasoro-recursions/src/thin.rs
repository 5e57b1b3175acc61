use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use exact_core::{BigInt, Rational};
use num_traits::{One, Zero};
use series_algebra::{MultiLaurent, NPointSeries};

use crate::RecursionError;

/// Thin correlator `W_{g,n}` as an exact Laurent polynomial in `z_1..z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinCorrelator {
    g: i32,
    poly: MultiLaurent,
}

impl ThinCorrelator {
    pub fn genus(&self) -> i32 {
        self.g
    }

    pub fn arity(&self) -> usize {
        self.poly.nvars()
    }

    pub fn poly(&self) -> &MultiLaurent {
        &self.poly
    }

    /// Total degree `-(2g - 2 + 2n) - n` forced by the selection rule.
    pub fn expected_degree(g: i32, n: usize) -> i32 {
        -(2 * g - 2 + 3 * n as i32)
    }

    /// Coefficients on `z^{-j-1}` keys; the `(0,1)` term has `j = 0` and is not representable.
    pub fn to_series(&self) -> Result<NPointSeries, RecursionError> {
        let mut out = NPointSeries::new(self.arity())?;
        for (e, c) in self.poly.sorted_terms() {
            if e.windows(2).all(|w| w[0] >= w[1]) {
                let key: Vec<u32> = e.iter().map(|&x| (-x - 1) as u32).collect();
                out.set(&key, Rational::from_integer(c))?;
            }
        }
        Ok(out)
    }
}

fn memo() -> &'static Mutex<HashMap<(i32, usize), MultiLaurent>> {
    static MEMO: OnceLock<Mutex<HashMap<(i32, usize), MultiLaurent>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// `W_{g,n}` through the D and E operators of the quadratic recursion.
#[allow(non_snake_case)]
pub fn thin_W(g: i32, n: usize) -> Result<ThinCorrelator, RecursionError> {
    Ok(ThinCorrelator { g, poly: thin_poly(g, n)? })
}

fn thin_poly(g: i32, n: usize) -> Result<MultiLaurent, RecursionError> {
    if g < 0 || n == 0 {
        return Ok(MultiLaurent::zero(n));
    }
    if (g, n) == (0, 1) {
        return Ok(MultiLaurent::monomial(vec![-1], BigInt::one()));
    }
    if let Some(p) = memo().lock().expect("memo").get(&(g, n)) {
        return Ok(p.clone());
    }
    let p = recurse(g, n - 1)?;
    match p.homogeneous_degree() {
        Some(d) if d != ThinCorrelator::expected_degree(g, n) => {
            return Err(RecursionError::Inhomogeneous { g, n })
        }
        None if !p.is_zero() => return Err(RecursionError::Inhomogeneous { g, n }),
        _ => {}
    }
    memo().lock().expect("memo").insert((g, n), p.clone());
    Ok(p)
}

fn unit(nvars: usize, var: usize, e: i32) -> Vec<i32> {
    let mut v = vec![0; nvars];
    v[var] = e;
    v
}

/// `[f(z0) - f(zj) - (z0 - zj) f'(zj)] / (z0 (z0 - zj)^2)` for `f` free of `z0`.
fn d_operator(f: &MultiLaurent, j: usize) -> Result<MultiLaurent, RecursionError> {
    let nvars = f.nvars();
    let mut map: Vec<usize> = (0..nvars).collect();
    map[j] = 0;
    let at_z0 = f.embed(&map, nvars);
    let df = f.derivative(j);
    let num = at_z0
        .sub(f)
        .sub(&df.shift(&unit(nvars, 0, 1)))
        .add(&df.shift(&unit(nvars, j, 1)));
    let q = num.div_by_difference(0, j)?.div_by_difference(0, j)?;
    Ok(q.shift(&unit(nvars, 0, -1)))
}

/// `W_{g, n+1}(z0, z1..zn)` from lower correlators.
fn recurse(g: i32, n: usize) -> Result<MultiLaurent, RecursionError> {
    let nvars = n + 1;
    let mut out = MultiLaurent::zero(nvars);
    if n >= 1 {
        let lifted = thin_poly(g, n)?.embed(&(1..=n).collect::<Vec<_>>(), nvars);
        for j in 1..=n {
            out.add_assign(&d_operator(&lifted, j)?);
        }
    }
    let mut e_part = MultiLaurent::zero(nvars);
    if g >= 2 {
        let mut map = vec![0, 0];
        map.extend(1..=n);
        e_part.add_assign(&thin_poly(g - 2, n + 2)?.embed(&map, nvars));
    }
    for g1 in 0..g {
        let g2 = g - 1 - g1;
        for mask in 0u32..(1 << n) {
            let (mut left, mut right) = (vec![0], vec![0]);
            for i in 1..=n {
                if mask & (1 << (i - 1)) != 0 {
                    left.push(i);
                } else {
                    right.push(i);
                }
            }
            let a = thin_poly(g1, left.len())?.embed(&left, nvars);
            let b = thin_poly(g2, right.len())?.embed(&right, nvars);
            e_part.add_assign(&a.mul(&b));
        }
    }
    out.add_assign(&e_part.shift(&unit(nvars, 0, -1)));
    Ok(out)
}

/// Coefficient form of the same recursion, read off one exponent tuple at a time.
///
/// `exps[i] = e` stands for `z_i^{-e}`; the first entry plays the role of `z0`.
#[derive(Default)]
pub struct ThinCoefficients {
    memo: HashMap<(i32, Vec<u32>), BigInt>,
}

impl ThinCoefficients {
    pub fn new() -> Self {
        Self::default()
    }

    /// Coefficient of `z_1^{-j_1-1}...z_n^{-j_n-1}` in the sum over all genera.
    pub fn total(&mut self, key: &[u32]) -> BigInt {
        let n = key.len() as i64;
        let s: i64 = key.iter().map(|&j| j as i64).sum();
        if (s - 2 * n + 2) % 2 != 0 || s - 2 * n + 2 < 0 {
            return BigInt::zero();
        }
        let exps: Vec<u32> = key.iter().map(|j| j + 1).collect();
        self.get(((s - 2 * n + 2) / 2) as i32, &exps)
    }

    pub fn get(&mut self, g: i32, exps: &[u32]) -> BigInt {
        let m = exps.len();
        if g < 0 || m == 0 || exps.contains(&0) {
            return BigInt::zero();
        }
        let total: i64 = exps.iter().map(|&e| e as i64).sum();
        if total != 2 * g as i64 - 2 + 3 * m as i64 {
            return BigInt::zero();
        }
        if (g, m) == (0, 1) {
            return BigInt::one();
        }
        let key = (g, exps.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let e0 = exps[0];
        let rest = &exps[1..];
        let mut acc = BigInt::zero();
        if e0 >= 2 {
            for j in 0..rest.len() {
                if rest[j] >= 2 {
                    let mut lower = rest.to_vec();
                    lower[j] = rest[j] + e0 - 3;
                    acc += BigInt::from(rest[j] - 1) * self.get(g, &lower);
                }
            }
        }
        for a in 1..e0.saturating_sub(1) {
            let b = e0 - 1 - a;
            let mut both = vec![a, b];
            both.extend_from_slice(rest);
            acc += self.get(g - 2, &both);
            for g1 in 0..g {
                let g2 = g - 1 - g1;
                for mask in 0u32..(1 << rest.len()) {
                    let (mut left, mut right) = (vec![a], vec![b]);
                    for (i, &e) in rest.iter().enumerate() {
                        if mask & (1 << i) != 0 {
                            left.push(e);
                        } else {
                            right.push(e);
                        }
                    }
                    let x = self.get(g1, &left);
                    if !x.is_zero() {
                        acc += x * self.get(g2, &right);
                    }
                }
            }
        }
        self.memo.insert(key, acc.clone());
        acc
    }
}
