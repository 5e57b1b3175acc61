use std::collections::HashMap;

use exact_core::{BigInt, Rational};
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use series_algebra::{MultiLaurent, NPointSeries};

use crate::affine::{a_hat, a_part, AffineCoords};
use crate::NPointError;

/// Knobs for the literal cycle expansion.
#[derive(Clone, Debug, Default)]
pub struct CycleOptions {
    /// Truncation of the principal parts; `None` uses [`default_internal_order`].
    pub internal_order: Option<u32>,
    /// Sum over all `n!` orderings and divide by `n` instead of fixing the first point.
    pub all_cycles: bool,
}

pub fn default_internal_order(n: usize, order: u32) -> u32 {
    order * n as u32
}

/// Connected n-point function `G_(n)` on the window `sum (j_i + 1) <= order`.
pub fn connected_npoint(n: usize, order: u32) -> Result<NPointSeries, NPointError> {
    cycle_sum(n, order, &CycleOptions::default())
}

pub fn cycle_sum(n: usize, order: u32, opts: &CycleOptions) -> Result<NPointSeries, NPointError> {
    if n == 0 {
        return Err(NPointError::ZeroArity);
    }
    if order < n as u32 {
        return Err(NPointError::WindowTooSmall { n, order });
    }
    let m = opts.internal_order.unwrap_or_else(|| default_internal_order(n, order));
    if m == 0 {
        return Err(NPointError::BadInternalOrder(m));
    }
    let coords = AffineCoords::one_dim();
    match n {
        1 => collect_series(1, &a_hat(&coords, 0, 0, 1, m, order)?, order),
        2 => two_point(&coords, order),
        _ => literal(&coords, n, order, m, opts.all_cycles),
    }
}

fn two_point(coords: &AffineCoords, order: u32) -> Result<NPointSeries, NPointError> {
    let a12 = a_part(coords, 0, 1, 2, order);
    let a21 = a_part(coords, 1, 0, 2, order);
    let mut num = a12.sub(&a21);
    num.retain(|e| e.iter().sum::<i32>() > -(order as i32));
    let quotient = num.div_by_difference(0, 1)?;
    let product = a12.mul_filtered(&a21, |e| e.iter().sum::<i32>() >= -(order as i32));
    collect_series(2, &quotient.sub(&product), order)
}

/// Reads a symmetric Laurent polynomial in the expansion with all exponents <= -2.
fn collect_series(n: usize, f: &MultiLaurent, order: u32) -> Result<NPointSeries, NPointError> {
    let mut out = NPointSeries::new(n)?;
    for (e, c) in f.sorted_terms() {
        if e.iter().sum::<i32>() < -(order as i32) {
            continue;
        }
        if e.iter().any(|&x| x >= -1) {
            return Err(NPointError::Surviving(e));
        }
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if f.coeff(&sorted) != c {
            return Err(NPointError::NotSymmetric(e));
        }
        if sorted == e {
            let key: Vec<u32> = e.iter().map(|&x| (-x - 1) as u32).collect();
            out.set(&key, Rational::from_integer(c))?;
        }
    }
    Ok(out)
}

type Terms = Vec<(Vec<i32>, i128)>;

fn small_terms(f: &MultiLaurent) -> Result<Terms, NPointError> {
    f.terms()
        .map(|(e, c)| {
            c.to_i128()
                .map(|c| (e.clone(), c))
                .ok_or(NPointError::Unsupported("i128 cycle"))
        })
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn literal(
    coords: &AffineCoords,
    n: usize,
    order: u32,
    m: u32,
    all_cycles: bool,
) -> Result<NPointSeries, NPointError> {
    let mut factors = vec![vec![Vec::new(); n]; n];
    for (i, row) in factors.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            if i != j {
                *slot = small_terms(&a_hat(coords, i, j, n, m, order)?)?;
            }
        }
    }
    let cycles: Vec<Vec<usize>> = if all_cycles {
        permutations(&(0..n).collect::<Vec<_>>())
    } else {
        permutations(&(1..n).collect::<Vec<_>>())
            .into_iter()
            .map(|mut p| {
                p.insert(0, 0);
                p
            })
            .collect()
    };
    // Every kept variable ends at exponent <= -2 except the one being bounded.
    let lo = -(order as i32) + 2 * (n as i32 - 1);
    let partials = cycles
        .par_iter()
        .map(|sigma| one_cycle(&factors, sigma, order as i32, lo, !all_cycles))
        .collect::<Result<Vec<_>, _>>()?;
    let mut total: HashMap<Vec<i32>, i128> = HashMap::new();
    for part in partials {
        for (e, c) in part {
            let slot = total.entry(e).or_insert(0);
            *slot = slot.checked_add(c).ok_or(NPointError::Unsupported("i128 cycle"))?;
        }
    }
    let sign: i128 = if n % 2 == 1 { 1 } else { -1 };
    let divisor: i128 = if all_cycles { n as i128 } else { 1 };
    let mut out = MultiLaurent::zero(n);
    for (e, c) in total {
        if c != 0 {
            debug_assert_eq!(c % divisor, 0);
            out.add_term(e, BigInt::from(sign * c / divisor));
        }
    }
    out.retain(|e| e.iter().all(|&x| x >= lo));
    debug_assert!(out.terms().all(|(_, c)| !c.is_zero()));
    collect_series(n, &out, order)
}

fn one_cycle(
    factors: &[Vec<Terms>],
    sigma: &[usize],
    order: i32,
    lo: i32,
    first_is_min: bool,
) -> Result<HashMap<Vec<i32>, i128>, NPointError> {
    let n = sigma.len();
    let mut state: HashMap<Vec<i32>, i128> = HashMap::new();
    state.insert(vec![0; n], 1);
    for t in 0..n {
        let factor = &factors[sigma[t]][sigma[(t + 1) % n]];
        let remaining = (n - 1 - t) as i32;
        let mut next: HashMap<Vec<i32>, i128> = HashMap::with_capacity(state.len() * 2);
        let mut buf = vec![0i32; n];
        for (e, c) in &state {
            for (f, d) in factor {
                let mut degree = 0;
                for i in 0..n {
                    buf[i] = e[i] + f[i];
                    degree += buf[i];
                }
                if degree - remaining < -order {
                    continue;
                }
                let complete = (1..=t).map(|s| sigma[s]).chain((t == n - 1).then_some(sigma[0]));
                if complete.into_iter().any(|v| buf[v] < lo || buf[v] > 1) {
                    continue;
                }
                // With the smallest index first, the closing factor lowers it by at least one.
                if first_is_min && t < n - 1 && buf[sigma[0]] - 1 < lo {
                    continue;
                }
                let term = c.checked_mul(*d).ok_or(NPointError::Unsupported("i128 cycle"))?;
                let slot = next.entry(buf.clone()).or_insert(0);
                *slot = slot.checked_add(term).ok_or(NPointError::Unsupported("i128 cycle"))?;
            }
        }
        next.retain(|_, c| *c != 0);
        state = next;
    }
    Ok(state)
}
