use std::collections::BTreeMap;

use exact_core::{binomial, factorial, Rational};
use num_traits::{One, Zero};
use rayon::prelude::*;
use series_algebra::{BiSeries, NPointSeries};

use crate::hz::v_series;
use crate::{EulerError, SpecializationParams};

/// An n-point series together with the order `sum (j_i + 1)` up to which it is complete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPointWindow {
    pub series: NPointSeries,
    pub order: u32,
}

/// Laurent polynomial in `z` with exponents `top, top - 2, ...`.
#[derive(Clone, Debug)]
struct StepSeries {
    top: i32,
    c: Vec<Rational>,
}

impl StepSeries {
    fn one() -> Self {
        StepSeries { top: 0, c: vec![Rational::one()] }
    }

    fn v(n: u32, floor: i32) -> Self {
        let terms = v_series(n, floor);
        match terms.first() {
            Some(&(top, _)) => StepSeries { top, c: terms.into_iter().map(|(_, c)| c).collect() },
            None => StepSeries { top: 0, c: Vec::new() },
        }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Product with every exponent below `floor` dropped.
    fn mul(&self, other: &StepSeries, floor: i32) -> StepSeries {
        let top = self.top + other.top;
        if top < floor || self.c.is_empty() || other.c.is_empty() {
            return StepSeries { top, c: Vec::new() };
        }
        let len = ((top - floor) / 2 + 1) as usize;
        let mut c = vec![Rational::zero(); len.min(self.c.len() + other.c.len() - 1)];
        for (i, x) in self.c.iter().enumerate().take(c.len()) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.c.iter().enumerate().take(c.len() - i) {
                c[i + j] += x * y;
            }
        }
        StepSeries { top, c }
    }

    /// `self += k * other`; both must have exponents of the same parity.
    fn add_scaled(&mut self, other: &StepSeries, k: &Rational) {
        if other.c.is_empty() {
            return;
        }
        if self.c.is_empty() {
            self.top = other.top;
        }
        debug_assert_eq!((self.top - other.top).rem_euclid(2), 0);
        if other.top > self.top {
            let pad = ((other.top - self.top) / 2) as usize;
            self.c.splice(0..0, std::iter::repeat(Rational::zero()).take(pad));
            self.top = other.top;
        }
        let offset = ((self.top - other.top) / 2) as usize;
        if self.c.len() < offset + other.c.len() {
            self.c.resize(offset + other.c.len(), Rational::zero());
        }
        for (i, x) in other.c.iter().enumerate() {
            self.c[offset + i] += x * k;
        }
    }
}

/// `prod mult! * prod j_i!`; the orbit of a sorted key has `n! / prod mult!` orderings.
pub fn orbit_denominator(key: &[u32]) -> Rational {
    let mut d = Rational::one();
    let mut run = 0;
    for (i, &j) in key.iter().enumerate() {
        run = if i > 0 && key[i - 1] == j { run + 1 } else { 1 };
        d *= Rational::from_integer(factorial(j as u64) * run);
    }
    d
}

fn check_complete(npoints: &[NPointWindow], params: &SpecializationParams) -> Result<(), EulerError> {
    let mut seen = BTreeMap::new();
    for w in npoints {
        if seen.insert(w.series.arity(), w.order).is_some() {
            return Err(EulerError::DuplicateArity(w.series.arity()));
        }
    }
    for (n, need) in params.required_orders() {
        match seen.get(&n) {
            None => return Err(EulerError::MissingArity(n)),
            Some(&have) if have < need => return Err(EulerError::Incomplete { n, have, need }),
            _ => {}
        }
    }
    Ok(())
}

/// Rows `y^a`, dense in `z` from `floor` to `a`.
struct Rows {
    floor: i32,
    rows: Vec<Vec<Rational>>,
}

impl Rows {
    fn new(floor: i32, rows: u32) -> Self {
        Rows {
            floor,
            rows: (0..=rows as i32).map(|a| vec![Rational::zero(); (a - floor + 1).max(0) as usize]).collect(),
        }
    }

    fn add(&mut self, a: u32, shift: i32, s: &StepSeries) {
        let row = &mut self.rows[a as usize];
        for (k, c) in s.c.iter().enumerate() {
            let e = s.top + shift - 2 * k as i32;
            row[(e - self.floor) as usize] += c;
        }
    }

    fn merge(mut self, other: Rows) -> Rows {
        for (r, o) in self.rows.iter_mut().zip(other.rows) {
            for (x, y) in r.iter_mut().zip(o) {
                *x += y;
            }
        }
        self
    }
}

/// Applies `z_1^{-j_1-1}...z_N^{-j_N-1} -> V~_{j_1}...V~_{j_N} / (N! j_1!...j_N!)` to every
/// admitted term; with `include_y` false each `V~_j` is replaced by `V_j`.
///
/// The result is exact in every y-degree for z-exponents `>= params.read_floor()`.
pub fn specialize(npoints: &[NPointWindow], params: &SpecializationParams, include_y: bool) -> Result<BiSeries, EulerError> {
    check_complete(npoints, params)?;
    let mut groups: BTreeMap<Vec<u32>, Vec<(u32, Rational)>> = BTreeMap::new();
    for w in npoints {
        for (key, c) in w.series.terms() {
            if !params.admits(key) {
                continue;
            }
            let ones = key.iter().take_while(|&&j| j == 1).count();
            groups
                .entry(key[ones..].to_vec())
                .or_default()
                .push((ones as u32, c / orbit_denominator(key)));
        }
    }
    let floor = params.z_floor();
    let read = params.read_floor();
    let top_row = if include_y { params.n_max } else { 0 };
    let max_ones = groups.values().flatten().map(|(p, _)| *p).max().unwrap_or(0);
    let max_index = groups.keys().flatten().copied().max().unwrap_or(1);
    let vs: Vec<StepSeries> = (0..=max_index.max(1)).map(|n| StepSeries::v(n, floor)).collect();
    let mut v1_pow = vec![StepSeries::one()];
    for m in 1..=max_ones as usize {
        let next = v1_pow[m - 1].mul(&vs[1], floor);
        v1_pow.push(next);
    }
    let binom: Vec<Vec<Rational>> = (0..=max_ones as u64)
        .map(|p| (0..=p).map(|a| Rational::from_integer(binomial(p, a))).collect())
        .collect();

    let groups: Vec<(Vec<u32>, Vec<(u32, Rational)>)> = groups.into_iter().collect();
    let chunk = (groups.len() / (4 * rayon::current_num_threads())).max(1);
    let rows = groups
        .par_chunks(chunk)
        .map(|chunk| {
            let mut rows = Rows::new(read, top_row);
            // Products of V_j over prefixes of the current rest.
            let mut stack: Vec<(u32, StepSeries)> = Vec::new();
            for (rest, terms) in chunk {
                let common = stack.iter().zip(rest).take_while(|((j, _), r)| j == *r).count();
                stack.truncate(common);
                for &j in &rest[common..] {
                    let prev = stack.last().map_or_else(StepSeries::one, |(_, s)| s.clone());
                    stack.push((j, prev.mul(&vs[j as usize], floor)));
                }
                let q = stack.last().map_or_else(StepSeries::one, |(_, s)| s.clone());
                if q.is_zero() {
                    continue;
                }
                let most = terms.iter().map(|(p, _)| *p).max().unwrap_or(0);
                for a in 0..=top_row.min(most) {
                    // Sum over the number of ones that carry y z.
                    let mut t = StepSeries { top: 0, c: Vec::new() };
                    for (p1, w) in terms.iter().filter(|(p1, _)| *p1 >= a) {
                        let k = w * &binom[*p1 as usize][a as usize];
                        t.add_scaled(&v1_pow[(p1 - a) as usize], &k);
                    }
                    let u = q.mul(&t, read - a as i32);
                    rows.add(a, a as i32, &u);
                }
            }
            rows
        })
        .reduce(|| Rows::new(read, top_row), Rows::merge);

    let mut out = params.window();
    for (a, row) in rows.rows.into_iter().enumerate() {
        for (i, c) in row.into_iter().enumerate() {
            out.add_term(a as u32, read + i as i32, c)?;
        }
    }
    out.restrict_floor(read);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn step_series_arithmetic() {
        let v1 = StepSeries::v(1, -7);
        assert_eq!((v1.top, v1.c.len()), (-1, 4));
        let sq = v1.mul(&v1, -6);
        assert_eq!(sq.top, -2);
        assert_eq!(sq.c[0], rat(1, 144));
        assert_eq!(sq.c.len(), 3);
        let mut t = StepSeries::v(2, -6);
        t.add_scaled(&StepSeries::one(), &rat(2, 1));
        assert_eq!((t.top, t.c[0].clone(), t.c[1].clone()), (0, rat(2, 1), rat(1, 12)));
    }

    #[test]
    fn orbit_weights() {
        assert_eq!(orbit_denominator(&[2]), rat(2, 1));
        assert_eq!(orbit_denominator(&[1, 1]), rat(2, 1));
        assert_eq!(orbit_denominator(&[1, 1, 3, 3]), rat(144, 1));
    }
}
