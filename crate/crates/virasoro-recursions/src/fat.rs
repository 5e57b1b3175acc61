use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use exact_core::{rat, Rational};
use num_traits::{One, Zero};
use series_algebra::NPointSeries;

use crate::rational_fn::RationalFn;
use crate::series1::{inverse_uniformizer, Series1};
use crate::RecursionError;

/// Pole-basis key: entry `k > 0` is `(w_i - 1)^{-k}`, `k < 0` is `(w_i + 1)^{k}`, `0` is `1`.
pub type PoleKey = Vec<i16>;

/// Fat correlator `omega_{g,n} / (dw_1...dw_n)` on `z = w + 1/w`, exact in the pole basis.
///
/// One entry per orbit of the symmetric group, stored under the sorted key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatCorrelator {
    g: u32,
    n: usize,
    orbits: HashMap<PoleKey, Rational>,
}

impl FatCorrelator {
    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Number of stored orbits.
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Coefficient of a pole term, in any variable order.
    pub fn coeff(&self, key: &[i16]) -> Rational {
        let mut k = key.to_vec();
        k.sort_unstable();
        self.orbits.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Sorted keys, one per orbit.
    pub fn terms(&self) -> impl Iterator<Item = (&PoleKey, &Rational)> {
        self.orbits.iter()
    }

    /// Number of pole terms counted with all their orderings.
    pub fn full_len(&self) -> u64 {
        self.orbits.keys().map(|k| arrangements(k)).sum()
    }

    /// Largest pole order in any variable.
    pub fn max_pole_order(&self) -> u32 {
        self.orbits.keys().flat_map(|k| k.iter().map(|e| e.unsigned_abs() as u32)).max().unwrap_or(0)
    }

    /// Dependence on one variable with the others at fixed pole data, as a rational function of w.
    pub fn active_function(&self, spectators: &[i16]) -> RationalFn {
        let mut values: Vec<i16> = self.orbits.keys().flatten().copied().collect();
        values.sort_unstable();
        values.dedup();
        let mut out = RationalFn::zero();
        for e in values {
            let mut key = spectators.to_vec();
            key.push(e);
            let c = self.coeff(&key);
            if !c.is_zero() {
                out = out.add(&RationalFn::pole(e, c));
            }
        }
        out
    }

    /// One line per term, `coeff<TAB>numerator / denominator` in the `w_i`, in key order.
    pub fn dump(&self) -> String {
        let mut keys: Vec<PoleKey> = self.orbits.keys().flat_map(|k| orderings(k)).collect();
        keys.sort();
        let mut s = String::new();
        for k in keys {
            let den: Vec<String> = k
                .iter()
                .enumerate()
                .filter(|(_, e)| **e != 0)
                .map(|(i, &e)| {
                    let sign = if e > 0 { '-' } else { '+' };
                    format!("(w{} {} 1)^{}", i + 1, sign, e.unsigned_abs())
                })
                .collect();
            s.push_str(&format!("{}\t1 / {}\n", exact_core::format_rational(&self.coeff(&k)), den.join(" ")));
        }
        s
    }

    /// `W^fat_{g,n}` on `sum (j_i + 1) <= order`, dropping keys with some `j_i = 0`.
    pub fn expand(&self, order: u32) -> Result<NPointSeries, RecursionError> {
        let hi = order as i32;
        let mut basis: HashMap<i16, Series1> = HashMap::new();
        for k in self.orbits.keys() {
            for &e in k {
                if e == 0 {
                    return Err(RecursionError::UnexpectedPole { g: self.g as i32, n: self.n });
                }
                basis.entry(e).or_insert_with(|| pole_in_z(e, hi));
            }
        }
        // Each orbit is expanded in its own variable order; the symmetrization
        // factor arrangements(K) / arrangements(E) is applied per exponent multiset E.
        let mut acc: HashMap<Vec<u32>, Rational> = HashMap::new();
        for (k, c) in &self.orbits {
            let factors: Vec<&Series1> = k.iter().map(|e| &basis[e]).collect();
            let weight = c * Rational::from_integer(arrangements(k).into());
            spread(k, &factors, hi, weight, &mut Vec::new(), &mut acc);
        }
        let mut out = NPointSeries::new(self.n)?;
        for (exps, c) in acc {
            let c = c / Rational::from_integer(arrangements(&exps).into());
            if !c.is_zero() {
                let key: Vec<u32> = exps.iter().map(|e| e - 1).collect();
                out.set(&key, c)?;
            }
        }
        Ok(out)
    }
}

/// Number of distinct orderings of a multiset given as a sorted slice.
fn arrangements<T: PartialEq>(sorted: &[T]) -> u64 {
    let mut total = 1u64;
    let mut run = 0u64;
    for (i, x) in sorted.iter().enumerate() {
        run = if i > 0 && sorted[i - 1] == *x { run + 1 } else { 1 };
        total = total * (i as u64 + 1) / run;
    }
    total
}

/// All distinct orderings of a sorted key.
fn orderings(sorted: &[i16]) -> Vec<PoleKey> {
    let mut cur = sorted.to_vec();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// `prod_v C(mult_{a+b}(v), mult_a(v))` for sorted `a`, `b`, with the sorted union.
fn shuffle(a: &[i16], b: &[i16]) -> (PoleKey, u64) {
    let mut merged = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut weight = 1u64;
    while i < a.len() || j < b.len() {
        let v = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => unreachable!(),
        };
        let (mut ka, mut kb) = (0u64, 0u64);
        while a.get(i) == Some(&v) {
            ka += 1;
            i += 1;
        }
        while b.get(j) == Some(&v) {
            kb += 1;
            j += 1;
        }
        for t in 0..ka {
            weight = weight * (kb + t + 1) / (t + 1);
        }
        merged.extend(std::iter::repeat(v).take((ka + kb) as usize));
    }
    (merged, weight)
}

/// Sorted key with one copy of each listed entry removed.
fn without(sorted: &[i16], drop: &[i16]) -> PoleKey {
    let mut out = sorted.to_vec();
    for d in drop {
        let at = out.iter().position(|x| x == d).expect("entry present");
        out.remove(at);
    }
    out
}

fn distinct(sorted: &[i16]) -> impl Iterator<Item = (usize, i16)> + '_ {
    sorted.iter().enumerate().filter(|(i, x)| *i == 0 || sorted[i - 1] != **x).map(|(i, x)| (i, *x))
}

/// Distributes a product of one-variable series in `1/z_i` over exponent tuples with total `<= hi`.
///
/// Factors with equal keys get nondecreasing exponents, weighted by their number of orderings.
fn spread(
    keys: &[i16],
    factors: &[&Series1],
    hi: i32,
    c: Rational,
    prefix: &mut Vec<u32>,
    out: &mut HashMap<Vec<u32>, Rational>,
) {
    let i = prefix.len();
    if i == factors.len() {
        let mut weight = 1u64;
        let mut start = 0;
        while start < keys.len() {
            let end = (start..keys.len()).find(|&t| keys[t] != keys[start]).unwrap_or(keys.len());
            weight *= arrangements(&prefix[start..end]);
            start = end;
        }
        let mut sorted = prefix.clone();
        sorted.sort_unstable();
        let slot = out.entry(sorted).or_insert_with(Rational::zero);
        *slot += c * Rational::from_integer(weight.into());
        return;
    }
    let used: i32 = prefix.iter().map(|&e| e as i32).sum();
    let rest_min: i32 = factors[i + 1..].iter().map(|s| s.lo().max(2)).sum();
    let mut lo = factors[i].lo().max(2);
    if i > 0 && keys[i] == keys[i - 1] {
        lo = lo.max(prefix[i - 1] as i32);
    }
    for e in lo..=(hi - used - rest_min) {
        let a = factors[i].coeff(e);
        if a.is_zero() {
            continue;
        }
        prefix.push(e as u32);
        spread(keys, factors, hi, &c * a, prefix, out);
        prefix.pop();
    }
}

/// `(w - b)^{-k} dw/dz` in powers of `1/z`, known through `(1/z)^hi`.
fn pole_in_z(e: i16, hi: i32) -> Series1 {
    let k = e.unsigned_abs() as i32;
    let b = Rational::from_integer(e.signum().into());
    let v = inverse_uniformizer(hi + 3);
    // v = eps * u with u a unit series.
    let u = Series1::from_coeffs(0, (1..=hi + 3).map(|i| v.coeff(i)).collect());
    let one = Series1::monomial(0, Rational::one());
    // (w - b)^{-k} = v^k (1 - b v)^{-k};  dw/dz = eps^2 v' / v^2.
    let one_minus_bv = one.add(&v.scale(&-b));
    let q = one_minus_bv.pow_unit(-k, hi + 2);
    let uk = u.pow_unit(k - 2, hi + 2);
    let dv = v.derivative();
    let body = uk.mul(&q, hi + 2).mul(&dv, hi + 2);
    // v^{k-2} eps^2 = eps^k u^{k-2}
    body.shift(k).truncate(hi)
}

/// Expansion of `W^fat_{0,1} = 1/w` in odd powers `z^{-1}, z^{-3}, ...`.
#[allow(non_snake_case)]
pub fn fat_W01_expansion(terms: usize) -> Vec<Rational> {
    let hi = 2 * terms as i32 - 1;
    let v = inverse_uniformizer(hi);
    (0..terms).map(|k| v.coeff(2 * k as i32 + 1)).collect()
}

/// `W^fat_{0,2} dz_1 dz_2 = dw_1 dw_2 / (w_1 w_2 - 1)^2` on `sum (j_i + 1) <= order`.
#[allow(non_snake_case)]
fn fat_W02(order: u32) -> Result<NPointSeries, RecursionError> {
    let hi = order as i32;
    let v = inverse_uniformizer(hi + 2);
    let u = Series1::from_coeffs(0, (1..=hi + 3).map(|i| v.coeff(i)).collect());
    let dv = v.derivative();
    // w^{-p} dw/dz = eps^p u^{p-2} v'
    let power = |p: i32| u.pow_unit(p - 2, hi).mul(&dv, hi).shift(p).truncate(hi);
    let mut out = NPointSeries::new(2)?;
    let mut p = 2;
    while 2 * p <= hi {
        let s = power(p);
        for e1 in s.lo().max(2)..=hi {
            for e2 in e1.max(s.lo())..=(hi - e1) {
                let c = s.coeff(e1) * s.coeff(e2) * rat(p as i64 - 1, 1);
                out.add(&[e1 as u32 - 1, e2 as u32 - 1], c)?;
            }
        }
        p += 1;
    }
    Ok(out)
}

/// Local series keyed by the sorted pole data of the spectators they carry.
type Factor = HashMap<PoleKey, Series1>;

type Memo = Mutex<HashMap<(u32, usize), Arc<FatCorrelator>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn shared(g: u32, n: usize) -> Result<Arc<FatCorrelator>, RecursionError> {
    if n == 0 || 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(RecursionError::Unstable { g: g as i32, n });
    }
    if let Some(w) = memo().lock().expect("memo").get(&(g, n)) {
        return Ok(w.clone());
    }
    let w = Arc::new(eo_step(g, n - 1)?);
    memo().lock().expect("memo").insert((g, n), w.clone());
    Ok(w)
}

/// `omega_{g,n}` for `2g - 2 + n > 0` from the Eynard-Orantin recursion.
pub fn fat_omega(g: u32, n: usize) -> Result<FatCorrelator, RecursionError> {
    shared(g, n).map(|w| (*w).clone())
}

/// `W^fat_{g,n}` on the window `sum (j_i + 1) <= order`.
#[allow(non_snake_case)]
pub fn fat_W(g: u32, n: usize, order: u32) -> Result<NPointSeries, RecursionError> {
    match (g, n) {
        (0, 1) => {
            let mut out = NPointSeries::new(1)?;
            for (k, c) in fat_W01_expansion(order as usize / 2 + 1).into_iter().enumerate().skip(1) {
                if 2 * k as u32 + 1 <= order {
                    out.set(&[2 * k as u32], c)?;
                }
            }
            Ok(out)
        }
        (0, 2) => fat_W02(order),
        _ => shared(g, n)?.expand(order),
    }
}

/// Lowest total order `sum (j_i + 1)` at which `W^fat_{g,n}` can be nonzero.
pub fn fat_min_order(g: u32, n: usize) -> u32 {
    (4 * g + 3 * n as u32).saturating_sub(2)
}

/// Local data at the branch point `w = a`, with `t = w - a`.
struct Local {
    a: i16,
    ar: Rational,
}

impl Local {
    fn new(a: i16) -> Self {
        Local { a, ar: Rational::from_integer(a.into()) }
    }

    /// `s = 1/w - a = -t / (1 + a t)`.
    fn s(&self, hi: i32) -> Series1 {
        let one_at = Series1::from_coeffs(0, vec![Rational::one(), self.ar.clone()]);
        Series1::monomial(1, -Rational::one()).mul(&one_at.inverse(hi), hi)
    }

    /// `-u^2 = -1/(a + t)^2`, the Jacobian of the involution.
    fn jacobian(&self, hi: i32) -> Series1 {
        let a_t = Series1::from_coeffs(0, vec![self.ar.clone(), Rational::one()]);
        a_t.pow_unit(-2, hi).scale(&-Rational::one())
    }

    /// `(w - b)^{-k}` near `t = 0`.
    fn direct(&self, e: i16, hi: i32) -> Series1 {
        let k = e.unsigned_abs() as i32;
        if e == 0 {
            return Series1::monomial(0, Rational::one());
        }
        if e.signum() == self.a {
            return Series1::monomial(-k, Rational::one());
        }
        let base = Series1::from_coeffs(0, vec![rat(2 * self.a as i64, 1), Rational::one()]);
        base.pow_unit(-k, hi)
    }

    /// `(1/w - b)^{-k}` near `t = 0`.
    fn sigma(&self, e: i16, hi: i32) -> Series1 {
        let k = e.unsigned_abs() as i32;
        if e == 0 {
            return Series1::monomial(0, Rational::one());
        }
        if e.signum() == self.a {
            // s^{-k} = (-1)^k t^{-k} (1 + a t)^k
            let one_at = Series1::from_coeffs(0, vec![Rational::one(), self.ar.clone()]);
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            return one_at.pow_unit(k, hi + k).shift(-k).scale(&sign);
        }
        let two_a = Series1::monomial(0, rat(2 * self.a as i64, 1));
        two_a.add(&self.s(hi)).pow_unit(-k, hi)
    }

    /// Kernel `dw0/dw` coefficient, one series per pole of `w0`.
    fn kernel(&self, hi: i32) -> Vec<(i16, Series1)> {
        // h(t) = -(a+t)^3 / (2 t^2 (2a+t)^2), the sign fixed by the genus-one one-point data.
        let a_t = Series1::from_coeffs(0, vec![self.ar.clone(), Rational::one()]);
        let two_a_t = Series1::from_coeffs(0, vec![rat(2 * self.a as i64, 1), Rational::one()]);
        let h = a_t
            .pow_unit(3, hi + 2)
            .mul(&two_a_t.pow_unit(-2, hi + 2), hi + 2)
            .scale(&rat(-1, 2))
            .shift(-2);
        let s = self.s(hi + 2);
        let mut out = Vec::new();
        let mut s_pow = Series1::monomial(0, Rational::one());
        for m in 0..=(hi + 2) {
            let t_pow = Series1::monomial(m, Rational::one());
            let bracket = t_pow.add(&s_pow.scale(&-Rational::one()));
            if m > 0 {
                out.push((self.a * (m as i16 + 1), h.mul(&bracket, hi)));
            }
            s_pow = s_pow.mul(&s, hi + 2);
        }
        out
    }

    /// `B(w, w_i) = 1/(w - w_i)^2`, or with `w -> 1/w` and the Jacobian.
    fn bergman(&self, sigma: bool, hi: i32) -> Factor {
        let mut out = Factor::new();
        let s = self.s(hi);
        let jac = self.jacobian(hi);
        let mut s_pow = Series1::monomial(0, Rational::one());
        for m in 0..=hi.max(0) {
            let c = rat(m as i64 + 1, 1);
            let series = if sigma {
                s_pow.mul(&jac, hi).scale(&c)
            } else {
                Series1::monomial(m, c)
            };
            out.insert(vec![self.a * (m as i16 + 2)], series);
            s_pow = s_pow.mul(&s, hi);
        }
        out
    }

    /// A stable correlator with one variable at `w` (or `1/w`), keyed by the rest.
    fn correlator(&self, w: &FatCorrelator, sigma: bool, hi: i32) -> Factor {
        let jac = self.jacobian(hi + 2 * w.max_pole_order() as i32);
        let mut local: HashMap<i16, Series1> = HashMap::new();
        let mut out = Factor::new();
        for (k, c) in &w.orbits {
            for (_, e) in distinct(k) {
                let s = local.entry(e).or_insert_with(|| {
                    if sigma {
                        self.sigma(e, hi).mul(&jac, hi)
                    } else {
                        self.direct(e, hi)
                    }
                });
                add_into(&mut out, without(k, &[e]), s.scale(c));
            }
        }
        out
    }

    /// `omega(w, 1/w, rest)` with the Jacobian of the second slot.
    fn diagonal(&self, w: &FatCorrelator, hi: i32) -> Factor {
        let span = 2 * w.max_pole_order() as i32 + 2;
        let jac = self.jacobian(hi + span);
        let mut local: HashMap<(i16, i16), Series1> = HashMap::new();
        let mut out = Factor::new();
        for (k, c) in &w.orbits {
            for (_, e) in distinct(k) {
                let rest = without(k, &[e]);
                for (_, f) in distinct(&rest) {
                    let s = local.entry((e, f)).or_insert_with(|| {
                        let a = self.direct(e, hi + span);
                        let b = self.sigma(f, hi + span);
                        a.mul(&b, hi + span).mul(&jac, hi)
                    });
                    add_into(&mut out, without(&rest, &[f]), s.scale(c));
                }
            }
        }
        out
    }
}

fn add_into(f: &mut Factor, key: PoleKey, s: Series1) {
    match f.get_mut(&key) {
        Some(old) => *old = old.add(&s),
        None => {
            f.insert(key, s);
        }
    }
}

fn lowest(f: &Factor) -> i32 {
    f.values().map(|s| s.lo()).min().unwrap_or(0)
}

/// Sum over all ways of splitting the spectators between the two factors.
fn product(x: &Factor, y: &Factor, hi: i32) -> Factor {
    let mut out = Factor::new();
    for (kx, sx) in x {
        for (ky, sy) in y {
            let (key, weight) = shuffle(kx, ky);
            let s = sx.mul(sy, hi);
            let s = if weight == 1 { s } else { s.scale(&Rational::from_integer(weight.into())) };
            add_into(&mut out, key, s);
        }
    }
    out
}

/// `omega_{g, n+1}(w0, w1..wn)`.
fn eo_step(g: u32, n: usize) -> Result<FatCorrelator, RecursionError> {
    let mut split: HashMap<(i16, PoleKey), Rational> = HashMap::new();
    for a in [1i16, -1] {
        let local = Local::new(a);
        // Body terms, each a product whose residue against the kernel is needed.
        let mut bodies: Vec<Factor> = Vec::new();
        if g >= 1 {
            if (g - 1, n + 2) == (0, 2) {
                // omega_{0,2}(w, 1/w) d(1/w) = -1/(w^2 - 1)^2 = -t^{-2} (2a + t)^{-2}
                let base = Series1::from_coeffs(0, vec![rat(2 * a as i64, 1), Rational::one()]);
                let s = base.pow_unit(-2, 3).shift(-2).scale(&-Rational::one());
                bodies.push(Factor::from([(Vec::new(), s)]));
            } else {
                bodies.push(local.diagonal(&*shared(g - 1, n + 2)?, 1));
            }
        }
        for g1 in 0..=g {
            let g2 = g - g1;
            for m in 0..=n {
                if (g1, m) == (0, 0) || (g2, n - m) == (0, 0) {
                    continue;
                }
                let (lp, rp) = (piece(g1, m)?, piece(g2, n - m)?);
                // Each side is either a Bergman kernel or a stable correlator.
                let fl = lp.factor(&local, false, 1 - rp.lower_bound());
                let fr = rp.factor(&local, true, 1 - lp.lower_bound());
                bodies.push(product(&fl, &fr, 1));
            }
        }
        let lo_body = bodies.iter().map(lowest).min().unwrap_or(0);
        let kernel = local.kernel(-1 - lo_body);
        for body in &bodies {
            for (kb, sb) in body {
                for (k0, sk) in &kernel {
                    let r = sk.product_coeff(sb, -1);
                    if !r.is_zero() {
                        *split.entry((*k0, kb.clone())).or_insert_with(Rational::zero) += r;
                    }
                }
            }
        }
    }
    split.retain(|_, c| !c.is_zero());
    symmetrize(g, n + 1, split)
}

/// Folds coefficients keyed by (pole of `w0`, sorted spectator poles) into orbits,
/// failing unless every choice of distinguished variable gives the same value.
fn symmetrize(g: u32, n: usize, split: HashMap<(i16, PoleKey), Rational>) -> Result<FatCorrelator, RecursionError> {
    let mut orbits: HashMap<PoleKey, Rational> = HashMap::new();
    for ((e, rest), c) in &split {
        let (key, _) = shuffle(&[*e], rest);
        orbits.entry(key).or_insert_with(|| c.clone());
    }
    for (key, c) in &orbits {
        for (_, e) in distinct(key) {
            if split.get(&(e, without(key, &[e]))) != Some(c) {
                return Err(RecursionError::NotSymmetric { g: g as i32, n });
            }
        }
    }
    Ok(FatCorrelator { g, n, orbits })
}

enum Piece {
    Bergman,
    Stable(Arc<FatCorrelator>),
}

fn piece(g: u32, spectators: usize) -> Result<Piece, RecursionError> {
    match (g, spectators) {
        (0, 1) => Ok(Piece::Bergman),
        (g, m) => shared(g, m + 1).map(Piece::Stable),
    }
}

impl Piece {
    /// Lowest t-exponent the local expansion can have.
    fn lower_bound(&self) -> i32 {
        match self {
            Piece::Bergman => 0,
            Piece::Stable(w) => -(w.max_pole_order() as i32),
        }
    }

    fn factor(&self, local: &Local, sigma: bool, hi: i32) -> Factor {
        match self {
            Piece::Bergman => local.bergman(sigma, hi),
            Piece::Stable(w) => local.correlator(w, sigma, hi),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_one_point() {
        // omega_{1,1} / dw = w^3 / ((w - 1)^4 (w + 1)^4) in partial fractions.
        let w = fat_omega(1, 1).unwrap();
        let f = w.active_function(&[]);
        let want = RationalFn::from_coeffs(&[0, 0, 0, 1], &[1, 0, -4, 0, 6, 0, -4, 0, 1]);
        assert_eq!(f, want);
        let series = w.expand(11).unwrap();
        assert_eq!(series.coeff(&[4]), rat(1, 1));
        assert_eq!(series.coeff(&[6]), rat(10, 1));
    }

    #[test]
    fn unstable_requests() {
        assert!(fat_omega(0, 2).is_err());
        assert!(fat_omega(0, 1).is_err());
        assert_eq!(fat_W01_expansion(6), [1, 1, 2, 5, 14, 42].map(|x| rat(x, 1)).to_vec());
    }

    #[test]
    fn orbit_helpers() {
        assert_eq!(arrangements(&[1, 1, 2, 3, 3, 3]), 60);
        assert_eq!(orderings(&[-2, 2, 2]), vec![vec![-2, 2, 2], vec![2, -2, 2], vec![2, 2, -2]]);
        assert_eq!(shuffle(&[2, 3], &[-2, 2]), (vec![-2, 2, 2, 3], 2));
        assert_eq!(without(&[-3, 2, 2, 4], &[2, 4]), vec![-3, 2]);
        // Orbit expansion agrees with the product of the ordered pole series.
        let w = fat_omega(0, 4).unwrap();
        assert_eq!(w.full_len() as usize, w.dump().lines().count());
    }
}
