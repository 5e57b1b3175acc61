use exact_core::{Rational, Verdict};
use kp_npoint::{connected_npoint, NPointBackend, NPointError};
use series_algebra::NPointSeries;

use crate::{fat_W, fat_min_order, thin_W, ThinCoefficients};

/// Thin genus of the key, if the selection rule allows one.
pub fn thin_genus(key: &[u32]) -> Option<u32> {
    let s: i64 = key.iter().map(|&j| j as i64).sum();
    let twice = s - 2 * key.len() as i64 + 2;
    (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as u32)
}

fn order_of(key: &[u32]) -> u32 {
    key.iter().sum::<u32>() + key.len() as u32
}

/// Largest arity with keys of total order `<= order`.
fn max_arity(order: u32) -> usize {
    (order as usize + 2) / 3
}

fn backend(e: crate::RecursionError) -> NPointError {
    NPointError::Backend(e.to_string())
}

fn thin_sum(n: usize, order: u32) -> Result<NPointSeries, NPointError> {
    let mut total = NPointSeries::new(n)?;
    let mut g = 0;
    while 2 * g as i64 - 2 + 3 * n as i64 <= order as i64 {
        if (g, n) != (0, 1) {
            let w = thin_W(g, n).and_then(|w| w.to_series()).map_err(backend)?;
            total = total.sum(&w)?;
        }
        g += 1;
    }
    Ok(total)
}

fn fat_sum(n: usize, order: u32, max_genus: u32) -> Result<NPointSeries, NPointError> {
    let mut total = NPointSeries::new(n)?;
    for g in 0..=max_genus {
        if fat_min_order(g, n) <= order {
            let w = fat_W(g, n, order).map_err(backend)?;
            total = total.sum(&w)?;
        }
    }
    Ok(total)
}

fn compare(name: String, ours: &NPointSeries, target: &NPointSeries, keep: impl Fn(&[u32]) -> bool) -> Verdict {
    let (a, b) = (ours.filtered(&keep), target.filtered(&keep));
    match a.first_difference(&b) {
        Some((key, x, y)) => Verdict::fail(name, format!("{key:?}: {x} vs {y}")),
        None => Verdict::pass(name, format!("{} orbits", b.len())),
    }
}

/// Sum over genera of the thin correlators against the cycle formula, for each arity.
pub fn thin_total_check(order: u32) -> Verdict {
    let mut parts = Vec::new();
    for n in 1..=max_arity(order) {
        let result = thin_sum(n, order).and_then(|t| Ok((t, connected_npoint(n, order)?)));
        parts.push(match result {
            Ok((thin, target)) => compare(format!("n = {n}"), &thin, &target, |_| true),
            Err(e) => Verdict::fail(format!("n = {n}"), e.to_string()),
        });
    }
    Verdict::all(format!("thin total, order {order}"), parts)
}

/// Sum over fat genera `<= max_genus` against the cycle formula, on the keys where the
/// fat sum is complete.
pub fn fat_total_check(order: u32, max_genus: u32) -> Verdict {
    let mut parts = Vec::new();
    for n in 1..=max_arity(order) {
        let complete = |key: &[u32]| fat_min_order(max_genus + 1, key.len()) > order_of(key);
        let result = fat_sum(n, order, max_genus).and_then(|t| Ok((t, connected_npoint(n, order)?)));
        parts.push(match result {
            Ok((fat, target)) => compare(format!("n = {n}"), &fat, &target, complete),
            Err(e) => Verdict::fail(format!("n = {n}"), e.to_string()),
        });
    }
    Verdict::all(format!("fat total, order {order}, genus <= {max_genus}"), parts)
}

/// Thin recursion through its coefficient form.
pub struct ThinBackend;

impl NPointBackend for ThinBackend {
    fn name(&self) -> &'static str {
        "thin"
    }

    fn npoint(&self, n: usize, order: u32) -> Result<NPointSeries, NPointError> {
        thin_sum(n, order)
    }

    fn coefficients(&self, keys: &[Vec<u32>]) -> Result<Vec<Rational>, NPointError> {
        let mut engine = ThinCoefficients::new();
        Ok(keys.iter().map(|k| Rational::from_integer(engine.total(k))).collect())
    }
}

/// Fat recursion summed over genera; only orders the genus cap fully covers are served.
pub struct FatBackend {
    pub max_genus: u32,
}

impl NPointBackend for FatBackend {
    fn name(&self) -> &'static str {
        "fat"
    }

    fn npoint(&self, n: usize, order: u32) -> Result<NPointSeries, NPointError> {
        if fat_min_order(self.max_genus + 1, n) <= order {
            return Err(NPointError::Unsupported("fat"));
        }
        fat_sum(n, order, self.max_genus)
    }
}

/// Three-way agreement on keys of total order `<= order` whose thin label has
/// `2g + n <= thin_max`, restricted to where fat genera with `2g + n <= fat_max` are complete.
pub fn cross_pipeline_check(order: u32, thin_max: u32, fat_max: u32) -> Verdict {
    let mut parts = Vec::new();
    for n in 1..=max_arity(order) {
        let fat_genus = (fat_max.saturating_sub(n as u32)) / 2;
        let keep = |key: &[u32]| {
            let thin_ok = thin_genus(key).is_some_and(|g| 2 * g + key.len() as u32 <= thin_max);
            let fat_ok = fat_min_order(fat_genus + 1, key.len()) > order_of(key);
            thin_ok && fat_ok
        };
        let sums = (|| -> Result<_, NPointError> {
            let affine = kp_npoint::AffineBackend.npoint(n, order)?;
            let thin = thin_sum(n, order)?;
            let fat = if n as u32 <= fat_max { fat_sum(n, order, fat_genus)? } else { NPointSeries::new(n)? };
            Ok((affine, thin, fat))
        })();
        match sums {
            Ok((affine, thin, fat)) => {
                parts.push(compare(format!("thin n = {n}"), &thin, &affine, keep));
                parts.push(compare(format!("fat n = {n}"), &fat, &affine, keep));
            }
            Err(e) => parts.push(Verdict::fail(format!("n = {n}"), e.to_string())),
        }
    }
    Verdict::all(format!("affine/thin/fat agreement, order {order}"), parts)
}
