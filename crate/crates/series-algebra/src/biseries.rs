use std::collections::BTreeMap;

use exact_core::{format_rational, Rational};
use num_traits::Zero;

use crate::SeriesError;

/// Series `sum c_{a,e} y^a z^e` with `a <= y_cap` and `z_floor <= e <= z_ceiling`.
///
/// Each y-degree carries its own guaranteed-correct floor: a coefficient below it
/// was affected by truncation of some factor and cannot be read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries {
    y_cap: u32,
    z_floor: i32,
    z_ceiling: i32,
    valid: Vec<i32>,
    coeffs: BTreeMap<(u32, i32), Rational>,
}

impl BiSeries {
    /// Zero series, exact everywhere in its window.
    pub fn new(y_cap: u32, z_floor: i32, z_ceiling: i32) -> Self {
        BiSeries {
            y_cap,
            z_floor,
            z_ceiling,
            valid: vec![z_floor; y_cap as usize + 1],
            coeffs: BTreeMap::new(),
        }
    }

    pub fn y_cap(&self) -> u32 {
        self.y_cap
    }

    pub fn z_floor(&self) -> i32 {
        self.z_floor
    }

    pub fn z_ceiling(&self) -> i32 {
        self.z_ceiling
    }

    /// Guaranteed-correct floor at y-degree `a`.
    pub fn valid_floor(&self, a: u32) -> i32 {
        self.valid[a as usize]
    }

    /// Raises the guaranteed floor of every y-degree to at least `floor`.
    pub fn restrict_floor(&mut self, floor: i32) {
        for v in &mut self.valid {
            *v = (*v).max(floor);
        }
    }

    /// Adds `c y^a z^e`. Terms with `a > y_cap` or `e < z_floor` are dropped; `e > z_ceiling` fails.
    pub fn add_term(&mut self, a: u32, e: i32, c: Rational) -> Result<(), SeriesError> {
        if a > self.y_cap || e < self.z_floor || c.is_zero() {
            return Ok(());
        }
        if e > self.z_ceiling {
            return Err(SeriesError::Overflow { z: e, ceiling: self.z_ceiling });
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry((a, e)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, i32), &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn compatible(&self, other: &BiSeries) -> Result<(), SeriesError> {
        if self.y_cap != other.y_cap
            || self.z_floor != other.z_floor
            || self.z_ceiling != other.z_ceiling
        {
            return Err(SeriesError::MismatchedWindow);
        }
        Ok(())
    }

    /// Largest exponent that can occur in row `a`, counting the unknown tail below the floor.
    fn row_max(&self, a: u32) -> i32 {
        let stored = self
            .coeffs
            .range((a, i32::MIN)..=(a, i32::MAX))
            .next_back()
            .map(|((_, e), _)| *e);
        let tail = self.valid[a as usize] - 1;
        stored.map_or(tail, |e| e.max(tail))
    }

    pub fn add(&self, other: &BiSeries) -> Result<BiSeries, SeriesError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (v, w) in out.valid.iter_mut().zip(&other.valid) {
            *v = (*v).max(*w);
        }
        for (&(a, e), c) in &other.coeffs {
            out.add_term(a, e, c.clone())?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> BiSeries {
        let mut out = self.clone();
        out.coeffs = self
            .coeffs
            .iter()
            .map(|(key, c)| (*key, c * k))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        out
    }

    pub fn mul(&self, other: &BiSeries) -> Result<BiSeries, SeriesError> {
        self.compatible(other)?;
        let mut out = BiSeries::new(self.y_cap, self.z_floor, self.z_ceiling);
        for c in 0..=self.y_cap {
            let mut floor = self.z_floor;
            for a in 0..=c {
                let b = c - a;
                floor = floor
                    .max(self.valid[a as usize] + other.row_max(b))
                    .max(other.valid[b as usize] + self.row_max(a));
            }
            out.valid[c as usize] = floor;
        }
        for (&(a1, e1), c1) in &self.coeffs {
            for (&(a2, e2), c2) in &other.coeffs {
                if a1 + a2 > self.y_cap {
                    continue;
                }
                out.add_term(a1 + a2, e1 + e2, c1 * c2)?;
            }
        }
        Ok(out)
    }

    /// Coefficient of `y^a z^e`; reading outside the guaranteed window is an error.
    pub fn coeff(&self, a: u32, e: i32) -> Result<Rational, SeriesError> {
        if a > self.y_cap || e > self.z_ceiling || e < self.valid[a as usize] {
            return Err(SeriesError::OutsideWindow { y: a, z: e });
        }
        Ok(self.coeffs.get(&(a, e)).cloned().unwrap_or_else(Rational::zero))
    }

    /// One term per line, `coeff<TAB>y^a z^e`, ordered by y-degree then descending z.
    pub fn dump(&self) -> String {
        let mut keys: Vec<&(u32, i32)> = self.coeffs.keys().collect();
        keys.sort_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
        let mut s = String::new();
        for key in keys {
            let (a, e) = *key;
            s.push_str(&format_rational(&self.coeffs[key]));
            s.push('\t');
            let mut parts = Vec::new();
            match a {
                0 => {}
                1 => parts.push("y".to_string()),
                _ => parts.push(format!("y^{a}")),
            }
            match e {
                0 => {}
                1 => parts.push("z".to_string()),
                _ => parts.push(format!("z^{e}")),
            }
            if parts.is_empty() {
                parts.push("1".to_string());
            }
            s.push_str(&parts.join(" "));
            s.push('\n');
        }
        s
    }
}

/// Free-function form of [`BiSeries::mul`].
pub fn bi_mul(a: &BiSeries, b: &BiSeries) -> Result<BiSeries, SeriesError> {
    a.mul(b)
}

/// Free-function form of [`BiSeries::coeff`].
pub fn bi_coeff(s: &BiSeries, y_pow: u32, z_pow: i32) -> Result<Rational, SeriesError> {
    s.coeff(y_pow, z_pow)
}
