use std::collections::BTreeMap;

use exact_core::{format_rational, parse_rational, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::SeriesError;

/// Symmetric function of `z_1..z_n` given by its coefficients on
/// `z_1^{-j_1-1} ... z_n^{-j_n-1}`, one stored entry per orbit (the sorted key).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NPointSeries {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl NPointSeries {
    pub fn new(n: usize) -> Result<Self, SeriesError> {
        if n == 0 {
            return Err(SeriesError::ZeroArity);
        }
        Ok(NPointSeries { n, terms: BTreeMap::new() })
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn canonical(&self, key: &[u32]) -> Result<Vec<u32>, SeriesError> {
        if key.len() != self.n || key.contains(&0) {
            return Err(SeriesError::InvalidKey(key.to_vec()));
        }
        let mut k = key.to_vec();
        k.sort_unstable();
        Ok(k)
    }

    /// Adds `c` to the orbit of `key` (any ordering).
    pub fn add(&mut self, key: &[u32], c: Rational) -> Result<(), SeriesError> {
        let k = self.canonical(key)?;
        if c.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            let k = self.canonical(key)?;
            self.terms.remove(&k);
        }
        Ok(())
    }

    /// Replaces the coefficient of the orbit of `key`.
    pub fn set(&mut self, key: &[u32], c: Rational) -> Result<(), SeriesError> {
        let k = self.canonical(key)?;
        if c.is_zero() {
            self.terms.remove(&k);
        } else {
            self.terms.insert(k, c);
        }
        Ok(())
    }

    /// Symmetric read: any permutation of a key returns the same value.
    pub fn coeff(&self, key: &[u32]) -> Rational {
        match self.canonical(key) {
            Ok(k) => self.terms.get(&k).cloned().unwrap_or_else(Rational::zero),
            Err(_) => Rational::zero(),
        }
    }

    /// Sorted keys with their coefficients, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Keeps only orbits satisfying `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&[u32]) -> bool) -> NPointSeries {
        NPointSeries {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Restriction to total z-order `sum (j_i + 1) <= order`.
    pub fn truncated(&self, order: u32) -> NPointSeries {
        let n = self.n as u32;
        self.filtered(|k| k.iter().sum::<u32>() + n <= order)
    }

    pub fn sum(&self, other: &NPointSeries) -> Result<NPointSeries, SeriesError> {
        if self.n != other.n {
            return Err(SeriesError::MismatchedWindow);
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add(k, c.clone())?;
        }
        Ok(out)
    }

    /// First orbit (in key order) where two series differ.
    pub fn first_difference(&self, other: &NPointSeries) -> Option<(Vec<u32>, Rational, Rational)> {
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            (a != b).then(|| (k.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(k, c)| json!({"j": k, "c": format_rational(c)}))
            .collect();
        json!({"n": self.n, "terms": terms})
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n"
    }

    pub fn from_json(v: &Value) -> Result<NPointSeries, SeriesError> {
        let bad = |what: &str| SeriesError::Parse(what.to_string());
        let n = v["n"].as_u64().ok_or_else(|| bad("n"))? as usize;
        let mut out = NPointSeries::new(n)?;
        for t in v["terms"].as_array().ok_or_else(|| bad("terms"))? {
            let key: Vec<u32> = t["j"]
                .as_array()
                .ok_or_else(|| bad("j"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("j entry")))
                .collect::<Result<_, _>>()?;
            let c = parse_rational(t["c"].as_str().ok_or_else(|| bad("c"))?)
                .map_err(|_| bad("c"))?;
            out.add(&key, c)?;
        }
        Ok(out)
    }

    pub fn from_json_str(s: &str) -> Result<NPointSeries, SeriesError> {
        let v: Value = serde_json::from_str(s).map_err(|e| SeriesError::Parse(e.to_string()))?;
        NPointSeries::from_json(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn symmetric_reads() {
        let mut s = NPointSeries::new(3).unwrap();
        s.add(&[3, 1, 2], rat(12, 1)).unwrap();
        assert_eq!(s.coeff(&[1, 2, 3]), rat(12, 1));
        assert_eq!(s.coeff(&[2, 3, 1]), rat(12, 1));
        assert_eq!(s.len(), 1);
        assert!(s.add(&[1, 2], rat(1, 1)).is_err());
        assert!(s.add(&[0, 1, 2], rat(1, 1)).is_err());
        assert!(NPointSeries::new(0).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut s = NPointSeries::new(2).unwrap();
        s.add(&[2, 2], rat(2, 1)).unwrap();
        s.add(&[3, 1], rat(-3, 7)).unwrap();
        let text = s.to_json_string();
        assert!(text.contains("\"c\": \"-3/7\""));
        assert_eq!(NPointSeries::from_json_str(&text).unwrap(), s);
    }
}
