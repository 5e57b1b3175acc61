use std::collections::BTreeMap;
use std::fmt::Write;

use exact_core::{format_rational, parse_rational, Rational};
use serde_json::{json, Value};

use crate::EulerError;

/// `chi(Mbar_{g,n})` for every stable `(g, n)` with `g <= g_max`, `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiTable {
    g_max: u32,
    n_max: u32,
    entries: BTreeMap<(u32, u32), Rational>,
}

/// An entry where two tables disagree; `None` marks a missing value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub g: u32,
    pub n: u32,
    pub ours: Option<Rational>,
    pub theirs: Option<Rational>,
}

impl ChiTable {
    pub fn new(g_max: u32, n_max: u32) -> Self {
        ChiTable { g_max, n_max, entries: BTreeMap::new() }
    }

    pub fn g_max(&self) -> u32 {
        self.g_max
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn insert(&mut self, g: u32, n: u32, chi: Rational) -> Result<(), EulerError> {
        self.check(g, n)?;
        self.entries.insert((g, n), chi);
        Ok(())
    }

    fn check(&self, g: u32, n: u32) -> Result<(), EulerError> {
        if 2 * g + n <= 2 {
            return Err(EulerError::Unstable { g, n });
        }
        if g > self.g_max || n > self.n_max {
            return Err(EulerError::OutsideWindow { g, n });
        }
        Ok(())
    }

    pub fn get(&self, g: u32, n: u32) -> Result<&Rational, EulerError> {
        self.check(g, n)?;
        self.entries.get(&(g, n)).ok_or(EulerError::OutsideWindow { g, n })
    }

    /// Entries ordered by genus, then by number of points.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.entries.iter().map(|(&(g, n), c)| (g, n, c))
    }

    /// Restriction to a smaller window.
    pub fn restricted(&self, g_max: u32, n_max: u32) -> ChiTable {
        ChiTable {
            g_max,
            n_max,
            entries: self
                .entries
                .iter()
                .filter(|((g, n), _)| *g <= g_max && *n <= n_max)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Entries of `other` inside this window that are missing here or differ.
    pub fn mismatches(&self, other: &ChiTable) -> Vec<Mismatch> {
        let mut keys: Vec<(u32, u32)> = self.entries.keys().copied().collect();
        keys.extend(other.entries.keys().filter(|(g, n)| *g <= self.g_max && *n <= self.n_max));
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(g, n)| {
                let (a, b) = (self.entries.get(&(g, n)), other.entries.get(&(g, n)));
                (a != b).then(|| Mismatch { g, n, ours: a.cloned(), theirs: b.cloned() })
            })
            .collect()
    }

    /// Entries of `reference` inside this window that are missing here or differ.
    pub fn check_against(&self, reference: &ChiTable) -> Vec<Mismatch> {
        reference
            .entries()
            .filter(|(g, n, _)| *g <= self.g_max && *n <= self.n_max)
            .filter_map(|(g, n, c)| {
                let ours = self.entries.get(&(g, n));
                (ours != Some(c)).then(|| Mismatch { g, n, ours: ours.cloned(), theirs: Some(c.clone()) })
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("g,n,chi\n");
        for (g, n, c) in self.entries() {
            writeln!(s, "{g},{n},{}", format_rational(c)).expect("write to string");
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<ChiTable, EulerError> {
        let bad = |line: &str| EulerError::Parse(line.to_string());
        let mut entries = BTreeMap::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && *l != "g,n,chi") {
            let mut parts = line.split(',');
            let (Some(g), Some(n), Some(c), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
                return Err(bad(line));
            };
            let g: u32 = g.trim().parse().map_err(|_| bad(line))?;
            let n: u32 = n.trim().parse().map_err(|_| bad(line))?;
            let c = parse_rational(c.trim()).map_err(|_| bad(line))?;
            if 2 * g + n <= 2 || entries.insert((g, n), c).is_some() {
                return Err(bad(line));
            }
        }
        let g_max = entries.keys().map(|k| k.0).max().unwrap_or(0);
        let n_max = entries.keys().map(|k| k.1).max().unwrap_or(0);
        Ok(ChiTable { g_max, n_max, entries })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .entries()
            .map(|(g, n, c)| json!({"g": g, "n": n, "chi": format_rational(c)}))
            .collect();
        json!({"g_max": self.g_max, "n_max": self.n_max, "entries": rows})
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("json") + "\n"
    }

    /// Genus rows by marked-point columns, unstable cells left blank.
    pub fn to_markdown(&self) -> String {
        let mut s = String::from("| g \\ n |");
        for n in 0..=self.n_max {
            write!(s, " {n} |").expect("write to string");
        }
        s.push_str("\n|---|");
        s.push_str(&"---|".repeat(self.n_max as usize + 1));
        s.push('\n');
        for g in 0..=self.g_max {
            write!(s, "| {g} |").expect("write to string");
            for n in 0..=self.n_max {
                match self.entries.get(&(g, n)) {
                    Some(c) => write!(s, " {} |", format_rational(c)),
                    None => write!(s, " |"),
                }
                .expect("write to string");
            }
            s.push('\n');
        }
        s
    }
}

/// The published table for `g <= 8`, `n <= 6`.
pub fn golden_table() -> ChiTable {
    ChiTable::from_csv(include_str!("../data/chi_table.csv")).expect("shipped table parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn csv_round_trip_and_window() {
        let gold = golden_table();
        assert_eq!((gold.g_max(), gold.n_max(), gold.len()), (8, 6, 59));
        assert_eq!(ChiTable::from_csv(&gold.to_csv()).unwrap(), gold);
        assert_eq!(gold.get(1, 2).unwrap(), &rat(1, 2));
        assert!(gold.to_csv().contains("\n0,6,34\n"));
        assert!(gold.get(0, 2).is_err() && gold.get(9, 0).is_err());
        let small = gold.restricted(1, 2);
        assert_eq!(small.len(), 2);
        assert!(small.mismatches(&gold).is_empty());
        let mut off = small.clone();
        off.insert(1, 1, rat(1, 3)).unwrap();
        assert_eq!(off.mismatches(&gold).len(), 1);
        assert_eq!(off.check_against(&gold).len(), 1);
        let mut wide = ChiTable::new(0, 9);
        wide.insert(0, 9, rat(14747, 1)).unwrap();
        wide.insert(0, 3, rat(1, 1)).unwrap();
        assert_eq!(wide.check_against(&gold).len(), 3);
        assert!(ChiTable::from_csv("g,n,chi\n0,2,1\n").is_err());
    }

    #[test]
    fn renders() {
        let t = golden_table().restricted(1, 3);
        assert_eq!(t.to_markdown(), "| g \\ n | 0 | 1 | 2 | 3 |\n|---|---|---|---|---|\n| 0 | | | | 1 |\n| 1 | | 5/12 | 1/2 | 17/12 |\n");
        assert_eq!(t.to_json()["entries"][1]["chi"], "5/12");
    }
}
