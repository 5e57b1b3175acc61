use std::collections::BTreeMap;

use series_algebra::BiSeries;

use crate::EulerError;

/// Target window `g <= g_max`, `n <= n_max` and the truncation bounds it implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpecializationParams {
    pub g_max: u32,
    pub n_max: u32,
}

/// Weight of an index in the finiteness bound: `1, 2, j - 2` for `j = 1, 2, >= 3`.
pub fn index_weight(j: u32) -> u32 {
    match j {
        1 => 1,
        2 => 2,
        _ => j - 2,
    }
}

impl SpecializationParams {
    pub fn new(g_max: u32, n_max: u32) -> Result<Self, EulerError> {
        if 2 * g_max + n_max <= 2 {
            return Err(EulerError::EmptyWindow { g_max, n_max });
        }
        Ok(SpecializationParams { g_max, n_max })
    }

    /// Lowest z-exponent kept in every `V~_j`.
    pub fn z_floor(&self) -> i32 {
        2 - 2 * self.g_max as i32 - self.n_max as i32
    }

    /// Lowest z-exponent read from the result, in every y-degree.
    pub fn read_floor(&self) -> i32 {
        2 - 2 * self.g_max as i32
    }

    /// Cap on the number of indices `N` in a contributing term.
    pub fn max_vars(&self) -> usize {
        (2 * self.n_max + 2 * self.g_max).saturating_sub(2) as usize
    }

    /// Cap on each index `j_i`.
    pub fn max_index(&self) -> u32 {
        2 * self.n_max + 2 * self.g_max
    }

    /// Empty series on the window used for every specialization.
    pub fn window(&self) -> BiSeries {
        BiSeries::new(self.n_max, self.z_floor(), self.n_max as i32)
    }

    /// Whether a term `z_1^{-j_1-1}...` passes the finiteness bound with the parity rule.
    pub fn admits(&self, key: &[u32]) -> bool {
        if key.is_empty() || key.contains(&0) || key.iter().sum::<u32>() % 2 == 1 {
            return false;
        }
        let ones = key.iter().filter(|&&j| j == 1).count() as u32;
        let weight: u32 = key.iter().map(|&j| index_weight(j)).sum();
        weight + 2 <= 2 * ones.min(self.n_max) + 2 * self.g_max
    }

    /// Every sorted key admitted by the bound, grouped by arity.
    pub fn required_keys(&self) -> BTreeMap<usize, Vec<Vec<u32>>> {
        let budget = 2 * self.n_max + 2 * self.g_max;
        let mut out: BTreeMap<usize, Vec<Vec<u32>>> = BTreeMap::new();
        let mut cur = Vec::new();
        self.collect(1, 0, budget, &mut cur, &mut out);
        out
    }

    fn collect(&self, min: u32, weight: u32, budget: u32, cur: &mut Vec<u32>, out: &mut BTreeMap<usize, Vec<Vec<u32>>>) {
        if self.admits(cur) {
            out.entry(cur.len()).or_default().push(cur.clone());
        }
        if cur.len() >= self.max_vars() {
            return;
        }
        for j in min..=self.max_index() {
            let w = weight + index_weight(j);
            if w + 2 > budget {
                if j >= 3 {
                    break;
                }
                continue;
            }
            cur.push(j);
            self.collect(j, w, budget, cur, out);
            cur.pop();
        }
    }

    /// Largest order `sum (j_i + 1)` among the required keys, per arity.
    pub fn required_orders(&self) -> BTreeMap<usize, u32> {
        self.required_keys()
            .into_iter()
            .map(|(n, keys)| (n, keys.iter().map(|k| k.iter().sum::<u32>() + n as u32).max().unwrap_or(0)))
            .collect()
    }

    pub fn required_order(&self, n: usize) -> Option<u32> {
        self.required_orders().get(&n).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        let p = SpecializationParams::new(1, 1).unwrap();
        assert_eq!((p.z_floor(), p.max_vars(), p.max_index()), (-1, 2, 4));
        let keys = p.required_keys();
        assert_eq!(keys[&2], vec![vec![1, 1], vec![1, 3]]);
        assert_eq!(keys.len(), 1);
        assert_eq!(p.required_order(2), Some(6));
        assert_eq!(p.required_order(1), None);
        assert!(SpecializationParams::new(1, 0).is_err());
        assert!(SpecializationParams::new(0, 3).is_ok());
    }

    #[test]
    fn key_counts() {
        let p = SpecializationParams::new(8, 6).unwrap();
        let keys = p.required_keys();
        assert_eq!(keys.values().map(Vec::len).sum::<usize>(), 22523);
        assert_eq!(*keys.keys().last().unwrap(), 26);
    }
}
