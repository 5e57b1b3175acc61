use std::collections::{BTreeMap, HashMap};

use exact_core::BigInt;
use num_traits::{One, Signed, Zero};

use crate::SeriesError;

/// Finite Laurent polynomial in variables `z_0..z_{nvars-1}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiLaurent {
    nvars: usize,
    terms: HashMap<Vec<i32>, BigInt>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        MultiLaurent { nvars, terms: HashMap::new() }
    }

    pub fn monomial(exps: Vec<i32>, c: BigInt) -> Self {
        let mut out = MultiLaurent::zero(exps.len());
        out.add_term(exps, c);
        out
    }

    pub fn one(nvars: usize) -> Self {
        MultiLaurent::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<i32>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(exps) {
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
    }

    pub fn coeff(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in lexicographic exponent order.
    pub fn sorted_terms(&self) -> Vec<(Vec<i32>, BigInt)> {
        let sorted: BTreeMap<&Vec<i32>, &BigInt> = self.terms.iter().collect();
        sorted.into_iter().map(|(k, v)| (k.clone(), v.clone())).collect()
    }

    pub fn add(&self, other: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &MultiLaurent) {
        assert_eq!(self.nvars, other.nvars);
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &MultiLaurent) -> MultiLaurent {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, k: &BigInt) -> MultiLaurent {
        if k.is_zero() {
            return MultiLaurent::zero(self.nvars);
        }
        MultiLaurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiLaurent) -> MultiLaurent {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only terms whose exponent vector passes `keep`.
    pub fn mul_filtered(&self, other: &MultiLaurent, keep: impl Fn(&[i32]) -> bool) -> MultiLaurent {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiLaurent::zero(self.nvars);
        let mut buf = vec![0i32; self.nvars];
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                for i in 0..self.nvars {
                    buf[i] = e1[i] + e2[i];
                }
                if keep(&buf) {
                    out.add_term(buf.clone(), c1 * c2);
                }
            }
        }
        out
    }

    /// Multiplies by `z^shift`.
    pub fn shift(&self, shift: &[i32]) -> MultiLaurent {
        MultiLaurent {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, var: usize) -> MultiLaurent {
        let mut out = MultiLaurent::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[var] != 0 {
                let mut f = e.clone();
                f[var] -= 1;
                out.add_term(f, c * BigInt::from(e[var]));
            }
        }
        out
    }

    /// Exact quotient by `(z_a - z_b)`, failing if the division leaves a remainder.
    pub fn div_by_difference(&self, a: usize, b: usize) -> Result<MultiLaurent, SeriesError> {
        assert_ne!(a, b);
        // Group by the exponents outside {a, b} plus the total degree in (a, b);
        // each group is z_b^T p(z_a / z_b) and p must vanish at 1.
        let mut groups: HashMap<(Vec<i32>, i32), BTreeMap<i32, BigInt>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[a] = 0;
            rest[b] = 0;
            groups
                .entry((rest, e[a] + e[b]))
                .or_default()
                .insert(e[a], c.clone());
        }
        let mut out = MultiLaurent::zero(self.nvars);
        for ((rest, total), poly) in groups {
            let (&kmin, _) = poly.iter().next().expect("nonempty group");
            let (&kmax, _) = poly.iter().next_back().expect("nonempty group");
            let mut q = BigInt::zero();
            for k in (kmin + 1..=kmax).rev() {
                if let Some(c) = poly.get(&k) {
                    q += c;
                }
                let mut e = rest.clone();
                e[a] = k - 1;
                e[b] = total - k;
                out.add_term(e, q.clone());
            }
            if !(&q + &poly[&kmin]).is_zero() {
                return Err(SeriesError::InexactDivision(a, b));
            }
        }
        Ok(out)
    }

    /// Sets `z_from = z_to` and removes the variable `z_from`.
    pub fn identify(&self, from: usize, to: usize) -> MultiLaurent {
        assert_ne!(from, to);
        let mut out = MultiLaurent::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let mut f = e.clone();
            f[to] += f[from];
            f.remove(from);
            out.add_term(f, c.clone());
        }
        out
    }

    /// Re-embeds into `nvars` variables, sending variable `i` to `map[i]`.
    pub fn embed(&self, map: &[usize], nvars: usize) -> MultiLaurent {
        assert_eq!(map.len(), self.nvars);
        let mut out = MultiLaurent::zero(nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; nvars];
            for (i, &m) in map.iter().enumerate() {
                f[m] += e[i];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Variable `i` of the result is variable `perm[i]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> MultiLaurent {
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        self.embed(&inverse, self.nvars)
    }

    /// Smallest and largest exponent of `var` over all terms.
    pub fn exponent_bounds(&self, var: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[var]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Common total degree, if every term has the same one.
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<i32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn retain(&mut self, keep: impl Fn(&[i32]) -> bool) {
        self.terms.retain(|e, _| keep(e));
    }

    /// Invariance under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            self.permute(&perm) == *self
        })
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}
