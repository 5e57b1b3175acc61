use std::collections::BTreeMap;

use exact_core::{format_rational, Partition, Rational};
use num_traits::{One, Zero};

/// `sum c_lambda p_lambda` with `|lambda| <= cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    cap: u32,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(cap: u32) -> Self {
        SymFunc { cap, terms: BTreeMap::new() }
    }

    pub fn one(cap: u32) -> Self {
        let mut s = SymFunc::zero(cap);
        s.add_term(Partition::empty(), Rational::one());
        s
    }

    /// The power sum `p_n`.
    pub fn power_sum(n: u32, cap: u32) -> Self {
        let mut s = SymFunc::zero(cap);
        s.add_term(Partition::new(vec![n]), Rational::one());
        s
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn with_cap(&self, cap: u32) -> Self {
        SymFunc {
            cap,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() <= cap)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of `p_lambda` with `lambda` given by its parts in any order.
    pub fn coeff_of(&self, parts: &[u32]) -> Rational {
        self.coeff(&Partition::new(parts.to_vec()))
    }

    /// Adds `c p_lambda`; partitions above the cap are dropped.
    pub fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() || lambda.weight() > self.cap {
            return;
        }
        let entry = self.terms.entry(lambda.clone()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.with_cap(self.cap.max(other.cap));
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, k: &Rational) -> SymFunc {
        let mut out = SymFunc::zero(self.cap);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c * k);
        }
        out
    }

    /// Product truncated at the larger of the two caps.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(self.cap.max(other.cap));
        for (p, c) in &self.terms {
            for (q, d) in &other.terms {
                if p.weight() + q.weight() <= out.cap {
                    out.add_term(p.merge(q), c * d);
                }
            }
        }
        out
    }

    /// The involution `p_n -> (-1)^{n-1} p_n`.
    pub fn omega(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.cap);
        for (p, c) in &self.terms {
            let odd = (p.weight() - p.len() as u32) % 2 == 1;
            out.add_term(p.clone(), if odd { -c } else { c.clone() });
        }
        out
    }

    /// One line per term, `c * p1^a p2^b`, in partition order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for (p, c) in &self.terms {
            s.push_str(&format_rational(c));
            s.push_str(" * ");
            if p.is_empty() {
                s.push('1');
            } else {
                let parts: Vec<String> = p
                    .multiplicities()
                    .into_iter()
                    .map(|(i, m)| if m == 1 { format!("p{i}") } else { format!("p{i}^{m}") })
                    .collect();
                s.push_str(&parts.join(" "));
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn product_and_dump() {
        let p1 = SymFunc::power_sum(1, 3);
        let p2 = SymFunc::power_sum(2, 3);
        let s = p1.mul(&p1).scale(&rat(1, 2)).add(&p2.scale(&rat(1, 2)));
        assert_eq!(s.dump(), "1/2 * p1^2\n1/2 * p2\n");
        assert!(p2.mul(&p2).is_zero());
        assert_eq!(s.omega().coeff_of(&[2]), rat(-1, 2));
    }
}
