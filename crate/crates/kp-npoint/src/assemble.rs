use std::collections::BTreeMap;

use exact_core::{factorial, Rational};
use rayon::prelude::*;
use series_algebra::{GradedPoly, Monomial, NPointSeries};

use crate::cumulant::{keys_up_to, CumulantEngine};
use crate::{connected_npoint, NPointError};

/// A source of connected n-point coefficients.
pub trait NPointBackend: Sync {
    fn name(&self) -> &'static str;

    /// `G_(n)` on the window `sum (j_i + 1) <= order`.
    fn npoint(&self, n: usize, order: u32) -> Result<NPointSeries, NPointError>;

    /// Coefficients for arbitrary keys, in input order.
    fn coefficients(&self, keys: &[Vec<u32>]) -> Result<Vec<Rational>, NPointError> {
        let mut orders: BTreeMap<usize, u32> = BTreeMap::new();
        for k in keys {
            let o = k.iter().sum::<u32>() + k.len() as u32;
            let slot = orders.entry(k.len()).or_insert(0);
            *slot = (*slot).max(o);
        }
        let mut series = BTreeMap::new();
        for (n, order) in orders {
            series.insert(n, self.npoint(n, order)?);
        }
        Ok(keys.iter().map(|k| series[&k.len()].coeff(k)).collect())
    }
}

/// Literal expansion of the cycle formula.
pub struct CycleBackend;

impl NPointBackend for CycleBackend {
    fn name(&self) -> &'static str {
        "cycle"
    }

    fn npoint(&self, n: usize, order: u32) -> Result<NPointSeries, NPointError> {
        connected_npoint(n, order)
    }
}

/// Cumulant form of the affine-coordinate formula; cheap per key.
pub struct AffineBackend;

impl NPointBackend for AffineBackend {
    fn name(&self) -> &'static str {
        "affine"
    }

    fn npoint(&self, n: usize, order: u32) -> Result<NPointSeries, NPointError> {
        crate::cumulant_npoint(n, order)
    }

    fn coefficients(&self, keys: &[Vec<u32>]) -> Result<Vec<Rational>, NPointError> {
        let chunk = (keys.len() / rayon::current_num_threads().max(1)).max(64);
        let parts = keys
            .par_chunks(chunk)
            .map(|part| {
                let mut engine = CumulantEngine::new();
                part.iter()
                    .map(|k| engine.coefficient(k).map(Rational::from_integer))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(parts.into_iter().flatten().collect())
    }
}

/// Free energy up to t-degree `maxdeg` from n-point functions:
/// `z_1^{-j_1-1}...z_n^{-j_n-1}` goes to `t_{j_1-1}...t_{j_n-1} / (n! j_1!...j_n!)`.
#[allow(non_snake_case)]
pub fn assemble_F(maxdeg: u32, backend: &dyn NPointBackend) -> Result<GradedPoly, NPointError> {
    let mut keys = Vec::new();
    for n in 1..=maxdeg as usize {
        keys.extend(keys_up_to(n, maxdeg + n as u32).into_iter().filter(|k| k.iter().sum::<u32>() <= maxdeg));
    }
    let coeffs = backend.coefficients(&keys)?;
    let mut out = GradedPoly::zero(maxdeg);
    for (key, c) in keys.iter().zip(coeffs) {
        let mut denom = exact_core::BigInt::from(1);
        let mut run = 1u64;
        for i in 0..key.len() {
            denom *= factorial(key[i] as u64);
            run = if i > 0 && key[i] == key[i - 1] { run + 1 } else { 1 };
            denom *= run;
        }
        let idx: Vec<usize> = key.iter().map(|&j| j as usize - 1).collect();
        out.add_term(Monomial::from_indices(&idx), c / Rational::from_integer(denom));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rat;

    #[test]
    fn low_degree_terms() {
        let f = assemble_F(5, &AffineBackend).unwrap();
        assert_eq!(f.coeff_of("t1"), rat(1, 2));
        assert_eq!(f.coeff_of("t3"), rat(1, 8));
        assert_eq!(f.coeff_of("t0^2"), rat(1, 2));
        assert_eq!(f.coeff_of("t1^2"), rat(1, 4));
        assert!(assemble_F(0, &AffineBackend).unwrap().is_zero());
    }
}
