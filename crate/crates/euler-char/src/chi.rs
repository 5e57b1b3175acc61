use std::fmt;
use std::str::FromStr;

use exact_core::{factorial, Rational};
use kp_npoint::{AffineBackend, NPointBackend};
use series_algebra::{BiSeries, NPointSeries};
use virasoro_recursions::{fat_min_order, FatBackend, ThinBackend};

use crate::hz::chi_open;
use crate::{specialize, ChiTable, EulerError, NPointWindow, SpecializationParams};

/// Source of the n-point coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Affine,
    Thin,
    Fat,
}

impl Backend {
    pub const ALL: [Backend; 3] = [Backend::Affine, Backend::Thin, Backend::Fat];

    pub fn name(self) -> &'static str {
        match self {
            Backend::Affine => "affine",
            Backend::Thin => "thin",
            Backend::Fat => "fat",
        }
    }

    /// The engine for this backend, sized for `params`.
    pub fn engine(self, params: &SpecializationParams) -> Box<dyn NPointBackend> {
        match self {
            Backend::Affine => Box::new(AffineBackend),
            Backend::Thin => Box::new(ThinBackend),
            Backend::Fat => Box::new(FatBackend { max_genus: fat_genus_needed(params) }),
        }
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Backend {
    type Err = EulerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Backend::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| EulerError::UnknownBackend(s.to_string()))
    }
}

/// Highest fat genus that reaches any required key.
pub fn fat_genus_needed(params: &SpecializationParams) -> u32 {
    params
        .required_orders()
        .into_iter()
        .map(|(n, order)| (0..).take_while(|&g| fat_min_order(g, n) <= order).last().unwrap_or(0))
        .max()
        .unwrap_or(0)
}

/// The required n-point coefficients from `backend`, one window per arity.
pub fn npoint_inputs(params: &SpecializationParams, backend: &dyn NPointBackend) -> Result<Vec<NPointWindow>, EulerError> {
    let orders = params.required_orders();
    let mut out = Vec::new();
    for (n, keys) in params.required_keys() {
        let mut series = NPointSeries::new(n)?;
        for (key, c) in keys.iter().zip(backend.coefficients(&keys)?) {
            series.set(key, c)?;
        }
        out.push(NPointWindow { series, order: orders[&n] });
    }
    Ok(out)
}

/// `chi(y, z)` on the window of `params`.
pub fn chi_series(params: &SpecializationParams, backend: Backend) -> Result<BiSeries, EulerError> {
    chi_series_with(params, &*backend.engine(params))
}

pub fn chi_series_with(params: &SpecializationParams, backend: &dyn NPointBackend) -> Result<BiSeries, EulerError> {
    specialize(&npoint_inputs(params, backend)?, params, true)
}

/// `chi(Mbar_{g,n}) = n! [y^n z^{2-2g}] (chi(y, z) + V~_0(y, z))` on the window of `params`.
pub fn table_from_series(series: &BiSeries, params: &SpecializationParams) -> Result<ChiTable, EulerError> {
    let mut table = ChiTable::new(params.g_max, params.n_max);
    for g in 0..=params.g_max {
        for n in 0..=params.n_max {
            if 2 * g + n <= 2 {
                continue;
            }
            let mut c = series.coeff(n, 2 - 2 * g as i32)?;
            if n == 0 {
                c += chi_open(g, 0)?;
            }
            table.insert(g, n, c * Rational::from_integer(factorial(n as u64)))?;
        }
    }
    Ok(table)
}

pub fn chi_table(params: &SpecializationParams, backend: Backend) -> Result<ChiTable, EulerError> {
    table_from_series(&chi_series(params, backend)?, params)
}
