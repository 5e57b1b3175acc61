use exact_core::{bernoulli, factorial, Rational};
use num_traits::One;
use series_algebra::BiSeries;

use crate::{EulerError, SpecializationParams};

/// Orbifold Euler characteristic of the open moduli space `M_{g,n}` (Harer-Zagier).
pub fn chi_open(g: u32, n: u32) -> Result<Rational, EulerError> {
    if 2 * g + n <= 2 {
        return Err(EulerError::Unstable { g, n });
    }
    let sign = if n % 2 == 0 { Rational::one() } else { -Rational::one() };
    let lead = Rational::from_integer((2 * g as i64 - 1).into()) * bernoulli(2 * g)?
        / Rational::from_integer(factorial(2 * g as u64));
    Ok(sign * lead * Rational::from_integer(factorial((2 * g + n - 3) as u64)))
}

/// Smallest genus with `2g - 2 + n > 0`.
pub(crate) fn min_genus(n: u32) -> u32 {
    match n {
        0 => 2,
        1 | 2 => 1,
        _ => 0,
    }
}

/// Coefficients of `V_n(z)`, exponent `2 - 2g - n` paired with `chi_open(g, n)`, for
/// all exponents `>= floor`.
pub fn v_series(n: u32, floor: i32) -> Vec<(i32, Rational)> {
    let mut out = Vec::new();
    let mut g = min_genus(n);
    loop {
        let e = 2 - 2 * g as i32 - n as i32;
        if e < floor {
            return out;
        }
        out.push((e, chi_open(g, n).expect("stable by construction")));
        g += 1;
    }
}

/// `V~_n(y, z) = -1/2 y^2 z^2 [n = 0] + y z [n = 1] + V_n(z)`, truncated to the window of `params`.
#[allow(non_snake_case)]
pub fn tilde_V(n: u32, params: &SpecializationParams) -> BiSeries {
    let mut out = params.window();
    for (e, c) in v_series(n, params.z_floor()) {
        out.add_term(0, e, c).expect("negative exponents fit the window");
    }
    let half = Rational::new(1.into(), 2.into());
    match n {
        0 => out.add_term(2, 2, -half),
        1 => out.add_term(1, 1, Rational::one()),
        _ => Ok(()),
    }
    .expect("y-degree <= 2 fits above its z-exponent");
    out
}
