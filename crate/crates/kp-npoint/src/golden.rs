//! Published n-point coefficients shipped with the crate.

use series_algebra::NPointSeries;

const FILES: [&str; 6] = [
    include_str!("../data/g1.json"),
    include_str!("../data/g2.json"),
    include_str!("../data/g3.json"),
    include_str!("../data/g4.json"),
    include_str!("../data/g5.json"),
    include_str!("../data/g6.json"),
];

/// Highest arity with shipped data.
pub const MAX_ARITY: usize = FILES.len();

/// Reference coefficients of `G_(n)` for `1 <= n <= MAX_ARITY`.
pub fn golden_npoint(n: usize) -> Option<NPointSeries> {
    let text = FILES.get(n.checked_sub(1)?)?;
    Some(NPointSeries::from_json_str(text).expect("shipped golden data parses"))
}

/// Largest total order `sum (j_i + 1)` among the shipped keys of arity `n`.
pub fn golden_order(n: usize) -> Option<u32> {
    let g = golden_npoint(n)?;
    g.terms().map(|(k, _)| k.iter().sum::<u32>() + n as u32).max()
}
