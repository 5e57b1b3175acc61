use std::collections::BTreeMap;

use exact_core::{double_factorial, factorial, BigInt, Rational};
use num_traits::{One, Zero};

use crate::SymError;

const MAX_VERTICES: usize = 8;

/// One isomorphism class of multigraphs (loops and multi-edges allowed).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    /// Canonical symmetric adjacency matrix; diagonal entries count loops.
    pub adjacency: Vec<Vec<u32>>,
    /// Order of the automorphism group acting on half-edges.
    pub automorphisms: BigInt,
    pub connected: bool,
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn relabel(a: &[Vec<u32>], perm: &[usize]) -> Vec<Vec<u32>> {
    let k = a.len();
    (0..k).map(|i| (0..k).map(|j| a[perm[i]][perm[j]]).collect()).collect()
}

/// All labelled adjacency matrices with the given valences; a loop adds 2 to its vertex.
fn labelled(valences: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let k = valences.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut a = vec![vec![0u32; k]; k];
    let mut rest = valences.to_vec();
    fn go(
        idx: usize,
        pairs: &[(usize, usize)],
        a: &mut Vec<Vec<u32>>,
        rest: &mut Vec<u32>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if idx == pairs.len() {
            if rest.iter().all(|&r| r == 0) {
                out.push(a.clone());
            }
            return;
        }
        let (i, j) = pairs[idx];
        // Once every pair touching vertex i is decided its residual valence must be zero.
        let max = if i == j { rest[i] / 2 } else { rest[i].min(rest[j]) };
        for c in 0..=max {
            if i == j {
                rest[i] -= 2 * c;
            } else {
                rest[i] -= c;
                rest[j] -= c;
            }
            a[i][j] = c;
            a[j][i] = c;
            let closes_row = j + 1 == a.len();
            if !closes_row || rest[i] == 0 {
                go(idx + 1, pairs, a, rest, out);
            }
            if i == j {
                rest[i] += 2 * c;
            } else {
                rest[i] += c;
                rest[j] += c;
            }
        }
        a[i][j] = 0;
        a[j][i] = 0;
    }
    go(0, &pairs, &mut a, &mut rest, &mut out);
    out
}

fn is_connected(a: &[Vec<u32>]) -> bool {
    let k = a.len();
    if k == 0 {
        return true;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..k {
            if a[v][w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Isomorphism classes of multigraphs whose vertices have the given valences.
pub fn graph_classes(valences: &[u32]) -> Result<Vec<GraphClass>, SymError> {
    let k = valences.len();
    if k > MAX_VERTICES {
        return Err(SymError::TooManyVertices(k));
    }
    let mut vals = valences.to_vec();
    vals.sort_unstable_by(|a, b| b.cmp(a));
    // Only relabellings that keep each vertex's valence can be isomorphisms.
    let perms: Vec<Vec<usize>> = permutations(k)
        .into_iter()
        .filter(|p| (0..k).all(|i| vals[p[i]] == vals[i]))
        .collect();
    let mut classes: BTreeMap<Vec<Vec<u32>>, ()> = BTreeMap::new();
    for a in labelled(&vals) {
        let canon = perms.iter().map(|p| relabel(&a, p)).min().expect("identity");
        classes.insert(canon, ());
    }
    Ok(classes
        .into_keys()
        .map(|a| {
            let stabilizer = perms.iter().filter(|p| relabel(&a, p) == a).count();
            let mut aut = BigInt::from(stabilizer);
            for i in 0..k {
                let loops = a[i][i] as u64;
                aut *= factorial(loops) * BigInt::from(2).pow(loops as u32);
                for j in i + 1..k {
                    aut *= factorial(a[i][j] as u64);
                }
            }
            let connected = is_connected(&a);
            GraphClass { adjacency: a, automorphisms: aut, connected }
        })
        .collect())
}

/// `sum 1/|Aut|` over multigraphs with the given valence profile, by enumeration.
pub fn graph_sum_oracle(valences: &[u32]) -> Result<Rational, SymError> {
    if valences.iter().sum::<u32>() % 2 == 1 {
        return Ok(Rational::zero());
    }
    Ok(graph_classes(valences)?
        .into_iter()
        .map(|g| Rational::new(BigInt::one(), g.automorphisms))
        .sum())
}

/// `(2n-1)!! / (prod lambda_i! prod m_i!)` with `2n = sum lambda_i`.
pub fn graph_sum_formula(valences: &[u32]) -> Rational {
    let total: u32 = valences.iter().sum();
    if total % 2 == 1 {
        return Rational::zero();
    }
    let mut den = BigInt::one();
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &v in valences {
        den *= factorial(v as u64);
        *counts.entry(v).or_default() += 1;
    }
    for m in counts.into_values() {
        den *= factorial(m);
    }
    Rational::new(double_factorial(total as i64 - 1), den)
}
