//! Brute-force enumerators for the two path models — the ground truth that
//! certifies every closed formula in `narayana`.
//!
//! Model 1 (Sulanke): monotone unit-step paths in Z^k from the origin to
//! (r,…,r) staying inside {0 ≤ x₁ ≤ … ≤ x_k}, bucketed by the number of
//! ascents, where an ascent is a pair of successive steps whose second step
//! increments a coordinate with strictly higher index.
//!
//! Model 2 (chains): strictly increasing chains 0 < p¹ < … < p^j < a in Z^k
//! (every coordinate grows by at least one per step, including into a), with
//! every intermediate point weakly decreasing. Their count is (a₁,…,a_k)_j.

use crate::exact::Int;
use num::{One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone)]
pub struct Budget {
    /// cap on k·r for the Sulanke model (total number of unit steps)
    pub max_sulanke_steps: i64,
    /// cap on the largest coordinate in the chain model
    pub max_chain_entry: i64,
    /// cap on the number of chain points j
    pub max_chain_steps: i64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_sulanke_steps: 16, max_chain_entry: 12, max_chain_steps: 6 }
    }
}

impl Budget {
    /// Loosen every guard by the same factor (the CLI maps NARAYANA_BUDGET
    /// onto this).
    pub fn scaled(factor: i64) -> Self {
        let base = Budget::default();
        Budget {
            max_sulanke_steps: base.max_sulanke_steps * factor,
            max_chain_entry: base.max_chain_entry * factor,
            max_chain_steps: base.max_chain_steps * factor,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
}

fn sulanke_guard(k: i64, r: i64, budget: &Budget) -> Result<(), OracleError> {
    assert!(k >= 1 && r >= 0, "sulanke oracle: need k >= 1, r >= 0");
    if k * r > budget.max_sulanke_steps {
        return Err(OracleError::BudgetExceeded(format!(
            "sulanke path model needs {} unit steps, budget allows {}",
            k * r,
            budget.max_sulanke_steps
        )));
    }
    Ok(())
}

/// Coordinates that may be incremented from position x without leaving the
/// region (x is weakly increasing, all entries ≤ r).
fn legal_steps(x: &[i64], r: i64) -> impl Iterator<Item = usize> + '_ {
    let k = x.len();
    (0..k).filter(move |&c| if c + 1 < k { x[c] < x[c + 1] } else { x[c] < r })
}

fn dfs_sulanke(x: &mut [i64], r: i64, last: usize, ascents: i64, out: &mut BTreeMap<i64, Int>) {
    let mut complete = true;
    let k = x.len();
    for c in 0..k {
        let allowed = if c + 1 < k { x[c] < x[c + 1] } else { x[c] < r };
        if !allowed {
            continue;
        }
        complete = false;
        x[c] += 1;
        dfs_sulanke(x, r, c, ascents + i64::from(c > last), out);
        x[c] -= 1;
    }
    if complete {
        *out.entry(ascents).or_default() += 1;
    }
}

/// Exhaustive DFS over the Sulanke path model, bucketed by ascents.
pub fn count_sulanke_paths(
    k: i64,
    r: i64,
    budget: &Budget,
) -> Result<BTreeMap<i64, Int>, OracleError> {
    sulanke_guard(k, r, budget)?;
    let mut out = BTreeMap::new();
    if r == 0 {
        out.insert(0, Int::one());
        return Ok(out);
    }
    let mut x = vec![0i64; k as usize];
    // the first step can never be an ascent: seed last with the top index
    dfs_sulanke(&mut x, r, k as usize - 1, 0, &mut out);
    Ok(out)
}

/// Same enumeration, search space split across the current rayon pool by
/// two-step prefixes. Deterministic, identical output to the sequential DFS.
pub fn count_sulanke_paths_parallel(
    k: i64,
    r: i64,
    budget: &Budget,
) -> Result<BTreeMap<i64, Int>, OracleError> {
    sulanke_guard(k, r, budget)?;
    let ku = k as usize;
    if r == 0 || k * r <= 2 {
        return count_sulanke_paths(k, r, budget);
    }
    // enumerate all two-step prefixes sequentially
    let mut prefixes: Vec<(Vec<i64>, usize, i64)> = Vec::new();
    let x0 = vec![0i64; ku];
    for c1 in legal_steps(&x0, r).collect::<Vec<_>>() {
        let mut x1 = x0.clone();
        x1[c1] += 1;
        for c2 in legal_steps(&x1, r).collect::<Vec<_>>() {
            let mut x2 = x1.clone();
            x2[c2] += 1;
            prefixes.push((x2, c2, i64::from(c2 > c1)));
        }
    }
    let buckets: Vec<BTreeMap<i64, Int>> = prefixes
        .into_par_iter()
        .map(|(mut x, last, ascents)| {
            let mut out = BTreeMap::new();
            dfs_sulanke(&mut x, r, last, ascents, &mut out);
            out
        })
        .collect();
    let mut total = BTreeMap::new();
    for b in buckets {
        for (j, v) in b {
            *total.entry(j).or_insert_with(Int::zero) += v;
        }
    }
    Ok(total)
}

/// Independent total count of Sulanke paths (no ascent statistic) by dynamic
/// programming over region points — guards the DFS oracle itself.
pub fn sulanke_total_dp(k: i64, r: i64, budget: &Budget) -> Result<Int, OracleError> {
    sulanke_guard(k, r, budget)?;
    let ku = k as usize;
    // enumerate all weakly increasing vectors in [0,r]^k, grouped by weight
    let mut by_weight: Vec<Vec<Vec<i64>>> = vec![Vec::new(); (k * r + 1) as usize];
    let mut stack = vec![(Vec::<i64>::new(), 0i64)];
    while let Some((prefix, sum)) = stack.pop() {
        if prefix.len() == ku {
            by_weight[sum as usize].push(prefix);
            continue;
        }
        let lo = prefix.last().copied().unwrap_or(0);
        for v in lo..=r {
            let mut next = prefix.clone();
            next.push(v);
            stack.push((next, sum + v));
        }
    }
    let mut ways: BTreeMap<Vec<i64>, Int> = BTreeMap::new();
    ways.insert(vec![0; ku], Int::one());
    for weight in 1..=(k * r) as usize {
        for x in &by_weight[weight] {
            let mut acc = Int::zero();
            for c in 0..ku {
                // predecessor with x[c] decremented must stay weakly increasing
                let prev_ok = x[c] > 0 && (c == 0 || x[c] - 1 >= x[c - 1]);
                if prev_ok {
                    let mut p = x.clone();
                    p[c] -= 1;
                    if let Some(w) = ways.get(&p) {
                        acc += w;
                    }
                }
            }
            if !acc.is_zero() {
                ways.insert(x.clone(), acc);
            }
        }
    }
    Ok(ways.remove(&vec![r; ku]).unwrap_or_else(Int::zero))
}

fn chain_guard(a: &[i64], j: i64, budget: &Budget) -> Result<(), OracleError> {
    assert!(!a.is_empty(), "chain oracle: tuple must be nonempty");
    assert!(a.windows(2).all(|w| w[0] >= w[1]), "chain oracle: tuple must be nonincreasing, got {a:?}");
    assert!(a.iter().all(|&x| x >= 1), "chain oracle: entries must be positive, got {a:?}");
    assert!(j >= 0, "chain oracle: j must be nonnegative");
    let max = a[0];
    if max > budget.max_chain_entry || j > budget.max_chain_steps {
        return Err(OracleError::BudgetExceeded(format!(
            "chain model with entries up to {max} and {j} points, budget allows {} and {}",
            budget.max_chain_entry, budget.max_chain_steps
        )));
    }
    Ok(())
}

/// Count chains 0 < p¹ < … < p^j < a with strictly increasing steps in every
/// coordinate and weakly decreasing points. Equals round_bracket(a, j).
pub fn count_narayana_paths(a: &[i64], j: i64, budget: &Budget) -> Result<Int, OracleError> {
    chain_guard(a, j, budget)?;
    let k = a.len();

    // enumerate the level-l point coordinate by coordinate, then recurse
    fn fill(
        a: &[i64],
        level: i64,
        j: i64,
        prev: &[i64],
        point: &mut Vec<i64>,
        count: &mut Int,
    ) {
        let k = a.len();
        let idx = point.len();
        if idx == k {
            let frozen = point.clone();
            descend(a, level + 1, j, &frozen, count);
            return;
        }
        let lo = prev[idx] + 1;
        // leave room for the remaining j−level strict steps up to a
        let mut hi = a[idx] - (j + 1 - level);
        if idx > 0 {
            hi = hi.min(point[idx - 1]);
        }
        for v in lo..=hi {
            point.push(v);
            fill(a, level, j, prev, point, count);
            point.pop();
        }
    }

    fn descend(a: &[i64], level: i64, j: i64, prev: &[i64], count: &mut Int) {
        if level > j {
            *count += 1;
            return;
        }
        let mut point = Vec::with_capacity(a.len());
        fill(a, level, j, prev, &mut point, count);
    }

    let mut count = Int::zero();
    descend(a, 1, j, &vec![0; k], &mut count);
    Ok(count)
}
