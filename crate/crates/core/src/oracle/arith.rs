use serde::{Deserialize, Serialize};

use super::cycles::max_chords_over_cycles;
use super::{guard, Limits};
use crate::error::OracleError;
use crate::graph::Graph;

/// Smallest `d ≥ 0` with `d(d+1) ≥ 2ℓ + 2`, which is
/// `⌈(−1 + √(9 + 8ℓ)) / 2⌉` without a square root.
pub fn degeneracy_ceiling(l: u64) -> u64 {
    let target = 2 * l as u128 + 2;
    // isqrt(target) is within one of the answer.
    let mut d = target.isqrt().saturating_sub(1);
    while d * (d + 1) < target {
        d += 1;
    }
    d as u64
}

/// `I_k = ((k+1)(k-2)/2, (k+2)(k-1)/2]`, as (exclusive low, inclusive high).
pub fn tightness_interval(k: i64) -> (i64, i64) {
    ((k + 1) * (k - 2) / 2, (k + 2) * (k - 1) / 2)
}

/// The `k ≥ 1` with `ℓ ∈ I_k`.
pub fn interval_of(l: i64) -> i64 {
    let mut k = 1;
    while tightness_interval(k).1 < l {
        k += 1;
    }
    k
}

/// Values `≤ limit` of the form `a(a−3)/2` (a ≥ 3) and also `b² − 2b` (b ≥ 2).
pub fn pell_candidates(limit: u64) -> Vec<u64> {
    let firsts: Vec<u64> = (3u64..)
        .map(|a| a * (a - 3) / 2)
        .take_while(|&x| x <= limit)
        .collect();
    (2u64..)
        .map(|b| b * b - 2 * b)
        .take_while(|&x| x <= limit)
        .filter(|x| firsts.binary_search(x).is_ok())
        .collect()
}

/// Degeneracy as the largest minimum degree over all induced subgraphs.
pub fn brute_force_degeneracy(g: &Graph, limits: &Limits) -> Result<usize, OracleError> {
    let n = g.n();
    guard("vertex count", n, limits.max_subset_vertices)?;
    let nbr: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0;
    for mask in 1u32..1 << n {
        let min = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (nbr[v] & mask).count_ones() as usize)
            .min()
            .unwrap_or(0);
        best = best.max(min);
    }
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub l: u64,
    /// `None` when the graph has no cycle.
    pub max_chords: Option<usize>,
    pub degeneracy: usize,
    pub bound: u64,
    /// Every cycle has fewer than `ℓ` chords.
    pub premise: bool,
    pub holds: bool,
}

/// Whether "every cycle has fewer than `ℓ` chords" implies the degeneracy
/// bound on `g`, from brute-force chord and degeneracy computations.
pub fn corollary_check(g: &Graph, l: u64, limits: &Limits) -> Result<CorollaryCheck, OracleError> {
    let mut all = corollary_sweep(g, l, limits)?;
    Ok(all.pop().expect("the sweep covers ℓ"))
}

/// `corollary_check` for every `ℓ ≤ max_l`, sharing one brute-force pass.
pub fn corollary_sweep(g: &Graph, max_l: u64, limits: &Limits) -> Result<Vec<CorollaryCheck>, OracleError> {
    let max_chords = max_chords_over_cycles(g, limits)?.map(|(c, _)| c);
    let degeneracy = brute_force_degeneracy(g, limits)?;
    Ok((0..=max_l)
        .map(|l| {
            let bound = degeneracy_ceiling(l);
            let premise = max_chords.is_none_or(|c| (c as u64) < l);
            CorollaryCheck {
                l,
                max_chords,
                degeneracy,
                bound,
                premise,
                holds: !premise || degeneracy as u64 <= bound,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceiling_small_values() {
        let expect = [(0, 1), (1, 2), (2, 2), (3, 3), (5, 3), (6, 4), (9, 4), (10, 5)];
        for (l, d) in expect {
            assert_eq!(degeneracy_ceiling(l), d, "ℓ = {l}");
        }
    }

    #[test]
    fn intervals() {
        assert_eq!(tightness_interval(2), (0, 2));
        assert_eq!(tightness_interval(5), (9, 14));
        assert_eq!(interval_of(0), 1);
        assert_eq!(interval_of(35), 8);
    }

    #[test]
    fn pell() {
        assert_eq!(pell_candidates(100), vec![0, 35]);
        assert_eq!(pell_candidates(34), vec![0]);
    }

    #[test]
    fn corollary_on_cliques() {
        let l = Limits::default();
        for k in 2..=6usize {
            let g = Graph::complete(k + 1);
            let (lo, hi) = tightness_interval(k as i64);
            for ell in lo + 1..=hi {
                let c = corollary_check(&g, ell as u64, &l).unwrap();
                assert!(c.premise && c.holds);
                assert_eq!(c.degeneracy as u64, c.bound, "tight at k = {k}, ℓ = {ell}");
            }
        }
    }
}
