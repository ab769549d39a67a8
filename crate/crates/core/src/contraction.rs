//! Contraction plans that turn a dense-cycle certificate into quotients of
//! guaranteed minimum or average degree.
//!
//! Every plan contracts edges of the certificate cycle only, so the quotient
//! of `G[C]` is again Hamiltonian along the image of `C`. Vertices of `G[C]`
//! are renumbered by their position on the cycle: local vertex `i` is
//! `cycle[i]`, and the local host cycle is `0, 1, …, t-1`.
//!
//! * `G_0` contracts every passive edge.
//! * `G_1` additionally merges each non-active class of `G_0` into a
//!   neighbouring active class.
//! * `G_2` is whichever of the two has the larger average degree.

use std::cmp::Ordering;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::PlannerError;
use crate::graph::{contract_along_cycle, degree_stats, ContractionPlan, Graph, Vertex};
use crate::lollipop::DenseCycleCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Stage {
    /// Passive edges contracted.
    X0,
    /// Passive edges plus one edge per non-active class.
    X1,
}

/// How the non-active classes of `G_0` were merged to build `G_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfStrategy {
    /// Each non-active class merged into its predecessor along the stored
    /// cycle orientation.
    Predecessor,
    /// Each non-active class merged into its successor.
    Successor,
    /// No merging: `G_1 = G_0`.
    Uncontracted,
    /// Per-class choice of predecessor, successor or none, found by local
    /// search on the total degree deficit.
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// Non-cycle edges of `G_0` with both ends active.
    pub n_a: usize,
    /// Non-cycle edges of `G_0` with exactly one active end.
    pub n_b: usize,
    /// Number of active vertices.
    pub m: usize,
    pub strategy: Option<HalfStrategy>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    pub stage: Stage,
    pub k: usize,
    /// Certificate cycle; local vertex `i` of `plan.host` is `cycle[i]`.
    pub cycle: Vec<Vertex>,
    /// Local vertex `i` is active.
    pub active: Vec<bool>,
    pub plan: ContractionPlan,
    pub quotient: Graph,
    /// Quotient vertices in cycle order; always `0, 1, …, r-1`.
    pub quotient_cycle: Vec<usize>,
    pub diagnostics: Diagnostics,
}

impl ContractionReport {
    /// Arcs of the plan in original vertex ids, in cycle order.
    pub fn arcs(&self) -> Vec<Vec<Vertex>> {
        self.local_arcs()
            .iter()
            .map(|arc| arc.iter().map(|&i| self.cycle[i]).collect())
            .collect()
    }

    pub fn local_arcs(&self) -> &[Vec<Vertex>] {
        self.plan.arcs.as_deref().expect("cycle plans always carry arcs")
    }

    pub fn min_degree(&self) -> usize {
        self.quotient.min_degree().unwrap_or(0)
    }

    pub fn avg_degree(&self) -> Ratio<u64> {
        degree_stats(&self.quotient)
            .map(|s| s.avg_degree)
            .unwrap_or_else(|_| Ratio::from_integer(0))
    }

    /// `⌈(k+2)/2⌉`.
    pub fn min_degree_bound(&self) -> usize {
        (self.k + 3) / 2
    }

    pub fn meets_min_degree_bound(&self) -> bool {
        self.min_degree() >= self.min_degree_bound() && self.quotient.n() >= self.k
    }

    /// Average degree at least `2(k+1)/3`, decided in integers.
    pub fn meets_avg_degree_bound(&self) -> bool {
        degree_stats(&self.quotient)
            .map(|s| s.avg_at_least_two_thirds_of(self.k + 1) && self.quotient.n() >= self.k)
            .unwrap_or(false)
    }
}

/// Deletes the vertices off the certificate cycle and contracts every
/// passive edge.
pub fn passive_contraction(
    g: &Graph,
    cert: &DenseCycleCertificate,
) -> Result<ContractionReport, PlannerError> {
    cert.check(g).map_err(PlannerError::Mismatch)?;
    let cycle = &cert.cycle;
    if cert.closure.cycle != *cycle {
        return Err(PlannerError::Mismatch("closure belongs to a different cycle".into()));
    }
    let t = cycle.len();
    let host = g.induced_subgraph(cycle);
    let active: Vec<bool> = cycle.iter().map(|&v| cert.closure.is_active(v)).collect();
    let flags: Vec<bool> = (0..t).map(|i| !active[i] && !active[(i + 1) % t]).collect();
    let local: Vec<Vertex> = (0..t).collect();
    let (quotient, plan) =
        contract_along_cycle(&host, &local, &flags).map_err(|e| PlannerError::Mismatch(e.to_string()))?;

    for i in (0..t).filter(|&i| active[i]) {
        let class = plan.class_of[i];
        if quotient.degree(class) != host.degree(i) || host.degree(i) != g.degree(cycle[i]) {
            return Err(PlannerError::Decomposition(format!(
                "active vertex {} changed degree under passive contraction",
                cycle[i]
            )));
        }
    }
    let diagnostics = degree_diagnostics(&quotient, &class_activity(&plan, &active));
    if 2 * diagnostics.n_a + diagnostics.n_b < cert.k.saturating_sub(2) * diagnostics.m {
        return Err(PlannerError::Decomposition("chord count inequality violated".into()));
    }
    let r = quotient.n();
    Ok(ContractionReport {
        stage: Stage::X0,
        k: cert.k,
        cycle: cycle.clone(),
        active,
        plan,
        quotient,
        quotient_cycle: (0..r).collect(),
        diagnostics,
    })
}

fn class_activity(plan: &ContractionPlan, active: &[bool]) -> Vec<bool> {
    plan.arcs
        .as_deref()
        .expect("cycle plans carry arcs")
        .iter()
        .map(|arc| arc.iter().any(|&i| active[i]))
        .collect()
}

fn degree_diagnostics(quotient: &Graph, class_active: &[bool]) -> Diagnostics {
    let r = quotient.n();
    let (mut n_a, mut n_b) = (0, 0);
    for (a, b) in quotient.edges() {
        let d = b - a;
        if d == 1 || d == r - 1 {
            continue;
        }
        match (class_active[a], class_active[b]) {
            (true, true) => n_a += 1,
            (true, false) | (false, true) => n_b += 1,
            _ => {}
        }
    }
    Diagnostics {
        n_a,
        n_b,
        m: class_active.iter().filter(|&&x| x).count(),
        strategy: None,
    }
}

/// Direction in which a non-active class of `G_0` is merged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Merge {
    Predecessor,
    Keep,
    Successor,
}

/// Merges the non-active classes of `G_0` into neighbouring active classes.
///
/// The merge follows the stored cycle orientation from `c_1`'s class: every
/// non-active class `b_i` on `C_0` is contracted into its predecessor
/// `a_i`. On small quotients this can lose more than half of a vertex's
/// chords (for instance when `b_i` is adjacent to the active class that
/// absorbs the next non-active class), so when the result misses the
/// minimum-degree bound the reversed orientation, the uncontracted `G_0`,
/// and finally a local search over per-class choices are tried in turn. The
/// report records which one was used.
pub fn half_contraction(report0: &ContractionReport) -> Result<ContractionReport, PlannerError> {
    if report0.stage != Stage::X0 {
        return Err(PlannerError::Mismatch("expected a passive-contraction report".into()));
    }
    let class_active = class_activity(&report0.plan, &report0.active);
    let r = class_active.len();
    for j in 0..r {
        if !class_active[j] && !class_active[(j + 1) % r] {
            return Err(PlannerError::Decomposition(format!(
                "non-active classes {j} and {} are adjacent on C0",
                (j + 1) % r
            )));
        }
    }
    let inactive: Vec<usize> = (0..r).filter(|&j| !class_active[j]).collect();

    let uniform = |m: Merge| vec![m; inactive.len()];
    let candidates = [
        (HalfStrategy::Predecessor, uniform(Merge::Predecessor)),
        (HalfStrategy::Successor, uniform(Merge::Successor)),
        (HalfStrategy::Uncontracted, uniform(Merge::Keep)),
    ];
    let mut best: Option<ContractionReport> = None;
    for (strategy, choice) in candidates {
        let report = merged_report(report0, &inactive, &choice, strategy)?;
        if report.meets_min_degree_bound() {
            if matches!(strategy, HalfStrategy::Predecessor | HalfStrategy::Successor) {
                assert_eq!(report.quotient.n(), report.diagnostics.m);
            }
            return Ok(report);
        }
        if best.is_none() {
            best = Some(report);
        }
    }
    if let Some(report) = local_search(report0, &inactive)? {
        return Ok(report);
    }
    Ok(best.expect("at least one candidate was built"))
}

/// Hill-climbs on the total deficit `Σ max(0, bound - deg)` over per-class
/// merge choices, one change at a time.
fn local_search(
    report0: &ContractionReport,
    inactive: &[usize],
) -> Result<Option<ContractionReport>, PlannerError> {
    let mut choice = vec![Merge::Predecessor; inactive.len()];
    let deficit = |rep: &ContractionReport| -> usize {
        let bound = rep.min_degree_bound();
        let too_small = rep.quotient.n() < rep.k;
        rep.quotient
            .vertices()
            .map(|v| bound.saturating_sub(rep.quotient.degree(v)))
            .sum::<usize>()
            + usize::from(too_small) * bound
    };
    let mut current = merged_report(report0, inactive, &choice, HalfStrategy::Mixed)?;
    let mut score = deficit(&current);
    let max_rounds = 4 * inactive.len() + 4;
    for _ in 0..max_rounds {
        if score == 0 {
            return Ok(Some(current));
        }
        let mut improved = false;
        'scan: for i in 0..choice.len() {
            for m in [Merge::Predecessor, Merge::Keep, Merge::Successor] {
                if m == choice[i] {
                    continue;
                }
                let mut next = choice.clone();
                next[i] = m;
                let rep = merged_report(report0, inactive, &next, HalfStrategy::Mixed)?;
                let s = deficit(&rep);
                if s < score {
                    choice = next;
                    current = rep;
                    score = s;
                    improved = true;
                    break 'scan;
                }
            }
        }
        if !improved {
            break;
        }
    }
    Ok((score == 0).then_some(current))
}

fn merged_report(
    report0: &ContractionReport,
    inactive: &[usize],
    choice: &[Merge],
    strategy: HalfStrategy,
) -> Result<ContractionReport, PlannerError> {
    let arcs0 = report0.local_arcs();
    let r = arcs0.len();
    let t = report0.cycle.len();
    let mut flags: Vec<bool> = vec![false; t];
    for arc in arcs0 {
        for w in arc.windows(2) {
            flags[w[0]] = true;
        }
    }
    // The cycle edge leaving arc j is the one at its last vertex.
    for (&j, &m) in inactive.iter().zip(choice) {
        match m {
            Merge::Predecessor => flags[arcs0[(j + r - 1) % r].last().copied().expect("non-empty arc")] = true,
            Merge::Successor => flags[*arcs0[j].last().expect("non-empty arc")] = true,
            Merge::Keep => {}
        }
    }
    let local: Vec<Vertex> = (0..t).collect();
    let (quotient, plan) = contract_along_cycle(&report0.plan.host, &local, &flags)
        .map_err(|e| PlannerError::Decomposition(e.to_string()))?;
    let mut diagnostics = report0.diagnostics.clone();
    diagnostics.strategy = Some(strategy);
    let r1 = quotient.n();
    Ok(ContractionReport {
        stage: Stage::X1,
        k: report0.k,
        cycle: report0.cycle.clone(),
        active: report0.active.clone(),
        plan,
        quotient,
        quotient_cycle: (0..r1).collect(),
        diagnostics,
    })
}

/// `G_2`: the report with the larger average degree, `G_0` on ties.
pub fn choose_average_plan(report0: &ContractionReport, report1: &ContractionReport) -> ContractionReport {
    match report1.avg_degree().cmp(&report0.avg_degree()) {
        Ordering::Greater => report1.clone(),
        _ => report0.clone(),
    }
}

/// Runs all three plans for a certificate.
pub fn plan_all(
    g: &Graph,
    cert: &DenseCycleCertificate,
) -> Result<(ContractionReport, ContractionReport, ContractionReport), PlannerError> {
    let r0 = passive_contraction(g, cert)?;
    let r1 = half_contraction(&r0)?;
    let r2 = choose_average_plan(&r0, &r1);
    Ok((r0, r1, r2))
}

/// Checks that every plan arc is a contiguous stretch of the local cycle and
/// that the arcs cover it in order.
pub fn arcs_are_contiguous(report: &ContractionReport) -> bool {
    let t = report.cycle.len();
    let flat: Vec<Vertex> = report.local_arcs().iter().flatten().copied().collect();
    if flat.len() != t || report.local_arcs().iter().any(Vec::is_empty) {
        return false;
    }
    let start = flat[0];
    flat.iter().enumerate().all(|(i, &v)| v == (start + i) % t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};
    use crate::lollipop::find_dense_cycle;

    #[test]
    fn k6_has_nothing_to_contract() {
        let g = Graph::complete(6);
        let cert = find_dense_cycle(&g, 5).unwrap();
        let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
        assert_eq!(r0.quotient, Graph::complete(6));
        // c_1 is never active, so it is absorbed by its predecessor c_t.
        assert_eq!(r1.quotient, Graph::complete(5));
        assert_eq!(r1.diagnostics.strategy, Some(HalfStrategy::Predecessor));
        assert_eq!(r2.stage, Stage::X0);
        assert_eq!(r2.avg_degree(), Ratio::from_integer(5));
    }

    #[test]
    fn long_cycle_collapses_to_c4() {
        let g = Graph::cycle(10).unwrap();
        let cert = find_dense_cycle(&g, 2).unwrap();
        let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
        // Classes {c1}, {c2}, {c3 … c_{t-1}}, {c_t}.
        assert_eq!(r0.quotient.n(), 4);
        assert!(r0.quotient.is_cycle(&[0, 1, 2, 3]));
        assert_eq!(r0.local_arcs()[2].len(), 7);
        // Merging either way leaves a single edge, so G_1 stays uncontracted.
        assert_eq!(r1.diagnostics.strategy, Some(HalfStrategy::Uncontracted));
        assert!(r1.meets_min_degree_bound());
        assert!(r2.meets_avg_degree_bound());
    }

    #[test]
    fn triangle_is_its_own_quotient() {
        let g = Graph::complete(3);
        let cert = find_dense_cycle(&g, 2).unwrap();
        let (r0, _, r2) = plan_all(&g, &cert).unwrap();
        assert_eq!(r0.quotient, Graph::complete(3));
        assert!(r2.meets_avg_degree_bound());
    }

    #[test]
    fn random_pipeline_bounds() {
        for k in 2..=6 {
            for seed in 0..20 {
                let g = generate(&Family::RandomMinDegree { n: 40, k, extra: 0 }, seed).unwrap();
                let cert = find_dense_cycle(&g, k).unwrap();
                let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
                let d = &r0.diagnostics;
                assert!(2 * d.n_a + d.n_b >= (k - 2) * d.m);
                assert!(r1.meets_min_degree_bound(), "k={k} seed={seed}");
                assert!(r2.meets_avg_degree_bound(), "k={k} seed={seed}");
                for rep in [&r0, &r1, &r2] {
                    assert!(arcs_are_contiguous(rep));
                    assert!(rep.quotient.is_cycle(&rep.quotient_cycle) || rep.quotient.n() < 3);
                }
            }
        }
    }

    #[test]
    fn half_contraction_needs_x0() {
        let g = Graph::complete(5);
        let cert = find_dense_cycle(&g, 4).unwrap();
        let r0 = passive_contraction(&g, &cert).unwrap();
        let r1 = half_contraction(&r0).unwrap();
        assert!(half_contraction(&r1).is_err());
    }

    #[test]
    fn mismatched_certificate_is_rejected() {
        let g = Graph::complete(6);
        let cert = find_dense_cycle(&g, 5).unwrap();
        let other = Graph::cycle(6).unwrap();
        assert!(matches!(passive_contraction(&other, &cert), Err(PlannerError::Mismatch(_))));
    }
}
