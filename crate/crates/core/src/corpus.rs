//! Seeded random instances and the per-instance pipeline run used by the
//! experiment harness and the acceptance suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::contraction::{plan_all, Stage};
use crate::graph::generate::{generate, Family};
use crate::graph::{format_ratio, Graph};
use crate::lollipop::{check_closure_lemmas, chord_lower_bound, find_dense_cycle, DenseCycleCertificate};
use crate::par::Execution;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub ks: Vec<usize>,
    pub per_k: usize,
    pub max_n: usize,
    /// Random extra edges per instance, drawn from `0..=max_extra`.
    pub max_extra: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            ks: (2..=8).collect(),
            per_k: 200,
            max_n: 200,
            max_extra: 200,
            seed: 2024,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub id: usize,
    pub k: usize,
    pub n: usize,
    pub extra: usize,
    pub seed: u64,
}

impl Instance {
    pub fn family(&self) -> Family {
        Family::RandomMinDegree {
            n: self.n,
            k: self.k,
            extra: self.extra,
        }
    }

    pub fn graph(&self) -> Graph {
        generate(&self.family(), self.seed).expect("corpus parameters are feasible")
    }
}

/// Instances in id order; ids run over `ks` first, then the index per k.
pub fn instances(cfg: &CorpusConfig) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::with_capacity(cfg.ks.len() * cfg.per_k);
    for &k in &cfg.ks {
        for _ in 0..cfg.per_k {
            let n = rng.gen_range(k + 1..=cfg.max_n.max(k + 1));
            let extra = rng.gen_range(0..=cfg.max_extra);
            let seed = rng.gen();
            out.push(Instance { id: out.len(), k, n, extra, seed });
        }
    }
    out
}

/// Everything checked on one instance. Bounds are exact integer or
/// rational comparisons.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub id: usize,
    pub k: usize,
    pub n: usize,
    pub edges: usize,
    pub cycle_len: usize,
    pub high_degree: usize,
    pub chords: usize,
    pub chord_bound: usize,
    pub iterations: usize,
    pub certificate_ok: bool,
    pub lemmas_ok: bool,
    pub g1_min_degree: usize,
    pub g1_bound: usize,
    pub g1_ok: bool,
    pub g1_strategy: Option<String>,
    pub g2_avg_degree: String,
    pub g2_ok: bool,
    pub g2_from: String,
    /// Set when the pipeline stopped early; the other fields are then zero.
    pub error: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.certificate_ok && self.lemmas_ok && self.g1_ok && self.g2_ok
    }
}

pub fn run_instance(inst: &Instance) -> Outcome {
    let g = inst.graph();
    let mut out = Outcome {
        id: inst.id,
        k: inst.k,
        n: g.n(),
        edges: g.edge_count(),
        cycle_len: 0,
        high_degree: 0,
        chords: 0,
        chord_bound: chord_lower_bound(inst.k),
        iterations: 0,
        certificate_ok: false,
        lemmas_ok: false,
        g1_min_degree: 0,
        g1_bound: 0,
        g1_ok: false,
        g1_strategy: None,
        g2_avg_degree: String::new(),
        g2_ok: false,
        g2_from: String::new(),
        error: None,
    };
    let cert = match find_dense_cycle(&g, inst.k) {
        Ok(c) => c,
        Err(e) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    fill_certificate(&mut out, &g, &cert);
    match plan_all(&g, &cert) {
        Ok((_, r1, r2)) => {
            out.g1_min_degree = r1.min_degree();
            out.g1_bound = r1.min_degree_bound();
            out.g1_ok = r1.meets_min_degree_bound();
            out.g1_strategy = r1.diagnostics.strategy.map(|s| format!("{s:?}").to_lowercase());
            out.g2_avg_degree = format_ratio(&r2.avg_degree());
            out.g2_ok = r2.meets_avg_degree_bound();
            out.g2_from = match r2.stage {
                Stage::X0 => "X0",
                Stage::X1 => "X1",
            }
            .into();
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

fn fill_certificate(out: &mut Outcome, g: &Graph, cert: &DenseCycleCertificate) {
    out.cycle_len = cert.cycle.len();
    out.high_degree = cert.high_degree_vertices.len();
    out.chords = cert.chords.len();
    out.iterations = cert.iterations;
    out.certificate_ok = cert.check(g).is_ok();
    out.lemmas_ok = check_closure_lemmas(g, &cert.closure).is_ok();
}

/// Outcomes in instance-id order whatever the execution mode.
pub fn run_corpus(cfg: &CorpusConfig, exec: Execution) -> Vec<Outcome> {
    exec.map(&instances(cfg), run_instance)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSummary {
    pub k: usize,
    pub instances: usize,
    pub passed: usize,
    pub min_chord_surplus: Option<i64>,
    pub g1_strategies: Vec<(String, usize)>,
}

pub fn summarize(outcomes: &[Outcome]) -> Vec<KSummary> {
    let mut ks: Vec<usize> = outcomes.iter().map(|o| o.k).collect();
    ks.sort_unstable();
    ks.dedup();
    ks.into_iter()
        .map(|k| {
            let of_k: Vec<&Outcome> = outcomes.iter().filter(|o| o.k == k).collect();
            let mut strategies: Vec<(String, usize)> = Vec::new();
            for o in &of_k {
                let s = o.g1_strategy.clone().unwrap_or_else(|| "none".into());
                match strategies.iter_mut().find(|(name, _)| *name == s) {
                    Some((_, c)) => *c += 1,
                    None => strategies.push((s, 1)),
                }
            }
            strategies.sort();
            KSummary {
                k,
                instances: of_k.len(),
                passed: of_k.iter().filter(|o| o.passed()).count(),
                min_chord_surplus: of_k
                    .iter()
                    .filter(|o| o.error.is_none())
                    .map(|o| o.chords as i64 - o.chord_bound as i64)
                    .min(),
                g1_strategies: strategies,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> CorpusConfig {
        CorpusConfig {
            ks: vec![2, 3, 5],
            per_k: 6,
            max_n: 30,
            max_extra: 20,
            seed: 11,
        }
    }

    #[test]
    fn instances_are_seeded() {
        assert_eq!(instances(&small()), instances(&small()));
        let ids: Vec<usize> = instances(&small()).iter().map(|i| i.id).collect();
        assert_eq!(ids, (0..18).collect::<Vec<_>>());
        assert!(instances(&small()).iter().all(|i| i.n > i.k && i.n <= 30));
    }

    #[test]
    fn small_corpus_passes_in_both_modes() {
        let seq = run_corpus(&small(), Execution::Sequential);
        assert!(seq.iter().all(Outcome::passed), "{seq:?}");
        assert_eq!(seq, run_corpus(&small(), Execution::Parallel));
        let summary = summarize(&seq);
        assert_eq!(summary.len(), 3);
        assert!(summary.iter().all(|s| s.passed == 6 && s.min_chord_surplus >= Some(0)));
    }
}
