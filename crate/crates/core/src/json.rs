//! Versioned JSON documents for certificates, contraction reports and
//! cyclic-minor models, plus an independent re-verifier for each kind.
//!
//! Every document embeds its host graph, so a saved file can be checked
//! without the input that produced it.

use serde::{Deserialize, Serialize};

use crate::contraction::ContractionReport;
use crate::graph::{contract_along_cycle, degree_stats, format_ratio, Graph, GraphData, Vertex};
use crate::lollipop::{chord_lower_bound, DenseCycleCertificate};
use crate::minor::{verify_model, CyclicMinorModel, Origin, Route, TargetKind};

pub const SCHEMA: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    #[serde(flatten)]
    pub body: Body,
    pub host: GraphData,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Body {
    DenseCycle(CertificateJson),
    Contraction(ContractionJson),
    Model(ModelJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub k: usize,
    pub path: Vec<Vertex>,
    pub cycle: Vec<Vertex>,
    pub high_degree: Vec<Vertex>,
    pub active: Vec<Vertex>,
    pub chords: Vec<[Vertex; 2]>,
    pub chord_count: usize,
    pub chord_bound: usize,
    pub passive_edges: Vec<[Vertex; 2]>,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionJson {
    pub k: usize,
    pub cycle: Vec<Vertex>,
    pub plans: Vec<PlanJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanJson {
    /// "G0", "G1" or "G2".
    pub name: String,
    pub arcs: Vec<Vec<Vertex>>,
    pub vertices: usize,
    pub edges: usize,
    pub min_degree: usize,
    /// Exact, as "p/q" or an integer.
    pub avg_degree: String,
    pub min_degree_bound: usize,
    pub meets_min_degree_bound: bool,
    pub meets_avg_degree_bound: bool,
    pub n_a: usize,
    pub n_b: usize,
    pub m: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub strategy: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub host_cycle: Vec<Vertex>,
    pub arcs: Vec<Vec<Vertex>>,
    /// "K3" … "K6", "K'll" or "custom".
    pub target: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l: Option<usize>,
    pub target_graph: GraphData,
    pub target_cycle: Vec<Vertex>,
    pub verified: bool,
    pub origin: Origin,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<Route>,
}

fn pairs(edges: &[(Vertex, Vertex)]) -> Vec<[Vertex; 2]> {
    edges.iter().map(|&(u, v)| [u, v]).collect()
}

pub fn certificate_document(g: &Graph, c: &DenseCycleCertificate) -> Document {
    Document {
        schema: SCHEMA.into(),
        body: Body::DenseCycle(CertificateJson {
            k: c.k,
            path: c.path.clone(),
            cycle: c.cycle.clone(),
            high_degree: c.high_degree_vertices.clone(),
            active: c.closure.active.clone(),
            chords: pairs(&c.chords),
            chord_count: c.chords.len(),
            chord_bound: chord_lower_bound(c.k),
            passive_edges: pairs(&c.closure.passive_edges),
            iterations: c.iterations,
        }),
        host: g.into(),
    }
}

pub fn plan_json(name: &str, r: &ContractionReport) -> PlanJson {
    PlanJson {
        name: name.into(),
        arcs: r.arcs(),
        vertices: r.quotient.n(),
        edges: r.quotient.edge_count(),
        min_degree: r.min_degree(),
        avg_degree: format_ratio(&r.avg_degree()),
        min_degree_bound: r.min_degree_bound(),
        meets_min_degree_bound: r.meets_min_degree_bound(),
        meets_avg_degree_bound: r.meets_avg_degree_bound(),
        n_a: r.diagnostics.n_a,
        n_b: r.diagnostics.n_b,
        m: r.diagnostics.m,
        strategy: r.diagnostics.strategy.map(|s| format!("{s:?}").to_lowercase()),
    }
}

/// `G_0`, `G_1`, `G_2` for one certificate.
pub fn contraction_document(g: &Graph, reports: [&ContractionReport; 3]) -> Document {
    let [r0, r1, r2] = reports;
    Document {
        schema: SCHEMA.into(),
        body: Body::Contraction(ContractionJson {
            k: r0.k,
            cycle: r0.cycle.clone(),
            plans: vec![plan_json("G0", r0), plan_json("G1", r1), plan_json("G2", r2)],
        }),
        host: g.into(),
    }
}

pub fn model_document(m: &CyclicMinorModel, route: Option<Route>) -> Document {
    Document {
        schema: SCHEMA.into(),
        body: Body::Model(ModelJson {
            host_cycle: m.host_cycle.clone(),
            arcs: m.arcs.clone(),
            target: m.kind.label(),
            l: m.kind.l(),
            target_graph: (&m.target).into(),
            target_cycle: m.target_cycle.clone(),
            verified: verify_model(m).unwrap_or(false),
            origin: m.origin,
            route,
        }),
        host: (&m.host).into(),
    }
}

pub fn to_json(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialise") + "\n"
}

pub fn from_json(text: &str) -> Result<Document, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if doc.schema != SCHEMA {
        return Err(format!("unsupported schema {:?}", doc.schema));
    }
    Ok(doc)
}

/// Re-checks a document against its embedded host graph, recomputing
/// everything the document claims.
pub fn verify_document(doc: &Document) -> Result<(), String> {
    let g = Graph::try_from(&doc.host).map_err(|e| e.to_string())?;
    match &doc.body {
        Body::DenseCycle(c) => verify_certificate(&g, c),
        Body::Contraction(c) => verify_contraction(&g, c),
        Body::Model(m) => {
            let model = model_from_json(&g, m)?;
            let ok = verify_model(&model).map_err(|e| e.to_string())?;
            match (ok, m.verified) {
                (true, true) | (false, false) => Ok(()),
                (true, false) => Err("model verifies but is marked unverified".into()),
                (false, true) => Err("model is marked verified but fails".into()),
            }
        }
    }
}

pub fn model_from_json(g: &Graph, m: &ModelJson) -> Result<CyclicMinorModel, String> {
    let target = Graph::try_from(&m.target_graph).map_err(|e| e.to_string())?;
    let kind = match (m.target.as_str(), m.l) {
        ("K'll", Some(l)) => TargetKind::KllPrime(l),
        (name, _) => match name.strip_prefix('K').and_then(|r| r.parse().ok()) {
            Some(r) => TargetKind::Clique(r),
            None => TargetKind::Other,
        },
    };
    if let Some(expected) = kind.graph() {
        if expected != target {
            return Err(format!("target graph does not match {}", m.target));
        }
    }
    Ok(CyclicMinorModel {
        host: g.clone(),
        host_cycle: m.host_cycle.clone(),
        arcs: m.arcs.clone(),
        target,
        target_cycle: m.target_cycle.clone(),
        kind,
        origin: m.origin,
    })
}

fn verify_certificate(g: &Graph, c: &CertificateJson) -> Result<(), String> {
    if !g.is_cycle(&c.cycle) {
        return Err("cycle is not a cycle of the host".into());
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in c.cycle.iter().enumerate() {
        pos[v] = i;
    }
    let mut listed = c.high_degree.clone();
    listed.sort_unstable();
    listed.dedup();
    if listed.len() != c.high_degree.len() || listed.len() < c.k + 1 {
        return Err(format!("need {} distinct high-degree vertices", c.k + 1));
    }
    for &v in &listed {
        if v >= g.n() || pos[v] == usize::MAX {
            return Err(format!("{v} is not on the cycle"));
        }
        let d = g.neighbors(v).iter().filter(|&&x| pos[x] != usize::MAX).count();
        if d < c.k {
            return Err(format!("{v} has {d} < {} neighbours on the cycle", c.k));
        }
    }
    let chords = pairs(&g.chords_of_cycle(&c.cycle));
    if chords != c.chords || c.chord_count != chords.len() {
        return Err("chord list does not match the host".into());
    }
    if c.chord_bound != chord_lower_bound(c.k) || chords.len() < c.chord_bound {
        return Err(format!("{} chords, bound {}", chords.len(), chord_lower_bound(c.k)));
    }
    if c.path.last() != c.cycle.first() || !g.is_path(&c.path) {
        return Err("stick does not end at the first cycle vertex".into());
    }
    if c.active.iter().any(|&v| v >= g.n()) {
        return Err("active vertex out of range".into());
    }
    let active: Vec<bool> = {
        let mut a = vec![false; g.n()];
        for &v in &c.active {
            a[v] = true;
        }
        a
    };
    let t = c.cycle.len();
    let passive: Vec<[Vertex; 2]> = (0..t)
        .map(|i| (c.cycle[i], c.cycle[(i + 1) % t]))
        .filter(|&(a, b)| !active[a] && !active[b])
        .map(|(a, b)| [a.min(b), a.max(b)])
        .collect();
    if passive != c.passive_edges {
        return Err("passive edges do not match the active set".into());
    }
    Ok(())
}

fn verify_contraction(g: &Graph, c: &ContractionJson) -> Result<(), String> {
    let sub = g.induced_subgraph(&c.cycle);
    let t = c.cycle.len();
    let local: Vec<Vertex> = (0..t).collect();
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in c.cycle.iter().enumerate() {
        pos[v] = i;
    }
    for p in &c.plans {
        let flat: Vec<Vertex> = p.arcs.iter().flatten().copied().collect();
        if flat.len() != t || flat.iter().any(|&v| v >= g.n() || pos[v] == usize::MAX) {
            return Err(format!("{}: arcs do not cover the cycle", p.name));
        }
        let mut flags = vec![false; t];
        for arc in &p.arcs {
            for w in arc.windows(2) {
                if pos[w[1]] != (pos[w[0]] + 1) % t {
                    return Err(format!("{}: arc {arc:?} is not contiguous", p.name));
                }
                flags[pos[w[0]]] = true;
            }
        }
        let (q, _) = contract_along_cycle(&sub, &local, &flags).map_err(|e| e.to_string())?;
        let stats = degree_stats(&q).map_err(|e| e.to_string())?;
        if q.n() != p.vertices || q.edge_count() != p.edges || stats.min_degree != p.min_degree {
            return Err(format!("{}: quotient does not match the reported sizes", p.name));
        }
        if format_ratio(&stats.avg_degree) != p.avg_degree {
            return Err(format!("{}: average degree is {}", p.name, stats.avg_degree));
        }
        let min_ok = stats.min_degree >= (c.k + 3) / 2 && q.n() >= c.k;
        let avg_ok = stats.avg_at_least_two_thirds_of(c.k + 1) && q.n() >= c.k;
        if min_ok != p.meets_min_degree_bound || avg_ok != p.meets_avg_degree_bound {
            return Err(format!("{}: bound flags are wrong", p.name));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contraction::plan_all;
    use crate::lollipop::find_dense_cycle;
    use crate::minor::k4_model;

    #[test]
    fn certificate_round_trip() {
        let g = Graph::complete(6);
        let cert = find_dense_cycle(&g, 5).unwrap();
        let doc = certificate_document(&g, &cert);
        let text = to_json(&doc);
        assert!(text.contains("\"schema\": \"1\""));
        assert!(text.contains("\"kind\": \"dense-cycle\""));
        let back = from_json(&text).unwrap();
        assert_eq!(back, doc);
        verify_document(&back).unwrap();
        match back.body {
            Body::DenseCycle(c) => assert_eq!(c.chord_count, 9),
            _ => unreachable!(),
        }
    }

    #[test]
    fn tampering_is_caught() {
        let g = Graph::complete(6);
        let cert = find_dense_cycle(&g, 5).unwrap();
        let mut doc = certificate_document(&g, &cert);
        if let Body::DenseCycle(c) = &mut doc.body {
            c.chords.pop();
        }
        assert!(verify_document(&doc).is_err());
    }

    #[test]
    fn contraction_and_model_round_trip() {
        let g = Graph::complete(7);
        let cert = find_dense_cycle(&g, 6).unwrap();
        let (r0, r1, r2) = plan_all(&g, &cert).unwrap();
        let doc = contraction_document(&g, [&r0, &r1, &r2]);
        verify_document(&from_json(&to_json(&doc)).unwrap()).unwrap();

        let m = k4_model(&Graph::complete(4), &[0, 1, 2, 3]).unwrap();
        let doc = model_document(&m, None);
        let back = from_json(&to_json(&doc)).unwrap();
        verify_document(&back).unwrap();
        assert!(matches!(&back.body, Body::Model(j) if j.target == "K4" && j.verified));
    }

    #[test]
    fn wrong_schema_is_rejected() {
        let g = Graph::complete(4);
        let m = k4_model(&g, &[0, 1, 2, 3]).unwrap();
        let text = to_json(&model_document(&m, None)).replace("\"schema\": \"1\"", "\"schema\": \"2\"");
        assert!(from_json(&text).is_err());
    }
}
