//! `lollipop`: dense cycles, contraction plans and cyclic minors from the
//! command line.
//!
//! Exit codes: 0 success, 1 error, 2 not found or inconclusive, 3 the
//! rotation closure fell short (the closure is dumped to stderr).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lollipop_core::contraction::{plan_all, ContractionReport};
use lollipop_core::corpus::{run_corpus, summarize, CorpusConfig};
use lollipop_core::graph::{
    degeneracy, degree_stats, format_ratio, generate, parse_edge_list, to_dot, write_edge_list, Family, GraphData,
};
use lollipop_core::json::{
    certificate_document, contraction_document, from_json, model_document, to_json, verify_document,
};
use lollipop_core::lollipop::{find_dense_cycle, DenseCycleCertificate, Lollipop};
use lollipop_core::minor::{build_minor, verify_model, CyclicMinorModel, MinorSearch, Route, TargetKind};
use lollipop_core::oracle::{
    cyclic_minor_exists, full_active_enumeration, hamiltonian_paths_from, max_chords_over_cycles, Limits,
};
use lollipop_core::{EngineError, Execution, Graph, Vertex};

const GUARD_ENV: &str = "LOLLIPOP_GUARD_N";

#[derive(Parser)]
#[command(name = "lollipop", version, about = "Chord-dense cycles and cyclic minors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph from a named family.
    Generate(Common),
    /// Degree statistics and degeneracy.
    Analyze(Common),
    /// Cycle with at least (k+1)(k-2)/2 chords.
    DenseCycle(Common),
    /// The three contraction plans of the dense cycle.
    Contract(Common),
    /// Cyclic clique or K'll minor by construction.
    CliqueMinor(Common),
    /// Active rotation paths of the dense-cycle lollipop.
    ActivePaths(Common),
    /// Re-verify a JSON document, or decide a cyclic minor exhaustively.
    Certify(Common),
    /// Seeded corpus run with per-k summaries.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct Common {
    /// Edge-list file (or a JSON document for `certify`).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Graph family, e.g. complete, petersen, random_min_degree.
    #[arg(long)]
    family: Option<String>,
    /// Family parameters as K=V, repeated or comma separated.
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
    /// Minimum-degree parameter; defaults to the minimum degree of the graph.
    #[arg(long)]
    k: Option<usize>,
    /// K3, K4, K5, K6 (any Kr for the oracle) or Kll:ℓ.
    #[arg(long, value_parser = parse_target)]
    target: Option<TargetKind>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cross-check against the brute-force oracle (size guarded).
    #[arg(long)]
    oracle: bool,
    /// Unpruned enumeration for `active-paths`.
    #[arg(long)]
    full: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Values of k, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,6,7,8")]
    ks: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    per_k: usize,
    #[arg(long, default_value_t = 200)]
    max_n: usize,
    #[arg(long, default_value_t = 200)]
    max_extra: usize,
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Run instances one after another instead of on the thread pool.
    #[arg(long)]
    sequential: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

fn parse_target(s: &str) -> Result<TargetKind, String> {
    if let Some(l) = s.strip_prefix("Kll:") {
        return match l.parse() {
            Ok(l) if l >= 1 => Ok(TargetKind::KllPrime(l)),
            _ => Err(format!("bad ℓ in {s:?}")),
        };
    }
    match s.strip_prefix('K').and_then(|r| r.parse().ok()) {
        Some(r) if r >= 1 => Ok(TargetKind::Clique(r)),
        _ => Err(format!("unknown target {s:?}; expected K3, K4, K5, K6 or Kll:ℓ")),
    }
}

/// What a command produced: the bytes for stdout (or `--out`) and the exit
/// code.
struct Report {
    body: String,
    code: u8,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, code: 0 }
    }
}

fn main() -> ExitCode {
    // Flag errors exit 1; clap's own code 2 is reserved for "not found".
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (out, result) = match cli.command {
        Command::Experiment(a) => (a.out.clone(), experiment(&a)),
        Command::Generate(c) => (c.out.clone(), cmd_generate(&c)),
        Command::Analyze(c) => (c.out.clone(), analyze(&c)),
        Command::DenseCycle(c) => (c.out.clone(), dense_cycle(&c)),
        Command::Contract(c) => (c.out.clone(), contract(&c)),
        Command::CliqueMinor(c) => (c.out.clone(), clique_minor(&c)),
        Command::ActivePaths(c) => (c.out.clone(), active_paths(&c)),
        Command::Certify(c) => (c.out.clone(), certify(&c)),
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            if let Some(EngineError::Shortfall { closure, .. }) = e.downcast_ref::<EngineError>() {
                eprintln!("error: {e}");
                eprintln!("{}", serde_json::to_string_pretty(closure).expect("closure serialises"));
                return ExitCode::from(3);
            }
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let written = match out {
        Some(path) => std::fs::write(&path, &report.body).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{}", report.body);
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e:#}");
        return ExitCode::from(1);
    }
    ExitCode::from(report.code)
}

fn limits() -> Result<Limits> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => {
            let n = v.parse().with_context(|| format!("{GUARD_ENV}={v:?} is not an integer"))?;
            Ok(Limits::with_vertex_bound(n))
        }
        Err(_) => Ok(Limits::default()),
    }
}

fn read_text(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(c: &Common) -> Result<Graph> {
    match (&c.input, &c.family) {
        (Some(path), None) => Ok(parse_edge_list(&read_text(path)?)?),
        (None, Some(name)) => {
            let mut params = BTreeMap::new();
            for p in &c.params {
                let (k, v) = p.split_once('=').ok_or_else(|| anyhow!("parameter {p:?} is not K=V"))?;
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
            Ok(generate(&Family::from_name(name, &params)?, c.seed)?)
        }
        (Some(_), Some(_)) => bail!("give either --input or --family, not both"),
        (None, None) => bail!("a graph is required: --input FILE or --family NAME"),
    }
}

fn k_of(c: &Common, g: &Graph) -> usize {
    c.k.unwrap_or_else(|| g.min_degree().unwrap_or(0))
}

fn join(vs: &[Vertex]) -> String {
    vs.iter().map(Vertex::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_generate(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    Ok(Report::ok(match c.format {
        Format::Text => write_edge_list(&g),
        Format::Dot => to_dot(&g, None),
        Format::Json => serde_json::to_string_pretty(&GraphData::from(&g))? + "\n",
    }))
}

fn analyze(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    let stats = degree_stats(&g)?;
    let deg = degeneracy(&g)?;
    let oracle = if c.oracle {
        let limits = limits()?;
        let best = max_chords_over_cycles(&g, &limits)?;
        Some(best.map(|(chords, _)| chords))
    } else {
        None
    };
    let body = match c.format {
        Format::Json => {
            let mut v = serde_json::json!({
                "vertices": stats.vertices,
                "edges": stats.edges,
                "min_degree": stats.min_degree,
                "max_degree": stats.max_degree,
                "avg_degree": stats.avg_string(),
                "connected": g.is_connected(),
                "degeneracy": deg.degeneracy,
                "elimination_order": deg.elimination_order,
                "corollary_bound": deg.corollary_bound,
            });
            if let Some(best) = oracle {
                v["oracle_max_chords"] = serde_json::json!(best);
            }
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Dot => to_dot(&g, None),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "vertices: {}", stats.vertices)?;
            writeln!(s, "edges: {}", stats.edges)?;
            writeln!(s, "degree: min {} max {} avg {}", stats.min_degree, stats.max_degree, stats.avg_string())?;
            writeln!(s, "connected: {}", g.is_connected())?;
            writeln!(s, "degeneracy: {}", deg.degeneracy)?;
            if let Some(b) = deg.corollary_bound {
                writeln!(s, "corollary bound: {b}")?;
            }
            if let Some(best) = oracle {
                match best {
                    Some(m) => writeln!(s, "oracle max chords over cycles: {m}")?,
                    None => writeln!(s, "oracle: acyclic")?,
                }
            }
            s
        }
    };
    Ok(Report::ok(body))
}

fn certificate(c: &Common, g: &Graph) -> Result<DenseCycleCertificate> {
    let cert = find_dense_cycle(g, k_of(c, g))?;
    cert.check(g).map_err(|e| anyhow!("certificate failed its own check: {e}"))?;
    Ok(cert)
}

fn dense_cycle(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    let cert = certificate(c, &g)?;
    let bound = lollipop_core::lollipop::chord_lower_bound(cert.k);
    let mut note = String::new();
    if c.oracle {
        match max_chords_over_cycles(&g, &limits()?)? {
            Some((best, _)) if best >= cert.chords.len() => {
                writeln!(note, "oracle: best cycle has {best} chords, certificate has {}", cert.chords.len())?
            }
            other => bail!("oracle disagrees: best {other:?}, certificate {}", cert.chords.len()),
        }
    }
    let body = match c.format {
        Format::Json => to_json(&certificate_document(&g, &cert)),
        Format::Dot => to_dot(&g, Some(std::slice::from_ref(&cert.cycle))),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "k: {}", cert.k)?;
            writeln!(s, "path: {}", join(&cert.path))?;
            writeln!(s, "cycle ({}): {}", cert.cycle.len(), join(&cert.cycle))?;
            writeln!(s, "high-degree vertices ({}): {}", cert.high_degree_vertices.len(), join(&cert.high_degree_vertices))?;
            writeln!(s, "chords: {} (bound {bound})", cert.chords.len())?;
            writeln!(s, "iterations: {}", cert.iterations)?;
            s + &note
        }
    };
    if c.format != Format::Text && !note.is_empty() {
        eprint!("{note}");
    }
    Ok(Report::ok(body))
}

fn contract(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    let cert = certificate(c, &g)?;
    let (r0, r1, r2) = plan_all(&g, &cert)?;
    let body = match c.format {
        Format::Json => to_json(&contraction_document(&g, [&r0, &r1, &r2])),
        Format::Dot => to_dot(&g, Some(&r2.arcs())),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "k: {}, cycle length {}", cert.k, cert.cycle.len())?;
            for (name, r) in [("G0", &r0), ("G1", &r1), ("G2", &r2)] {
                plan_line(&mut s, name, r)?;
            }
            s
        }
    };
    Ok(Report::ok(body))
}

fn plan_line(s: &mut String, name: &str, r: &ContractionReport) -> std::fmt::Result {
    write!(
        s,
        "{name}: {} vertices, {} edges, min degree {} (bound {}), avg {}",
        r.quotient.n(),
        r.quotient.edge_count(),
        r.min_degree(),
        r.min_degree_bound(),
        format_ratio(&r.avg_degree()),
    )?;
    if let Some(strategy) = r.diagnostics.strategy {
        write!(s, ", strategy {}", format!("{strategy:?}").to_lowercase())?;
    }
    writeln!(s)
}

fn model_text(m: &CyclicMinorModel, route: Option<Route>) -> Result<String> {
    let mut s = String::new();
    write!(s, "{} cyclic minor", m.kind.label())?;
    if let Some(l) = m.kind.l() {
        write!(s, " (ℓ = {l})")?;
    }
    if let Some(route) = route {
        write!(s, ", route {}", serde_json::to_value(route)?.as_str().unwrap_or_default())?;
    }
    writeln!(s)?;
    writeln!(s, "host cycle: {}", join(&m.host_cycle))?;
    for (arc, t) in m.arcs.iter().zip(&m.target_cycle) {
        writeln!(s, "  target {t}: {}", join(arc))?;
    }
    writeln!(s, "verified: {}", verify_model(m)?)?;
    Ok(s)
}

fn emit_model(format: Format, m: &CyclicMinorModel, route: Option<Route>) -> Result<String> {
    Ok(match format {
        Format::Json => to_json(&model_document(m, route)),
        Format::Dot => to_dot(&m.host, Some(&m.arcs)),
        Format::Text => model_text(m, route)?,
    })
}

fn clique_minor(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    let kind = c.target.ok_or_else(|| anyhow!("--target is required"))?;
    let search = build_minor(&g, kind)?;
    if c.oracle {
        let target = kind.graph().ok_or_else(|| anyhow!("no target graph"))?;
        let witness = cyclic_minor_exists(&g, &target, &limits()?)?;
        match (&search, witness.is_some()) {
            (MinorSearch::Found { .. }, false) => bail!("oracle finds no {} but a model was built", kind.label()),
            (MinorSearch::Found { .. }, true) => eprintln!("oracle: {} confirmed", kind.label()),
            (MinorSearch::NotFound { .. }, true) => eprintln!("oracle: a cyclic {} exists", kind.label()),
            (MinorSearch::NotFound { .. }, false) => eprintln!("oracle: no cyclic {} (exhaustive)", kind.label()),
        }
    }
    match search {
        MinorSearch::Found { model, route } => Ok(Report::ok(emit_model(c.format, &model, Some(route))?)),
        MinorSearch::NotFound { exact } => {
            let how = if exact { "exhaustive over the examined cycle" } else { "heuristic" };
            Ok(Report {
                body: format!("no cyclic {} minor found ({how})\n", kind.label()),
                code: 2,
            })
        }
    }
}

fn active_paths(c: &Common) -> Result<Report> {
    let g = load_graph(c)?;
    let cert = certificate(c, &g)?;
    let lollipop = cert.lollipop();
    let mut s = String::new();
    if c.full {
        let limits = limits()?;
        let full = full_active_enumeration(&g, &lollipop, &limits)?;
        let all = hamiltonian_paths_from(&g, &lollipop.cycle, lollipop.c1(), &limits)?;
        if c.format == Format::Json {
            let v = serde_json::json!({
                "cycle": lollipop.cycle,
                "paths": all.len(),
                "active_paths": full.paths.len(),
                "active_vertices": full.active_vertices(),
                "level_sizes": full.level_sizes,
                "pruned_active_vertices": cert.closure.active,
            });
            return Ok(Report::ok(serde_json::to_string_pretty(&v)? + "\n"));
        }
        writeln!(s, "{} paths, {} active", all.len(), full.paths.len())?;
        writeln!(s, "active vertices: {}", join(&full.active_vertices()))?;
    } else if c.format == Format::Json {
        return Ok(Report::ok(serde_json::to_string_pretty(&cert.closure)? + "\n"));
    }
    write_pruned(&mut s, &lollipop, &cert)?;
    Ok(Report::ok(s))
}

fn write_pruned(s: &mut String, l: &Lollipop, cert: &DenseCycleCertificate) -> std::fmt::Result {
    writeln!(s, "cycle: {}", join(&l.cycle))?;
    writeln!(s, "pruned closure: {} active vertices", cert.closure.active.len())?;
    for w in cert.closure.witnesses.values() {
        writeln!(s, "  {}", join(&w.sequence))?;
    }
    Ok(())
}

fn certify(c: &Common) -> Result<Report> {
    if let Some(path) = &c.input {
        let text = read_text(path)?;
        if text.trim_start().starts_with('{') {
            let doc = from_json(&text).map_err(|e| anyhow!("{}: {e}", path.display()))?;
            verify_document(&doc).map_err(|e| anyhow!("{}: verification failed: {e}", path.display()))?;
            return Ok(Report::ok(format!("{}: verified\n", path.display())));
        }
    }
    let g = load_graph(c)?;
    let kind = c.target.ok_or_else(|| anyhow!("--target is required to certify a graph"))?;
    let target = kind.graph().ok_or_else(|| anyhow!("no target graph"))?;
    if c.oracle {
        return match cyclic_minor_exists(&g, &target, &limits()?)? {
            Some(w) => Ok(Report::ok(emit_model(c.format, &w, None)?)),
            None => Ok(Report {
                body: format!("no cyclic {} minor (exhaustive)\n", kind.label()),
                code: 2,
            }),
        };
    }
    match build_minor(&g, kind)? {
        MinorSearch::Found { model, route } => Ok(Report::ok(emit_model(c.format, &model, Some(route))?)),
        MinorSearch::NotFound { .. } => Ok(Report {
            body: format!("no cyclic {} minor found (inconclusive; rerun with --oracle)\n", kind.label()),
            code: 2,
        }),
    }
}

fn experiment(a: &ExperimentArgs) -> Result<Report> {
    let cfg = CorpusConfig {
        ks: a.ks.clone(),
        per_k: a.per_k,
        max_n: a.max_n,
        max_extra: a.max_extra,
        seed: a.seed,
    };
    let exec = if a.sequential { Execution::Sequential } else { Execution::Parallel };
    let outcomes = run_corpus(&cfg, exec);
    let summary = summarize(&outcomes);
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    let body = match a.format {
        Format::Json => {
            let v = serde_json::json!({ "config": cfg, "summary": summary, "outcomes": outcomes });
            serde_json::to_string_pretty(&v)? + "\n"
        }
        Format::Dot => bail!("experiment has no DOT output"),
        Format::Text => {
            let mut s = String::new();
            writeln!(s, "k  instances  passed  min chord surplus  G1 strategies")?;
            for k in &summary {
                let surplus = k.min_chord_surplus.map_or("-".into(), |v| v.to_string());
                let strategies: Vec<String> = k.g1_strategies.iter().map(|(n, c)| format!("{n} {c}")).collect();
                writeln!(s, "{}  {}  {}  {}  {}", k.k, k.instances, k.passed, surplus, strategies.join(", "))?;
            }
            for o in outcomes.iter().filter(|o| !o.passed()) {
                writeln!(s, "FAIL instance {}: {:?}", o.id, o)?;
            }
            s
        }
    };
    if failed > 0 {
        eprintln!("{failed} instances failed");
        return Ok(Report { body, code: 1 });
    }
    Ok(Report::ok(body))
}
