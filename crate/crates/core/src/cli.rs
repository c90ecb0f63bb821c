//! Batch front end: argument definitions, commands and run reports.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::algebra::groebner::is_groebner;
use crate::algebra::{MonomialOrder, PrimeField, DEFAULT_CHARACTERISTIC};
use crate::graph::{enumerate_closed_k4free, LabeledGraph, MAX_LABELING_SEARCH};
use crate::ideal::{edge_ideal, Variant, DEFAULT_GROEBNER_BUDGET};
use crate::oracle::{graded_betti, linear_strand_betti, Cell, Convention, KoszulOracle, OracleError, Route};
use crate::rees::{family_counts, phi_apply, rees_relations, Family};
use crate::strand::strand_profile;

#[derive(Debug, Parser)]
#[command(name = "bei", version, about = "Binomial edge ideals of closed graphs: Rees relations and linear strands of powers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: GlobalOptions,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Characteristic of the coefficient field (a prime below 2^31).
    #[arg(long = "char", global = true, default_value_t = DEFAULT_CHARACTERISTIC)]
    pub characteristic: u32,
    /// Largest chain group (oracle) or kernel slice accepted, in basis elements.
    #[arg(long, global = true, default_value_t = crate::oracle::DEFAULT_PIECE_BUDGET)]
    pub budget: usize,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Vertex labels in input and output start at 1.
    #[arg(long, global = true)]
    pub one_indexed: bool,
    /// Also write the JSON report to this path.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Complex used by the Betti oracle.
    #[arg(long, global = true, value_enum, default_value_t = RouteArg::Ideal)]
    pub route: RouteArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Ideal,
    Quotient,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Ideal => Route::Ideal,
            RouteArg::Quotient => Route::Quotient,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Binomial,
    Initial,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Binomial => Variant::Binomial,
            VariantArg::Initial => Variant::Initial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantsArg {
    Both,
    Binomial,
    Initial,
}

impl VariantsArg {
    fn variants(self) -> Vec<Variant> {
        match self {
            VariantsArg::Both => Variant::BOTH.to_vec(),
            VariantsArg::Binomial => vec![Variant::Binomial],
            VariantsArg::Initial => vec![Variant::Initial],
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closedness, K4-freeness, counts and cliques of a graph.
    Check { graph: PathBuf },
    /// Generators of the Rees relation ideal, grouped by family.
    Relations {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = VariantArg::Binomial)]
        variant: VariantArg,
    },
    /// Compare the strand formula with the Betti oracle.
    Verify {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Last homological degree compared (default: one past the support).
        #[arg(long)]
        max_i: Option<usize>,
        #[arg(long, value_enum, default_value_t = VariantsArg::Both)]
        variant: VariantsArg,
    },
    /// Run `verify` over every closed K4-free graph on up to `n` vertices.
    Corpus {
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_enum, default_value_t = VariantsArg::Both)]
        variant: VariantsArg,
        /// Restrict to connected graphs.
        #[arg(long)]
        connected: bool,
        /// Smallest vertex count swept.
        #[arg(long, default_value_t = 1)]
        min_n: usize,
    },
    /// Oracle Betti table of a power of the edge ideal.
    Betti {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_enum, default_value_t = VariantArg::Initial)]
        variant: VariantArg,
        #[arg(long, default_value_t = 2)]
        max_i: usize,
        /// Last internal degree (default: 2m + max_i + 1).
        #[arg(long)]
        max_j: Option<u32>,
    },
    /// Strand formula values for a graph.
    Profile {
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, detail: detail.into() }
    }

    fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Check {
        Check { name: name.into(), status: Status::Skipped, detail: reason.into() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

/// Outcome of one command. `text` is the human rendering of `data`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    pub checks: Vec<Check>,
    pub data: Value,
    pub timing: Timing,
    pub artifacts: Vec<String>,
    #[serde(skip)]
    pub text: String,
}

impl RunReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        (count(Status::Pass), count(Status::Fail), count(Status::Skipped))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render(&self) -> String {
        let mut out = self.text.clone();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skip",
            };
            let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.detail);
        }
        let (p, f, s) = self.counts();
        let _ = writeln!(out, "checks: {p} passed, {f} failed, {s} skipped");
        out
    }
}

fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn field(options: &GlobalOptions) -> Result<PrimeField> {
    PrimeField::new(options.characteristic)
        .with_context(|| format!("--char {} is not a prime below 2^31", options.characteristic))
}

fn read_graph(path: &Path, one_indexed: bool) -> Result<(LabeledGraph, String)> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = String::from_utf8(bytes.clone()).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let graph = LabeledGraph::parse_edge_list(&text, one_indexed).with_context(|| format!("parsing {}", path.display()))?;
    Ok((graph, digest(&bytes)))
}

struct Labels(usize);

impl Labels {
    fn set(&self, vs: &[usize]) -> String {
        let inner: Vec<String> = vs.iter().map(|v| (v + self.0).to_string()).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// Runs a parsed command line. `argv` is echoed into the report.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<RunReport> {
    let start = Instant::now();
    let opts = &cli.options;
    let (input_digest, data, text, checks) = match &cli.command {
        Command::Check { graph } => {
            let (g, d) = read_graph(graph, opts.one_indexed)?;
            let (data, text, checks) = cmd_check(&g, opts)?;
            (d, data, text, checks)
        }
        Command::Relations { graph, variant } => {
            let (g, d) = read_graph(graph, opts.one_indexed)?;
            let (data, text, checks) = cmd_relations(&g, (*variant).into(), opts)?;
            (d, data, text, checks)
        }
        Command::Verify { graph, m, max_i, variant } => {
            let (g, d) = read_graph(graph, opts.one_indexed)?;
            let (data, text, checks) = cmd_verify(&g, *m, *max_i, &variant.variants(), opts)?;
            (d, data, text, checks)
        }
        Command::Corpus { n, m, variant, connected, min_n } => cmd_corpus(*min_n, *n, *m, &variant.variants(), *connected, opts)?,
        Command::Betti { graph, m, variant, max_i, max_j } => {
            let (g, d) = read_graph(graph, opts.one_indexed)?;
            let (data, text, checks) = cmd_betti(&g, *m, (*variant).into(), *max_i, *max_j, opts)?;
            (d, data, text, checks)
        }
        Command::Profile { graph, m } => {
            let (g, d) = read_graph(graph, opts.one_indexed)?;
            let p = strand_profile(&g, *m as u64)?;
            let text = format!("{}\n", p.to_json());
            (d, serde_json::from_str(&p.to_json())?, text, Vec::new())
        }
    };
    let mut report = RunReport {
        command: argv,
        input_digest,
        checks,
        data,
        timing: Timing { elapsed_ms: start.elapsed().as_millis() },
        artifacts: Vec::new(),
        text,
    };
    if let Some(path) = &opts.output {
        report.artifacts.push(path.display().to_string());
        std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report)
}

type Outcome = (Value, String, Vec<Check>);

pub fn cmd_check(g: &LabeledGraph, opts: &GlobalOptions) -> Result<Outcome> {
    let labels = Labels(usize::from(opts.one_indexed));
    let triple = g.is_closed_labeling();
    let pairwise = g.satisfies_pairwise_closed_condition();
    let connected = g.is_connected();
    let k4_free = !g.has_induced_k4();
    let triangles = g.triangles();
    let mut text = String::new();
    let mut checks = Vec::new();
    let _ = writeln!(text, "n={} e={} t={}", g.vertex_count(), g.edge_count(), triangles.len());
    let yes = |b: bool| if b { "yes" } else { "no" };
    let _ = writeln!(text, "closed: {}", yes(triple));
    let _ = writeln!(text, "closed (pairwise condition): {}", yes(pairwise));
    let _ = writeln!(text, "connected: {}", yes(connected));
    let _ = writeln!(text, "K4-free: {}", yes(k4_free));

    let mut data = json!({
        "n": g.vertex_count(),
        "e": g.edge_count(),
        "t": triangles.len(),
        "closed": triple,
        "closed_pairwise": pairwise,
        "connected": connected,
        "k4_free": k4_free,
    });
    if triple {
        let cliques = g.maximal_cliques()?;
        let shown: Vec<String> = cliques.cliques().iter().map(|c| labels.set(c)).collect();
        for (k, c) in shown.iter().enumerate() {
            let _ = writeln!(text, "clique {}: {c}", k + 1);
        }
        data["cliques"] = json!(cliques.cliques().iter().map(|c| c.iter().map(|v| v + labels.0).collect::<Vec<_>>()).collect::<Vec<_>>());
    } else {
        let search = match g.find_closed_labeling() {
            Ok(Some(perm)) => {
                let relabeled: Vec<String> = perm.iter().map(|p| (p + labels.0).to_string()).collect();
                format!("closed relabeling: vertex v gets label [{}][v]", relabeled.join(","))
            }
            Ok(None) => "closed relabeling: none exists".to_string(),
            Err(_) => format!("closed relabeling: not searched (more than {MAX_LABELING_SEARCH} vertices)"),
        };
        let _ = writeln!(text, "{search}");
        data["labeling_search"] = json!(search);
    }
    checks.push(Check::new(
        "closed characterizations",
        (!triple || pairwise) && (!connected || triple == pairwise),
        format!("triple condition {}, pairwise condition {}, connected {}", yes(triple), yes(pairwise), yes(connected)),
    ));
    let f = field(opts)?;
    let gens = edge_ideal(&f, g, Variant::Binomial);
    let groebner = is_groebner(gens.generators(), &MonomialOrder::LexR);
    checks.push(Check::new(
        "lex Groebner basis",
        groebner == pairwise,
        format!("generators form a lex Groebner basis: {}", yes(groebner)),
    ));
    data["groebner"] = json!(groebner);
    Ok((data, text, checks))
}

pub fn cmd_relations(g: &LabeledGraph, variant: Variant, opts: &GlobalOptions) -> Result<Outcome> {
    if let Some((i, j, k)) = g.closed_violation() {
        let o = usize::from(opts.one_indexed);
        bail!("graph is not closed: {{{},{}}} is an edge but {{{},{}}} or {{{},{}}} is not", i + o, k + o, i + o, j + o, j + o, k + o);
    }
    let f = field(opts)?;
    let offset = usize::from(opts.one_indexed);
    let rel = rees_relations(&f, g, variant)?;
    let counts = family_counts(&rel);
    let mut text = String::new();
    let mut groups = serde_json::Map::new();
    let mut bad = Vec::new();
    for fam in Family::ALL {
        let members: Vec<_> = rel.iter().filter(|r| r.family == fam).collect();
        let best_effort = fam == Family::Pluecker && variant == Variant::Initial;
        let _ = writeln!(text, "{} ({}){}", fam, members.len(), if best_effort { " [best effort]" } else { "" });
        let mut list = Vec::new();
        for r in members {
            let body = r.body.render_with(&MonomialOrder::RevLexS, offset);
            let _ = writeln!(text, "  {body}    # {}", r.witness.display(offset));
            if !phi_apply(&f, &r.body, g, variant)?.is_zero() {
                bad.push(body.clone());
            }
            list.push(json!({"body": body, "bidegree": [r.bidegree.0, r.bidegree.1], "witness": r.witness.display(offset)}));
        }
        groups.insert(fam.name().to_string(), Value::Array(list));
    }
    let summary = format!("{} Koszul, {} Eagon-Northcott, {} Pluecker", counts[0], counts[1], counts[2]);
    let _ = writeln!(text, "counts: {summary}");
    let checks = vec![Check::new(
        "kernel membership",
        bad.is_empty(),
        if bad.is_empty() {
            format!("all {} relations map to 0", rel.len())
        } else {
            format!("nonzero image: {}", bad.join("; "))
        },
    )];
    let data = json!({"variant": variant.name(), "counts": counts, "relations": groups});
    Ok((data, text, checks))
}

/// Formula-versus-oracle comparison for one graph and variant.
pub fn verify_graph(
    f: &PrimeField,
    g: &LabeledGraph,
    variant: Variant,
    m: u32,
    max_i: Option<usize>,
    opts: &GlobalOptions,
    label: &str,
) -> Result<(Vec<Check>, Value)> {
    let profile = strand_profile(g, m as u64)?;
    let support = profile.support().len();
    let max_i = max_i.unwrap_or(support);
    let oracle = KoszulOracle::for_power(f, g, variant, m as usize, opts.route.into(), opts.budget, DEFAULT_GROEBNER_BUDGET);
    let mut oracle = match oracle {
        Ok(o) => o,
        Err(OracleError::Algebra(e)) => {
            let check = Check::skipped(format!("{label}{variant} strand"), format!("Groebner basis: {e}"));
            return Ok((vec![check], json!({"variant": variant.name(), "skipped": e.to_string()})));
        }
        Err(e) => return Err(e.into()),
    };
    let cells = linear_strand_betti(&mut oracle, m, max_i)?;
    let mut checks = Vec::new();
    let mut shown = Vec::new();
    for (i, cell) in cells.iter().enumerate() {
        let expected = profile.entry(i);
        let name = format!("{label}{variant} beta_{{{i},{}}}", 2 * m as usize + i);
        match cell {
            Cell::Value(v) => {
                checks.push(Check::new(name, expected == (*v).into(), format!("formula {expected}, oracle {v}")));
                shown.push(json!(v));
            }
            Cell::Skipped { p, j, dim } => {
                checks.push(Check::skipped(name, format!("chain group (p={p}, j={j}) has dimension {dim}")));
                shown.push(Value::Null);
            }
            Cell::Unknown => unreachable!("strand cells are always computed"),
        }
    }
    let formula: Vec<String> = (0..=max_i).map(|i| profile.entry(i).to_string()).collect();
    let data = json!({
        "variant": variant.name(),
        "formula": formula.iter().map(|s| s.parse::<serde_json::Number>().expect("integer")).collect::<Vec<_>>(),
        "oracle": shown,
    });
    Ok((checks, data))
}

pub fn cmd_verify(g: &LabeledGraph, m: u32, max_i: Option<usize>, variants: &[Variant], opts: &GlobalOptions) -> Result<Outcome> {
    if m == 0 {
        bail!("--m must be at least 1");
    }
    let f = field(opts)?;
    let profile = strand_profile(g, m as u64)?;
    let mut text = format!("e={} t={} m={}\n", profile.e, profile.t, m);
    let mut checks = Vec::new();
    let mut per_variant = Vec::new();
    for &v in variants {
        let (c, data) = verify_graph(&f, g, v, m, max_i, opts, "")?;
        let _ = writeln!(text, "{v}: formula {} oracle {}", data["formula"], data.get("oracle").unwrap_or(&Value::Null));
        checks.extend(c);
        per_variant.push(data);
    }
    Ok((json!({"e": profile.e, "t": profile.t, "m": m, "results": per_variant}), text, checks))
}

fn cmd_corpus(
    min_n: usize,
    n: usize,
    m: u32,
    variants: &[Variant],
    connected: bool,
    opts: &GlobalOptions,
) -> Result<(String, Value, String, Vec<Check>)> {
    if m == 0 {
        bail!("--m must be at least 1");
    }
    let f = field(opts)?;
    let mut graphs = Vec::new();
    for size in min_n..=n {
        graphs.extend(enumerate_closed_k4free(size)?.filter(|g| !connected || g.is_connected()));
    }
    let listing: String = graphs.iter().map(|g| g.to_edge_list(false)).collect();
    let results: Vec<Result<Vec<(Check, Vec<Check>)>>> = graphs
        .par_iter()
        .enumerate()
        .map(|(k, g)| {
            let mut out = Vec::new();
            for &v in variants {
                let name = format!("graph {k} {v}");
                let (checks, _) = verify_graph(&f, g, v, m, None, opts, "")?;
                let failed = checks.iter().filter(|c| c.status == Status::Fail).count();
                let skipped = checks.iter().filter(|c| c.status == Status::Skipped).count();
                let edges: Vec<String> = g.edges().iter().map(|e| format!("{}-{}", e.lo() + usize::from(opts.one_indexed), e.hi() + usize::from(opts.one_indexed))).collect();
                let detail = format!("n={} edges [{}]", g.vertex_count(), edges.join(" "));
                let check = if failed > 0 {
                    Check::new(name, false, format!("{detail}: {failed} mismatches"))
                } else if skipped > 0 {
                    Check::skipped(name, format!("{detail}: {skipped} entries over budget"))
                } else {
                    Check::new(name, true, detail)
                };
                out.push((check, checks));
            }
            Ok(out)
        })
        .collect();
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        for (check, detail) in r? {
            if check.status == Status::Fail {
                failures.push(json!({"graph": check.name, "checks": detail}));
            }
            checks.push(check);
        }
    }
    let (p, fl, s) = {
        let c = |st| checks.iter().filter(|c: &&Check| c.status == st).count();
        (c(Status::Pass), c(Status::Fail), c(Status::Skipped))
    };
    let text = format!("{} graphs, m={m}: {p} pass, {fl} fail, {s} skipped\n", graphs.len());
    let data = json!({"graphs": graphs.len(), "m": m, "pass": p, "fail": fl, "skipped": s, "failures": failures});
    Ok((digest(listing.as_bytes()), data, text, checks))
}

pub fn cmd_betti(g: &LabeledGraph, m: u32, variant: Variant, max_i: usize, max_j: Option<u32>, opts: &GlobalOptions) -> Result<Outcome> {
    if m == 0 {
        bail!("--m must be at least 1");
    }
    g.maximal_cliques()?;
    let f = field(opts)?;
    let max_j = max_j.unwrap_or(2 * m + max_i as u32 + 1);
    let mut oracle = KoszulOracle::for_power(&f, g, variant, m as usize, opts.route.into(), opts.budget, DEFAULT_GROEBNER_BUDGET)?;
    // window in quotient convention covers ideal indices 0..=max_i
    let table = graded_betti(&mut oracle, max_i + 1, max_j)?;
    let text = format!("Betti table of the {variant} ideal, power {m}\n{}", table.render(Convention::Ideal));
    Ok((table.to_json(Convention::Ideal), text, Vec::new()))
}
