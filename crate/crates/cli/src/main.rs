use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::builder::TypedValueParser as _;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use ttr_core::bcg::{chain_ordering, classify_bcg, ttr_bcg, BcgMode, Verdict};
use ttr_core::closed_forms::{formula_witness, tr_formula, ttr_formula};
use ttr_core::corpus::{random_connected_bcg, random_graph, rng_from_seed};
use ttr_core::gadget::{build_reduction, lift_partition};
use ttr_core::graph::parse_edge_list;
use ttr_core::oracle::{
    bounds_ttr, tournament_transitivity_exact, transitivity_exact, OracleConfig, HARD_CAP,
};
use ttr_core::partition::{
    is_tournament_transitive, is_transitive, VerificationReport, ViolationKind,
};
use ttr_core::tree::{tournament_transitivity_tree, transitive_profile, transitivity_tree};
use ttr_core::{Graph, GraphFamily, Method, OrderedPartition, SolveReport};

mod sweep;

#[derive(Parser, Debug)]
#[command(name = "ttr", version, about = "Tournament transitivity of graphs")]
struct Cli {
    /// Emit JSON (schema 1) instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest graph the exhaustive search will accept.
    #[arg(long, global = true, env = "TTR_CAP", default_value_t = ttr_core::oracle::DEFAULT_CAP,
          value_parser = clap::value_parser!(u16).range(1..=HARD_CAP as i64).map(usize::from))]
    cap: usize,
    /// Seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Source {
    /// Named family, e.g. `path:5`, `cycle:6`, `kmn:2,3`, `clique-union:2,3`.
    #[arg(long)]
    family: Option<String>,
    /// Edge-list file (`n m` header, then `u v` lines); `-` reads stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute TTr (or Tr with --transitive) with a witness.
    Solve {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        transitive: bool,
    },
    /// Check a partition: `verify GRAPH PARTITION`, or `verify --family F PARTITION`.
    Verify {
        #[arg(num_args = 1..=2, required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long, conflicts_with = "transitive")]
        tournament: bool,
        #[arg(long)]
        transitive: bool,
    },
    /// Run the tree algorithm.
    Tree {
        #[command(flatten)]
        source: Source,
    },
    /// Classify a bipartite chain graph and determine its TTr.
    Bcg {
        #[command(flatten)]
        source: Source,
        /// Do not consult the exhaustive search.
        #[arg(long)]
        theorem_only: bool,
    },
    /// Closed-form values of a named family.
    Formula {
        #[arg(long)]
        family: String,
    },
    /// Build the hardness gadget of a base graph.
    Gadget {
        #[command(flatten)]
        source: Source,
        /// Print the gadget as an edge list instead of a summary.
        #[arg(long)]
        emit: bool,
    },
    /// Generate a graph as an edge list.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Upper and lower bounds on TTr.
    Bounds {
        #[command(flatten)]
        source: Source,
    },
    /// Run the validation corpora and print a pass/fail table.
    Sweep {
        #[arg(long, default_value_t = 10)]
        max_tree_n: usize,
        #[arg(long, default_value_t = 300)]
        bcg_count: usize,
    },
}

#[derive(Subcommand, Debug)]
enum GenKind {
    /// A named family.
    Family { spec: String },
    /// `G(n, p)`.
    Gnp { n: usize, p: f64 },
    /// A connected bipartite chain graph with sides `n1`, `n2`.
    Bcg { n1: usize, n2: usize },
}

struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome {
            text,
            json,
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut doc = json!({ "schema": 1 });
                doc.as_object_mut()
                    .unwrap()
                    .extend(out.json.as_object().cloned().unwrap_or_default());
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                );
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = OracleConfig::with_cap(cli.cap);
    match &cli.command {
        Command::Solve { source, transitive } => solve(&load(source)?, *transitive, cfg),
        Command::Verify {
            files,
            family,
            tournament: _,
            transitive,
        } => verify(files, family.as_deref(), *transitive),
        Command::Tree { source } => tree(&load(source)?, cfg),
        Command::Bcg {
            source,
            theorem_only,
        } => bcg(&load(source)?, *theorem_only, cfg),
        Command::Formula { family } => formula(family),
        Command::Gadget { source, emit } => gadget(&load(source)?, *emit, cfg),
        Command::Gen { kind } => gen(kind, cli.seed),
        Command::Bounds { source } => bounds(&load(source)?),
        Command::Sweep {
            max_tree_n,
            bcg_count,
        } => Ok(sweep::run(cfg, *max_tree_n, *bcg_count, cli.seed)),
    }
}

fn parse_family(spec: &str) -> Result<GraphFamily> {
    spec.parse::<GraphFamily>()
        .with_context(|| format!("bad family `{spec}`"))
}

fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let parsed = parse_edge_list(&read_text(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    if parsed.duplicate_edges > 0 {
        eprintln!(
            "warning: {} duplicate edges ignored",
            parsed.duplicate_edges
        );
    }
    Ok(parsed.graph)
}

fn load(source: &Source) -> Result<Graph> {
    match (&source.family, &source.input) {
        (Some(spec), _) => Ok(parse_family(spec)?.generate()?),
        (None, Some(path)) => read_graph(path),
        (None, None) => bail!("one of --family or --input is required"),
    }
}

/// Text format, a JSON array of parts, or a JSON object with a `witness` field.
fn read_partition(path: &Path) -> Result<OrderedPartition> {
    let text = read_text(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        let v: Value =
            serde_json::from_str(trimmed).with_context(|| format!("parsing {}", path.display()))?;
        let parts = if v.is_object() {
            v.get("witness")
                .cloned()
                .ok_or_else(|| anyhow!("no `witness` field"))?
        } else {
            v
        };
        let parts: Vec<Vec<usize>> =
            serde_json::from_value(parts).context("witness must be a list of parts")?;
        return Ok(OrderedPartition::new(parts)?);
    }
    OrderedPartition::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parts_text(p: &OrderedPartition) -> String {
    let mut out = String::new();
    for (i, part) in p.parts().iter().enumerate() {
        let ids: Vec<String> = part.iter().map(usize::to_string).collect();
        out.push_str(&format!("  V{}: {}\n", i + 1, ids.join(" ")));
    }
    out
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Oracle => "oracle",
        Method::ClosedForm => "closed-form",
        Method::TreeAlgorithm => "tree-algorithm",
        Method::BcgTheorem => "bcg-theorem",
    }
}

fn solve(g: &Graph, transitive: bool, cfg: OracleConfig) -> Result<Outcome> {
    let family = GraphFamily::recognize(g);
    let report = if transitive {
        solve_tr(g, family, cfg)?
    } else {
        solve_ttr(g, family, cfg)?
    };
    let key = if transitive { "tr" } else { "ttr" };
    let mut text = format!(
        "{} = {} ({})\nbounds: {}..{}\n",
        if transitive { "Tr" } else { "TTr" },
        report.value,
        method_name(report.method),
        report.bounds.0,
        report.bounds.1
    );
    match &report.witness {
        Some(w) => text.push_str(&format!("witness:\n{}", parts_text(w))),
        None => text.push_str("witness: none within the search cap\n"),
    }
    let json = json!({
        "command": "solve",
        key: report.value,
        "n": g.n(),
        "m": g.m(),
        "method": report.method,
        "bounds": { "lower": report.bounds.0, "upper": report.bounds.1 },
        "nodes_explored": report.nodes_explored,
        "witness": report.witness,
    });
    Ok(Outcome::ok(text, json))
}

fn solve_ttr(g: &Graph, family: Option<GraphFamily>, cfg: OracleConfig) -> Result<SolveReport> {
    if g.is_tree() {
        return Ok(tournament_transitivity_tree(g, cfg)?);
    }
    if g.n() <= cfg.cap {
        return Ok(tournament_transitivity_exact(g, cfg)?);
    }
    if let Some(f) = family {
        let value = ttr_formula(f)?;
        // recognized graphs may use other ids than the canonical numbering
        let witness = formula_witness(f)
            .ok()
            .filter(|w| f.generate().is_ok_and(|h| &h == g) && w.len() == value);
        return Ok(SolveReport {
            value,
            witness,
            method: Method::ClosedForm,
            bounds: (value, value),
            nodes_explored: 0,
        });
    }
    if chain_ordering(g).is_ok() {
        let d = ttr_bcg(g, BcgMode::TheoremOnly)?;
        if let Verdict::Exact { value } = d.verdict {
            return Ok(SolveReport {
                value,
                witness: d.witness,
                method: Method::BcgTheorem,
                bounds: (value, value),
                nodes_explored: 0,
            });
        }
    }
    Err(ttr_core::Error::CapExceeded {
        n: g.n(),
        cap: cfg.cap,
    })
    .context("no polynomial method applies")
}

fn solve_tr(g: &Graph, family: Option<GraphFamily>, cfg: OracleConfig) -> Result<SolveReport> {
    if g.n() <= cfg.cap {
        return Ok(transitivity_exact(g, cfg)?);
    }
    let value = if g.is_tree() {
        Some((transitivity_tree(g)?, Method::TreeAlgorithm))
    } else if let Some(v) = family.and_then(|f| tr_formula(f).ok()) {
        Some((v, Method::ClosedForm))
    } else if let Ok(c) = classify_bcg(g) {
        Some((c.transitivity(), Method::BcgTheorem))
    } else {
        None
    };
    let (value, method) = value
        .ok_or(ttr_core::Error::CapExceeded {
            n: g.n(),
            cap: cfg.cap,
        })
        .context("no polynomial method applies")?;
    Ok(SolveReport {
        value,
        witness: None,
        method,
        bounds: (value, value),
        nodes_explored: 0,
    })
}

fn verify(files: &[PathBuf], family: Option<&str>, transitive: bool) -> Result<Outcome> {
    let (g, partition_path) = match (family, files) {
        (Some(spec), [p]) => (parse_family(spec)?.generate()?, p),
        (None, [graph, p]) => (read_graph(graph)?, p),
        (Some(_), _) => bail!("with --family, give only the partition file"),
        (None, _) => bail!("expected GRAPH and PARTITION files"),
    };
    let p = read_partition(partition_path)?;
    let report: VerificationReport = if transitive {
        is_transitive(&g, &p)?
    } else {
        is_tournament_transitive(&g, &p)?
    };
    let property = if transitive {
        "transitive"
    } else {
        "tournament-transitive"
    };
    let text = match report.first_violation {
        None => format!("ok: {property} partition of size {}\n", p.len()),
        Some(v) => {
            let what = match v.kind {
                ViolationKind::MissingDomination => {
                    format!(
                        "V{} does not dominate V{}: vertex {} of V{} has no neighbor in V{}",
                        v.i, v.j, v.witness, v.j, v.i
                    )
                }
                ViolationKind::ForbiddenBackDomination => {
                    format!(
                        "V{} dominates V{}: every vertex of V{} has a neighbor in V{}",
                        v.j, v.i, v.i, v.j
                    )
                }
            };
            format!("not a {property} partition: {what}\n")
        }
    };
    let json = json!({
        "command": "verify",
        "property": property,
        "size": p.len(),
        "ok": report.ok,
        "first_violation": report.first_violation,
    });
    Ok(Outcome {
        text,
        json,
        code: if report.ok { 0 } else { 2 },
    })
}

fn tree(g: &Graph, cfg: OracleConfig) -> Result<Outcome> {
    let profile = transitive_profile(g)?;
    let tr = profile.max();
    let r = tournament_transitivity_tree(g, cfg)?;
    let mut text = format!("Tr = {tr}\nTTr = {}\n", r.value);
    let values: Vec<String> = profile.values.iter().map(usize::to_string).collect();
    text.push_str(&format!("transitive numbers: {}\n", values.join(" ")));
    match &r.witness {
        Some(w) => text.push_str(&format!("witness:\n{}", parts_text(w))),
        None => text.push_str("witness: none within the search cap\n"),
    }
    let json = json!({
        "command": "tree",
        "n": g.n(),
        "tr": tr,
        "ttr": r.value,
        "transitive_numbers": profile.values,
        "nodes_explored": r.nodes_explored,
        "witness": r.witness,
    });
    Ok(Outcome::ok(text, json))
}

fn bcg(g: &Graph, theorem_only: bool, cfg: OracleConfig) -> Result<Outcome> {
    let mode = if theorem_only {
        BcgMode::TheoremOnly
    } else {
        BcgMode::WithOracle(cfg)
    };
    let d = ttr_bcg(g, mode)?;
    let mut text = String::new();
    if let Some(c) = &d.classification {
        text.push_str(&format!(
            "kind: {}\nt: {}\nTr = {}\n",
            serde_json::to_value(c.kind)?.as_str().unwrap_or("?"),
            c.t,
            c.transitivity()
        ));
        if c.side_swapped {
            text.push_str("sides swapped\n");
        }
    }
    match d.verdict {
        Verdict::Exact { value } => text.push_str(&format!("TTr = {value}")),
        Verdict::Interval { lo, hi } => text.push_str(&format!("TTr in [{lo}, {hi}]")),
    }
    text.push_str(&format!(
        " ({})\n",
        serde_json::to_value(d.reason)?.as_str().unwrap_or("?")
    ));
    if let Some(z) = &d.condition_witnesses {
        let ids: Vec<String> = z.iter().map(usize::to_string).collect();
        text.push_str(&format!("z: {}\n", ids.join(" ")));
    }
    if let Some(w) = &d.witness {
        text.push_str(&format!("witness:\n{}", parts_text(w)));
    }
    let mut json = serde_json::to_value(&d)?;
    json.as_object_mut()
        .unwrap()
        .insert("command".into(), json!("bcg"));
    Ok(Outcome::ok(text, json))
}

fn formula(spec: &str) -> Result<Outcome> {
    let f = parse_family(spec)?;
    let ttr = ttr_formula(f)?;
    let tr = tr_formula(f).ok();
    let witness = formula_witness(f)?;
    let mut text = format!("{f}\nTTr = {ttr}\n");
    if let Some(tr) = tr {
        text.push_str(&format!("Tr = {tr}\n"));
    }
    text.push_str(&format!("witness:\n{}", parts_text(&witness)));
    let json = json!({ "command": "formula", "family": f.to_string(), "ttr": ttr, "tr": tr, "witness": witness });
    Ok(Outcome::ok(text, json))
}

fn gadget(base: &Graph, emit: bool, cfg: OracleConfig) -> Result<Outcome> {
    let gi = build_reduction(base)?;
    if emit {
        let json = json!({ "command": "gadget", "n": gi.gadget.n(), "edges": gi.gadget.edges().collect::<Vec<_>>() });
        return Ok(Outcome::ok(gi.gadget.to_edge_list(), json));
    }
    let mut text = format!(
        "base: n = {}, m = {}, max degree = {}\ngadget: n = {} (3n(Δ+1)+3 = {}), m = {} (with hub edges {}, without {})\nhubs: {} {} {}\n",
        base.n(),
        base.m(),
        gi.delta,
        gi.gadget.n(),
        gi.expected_vertex_count(),
        gi.gadget.m(),
        gi.expected_edge_count(),
        gi.stated_edge_count(),
        gi.hubs[0],
        gi.hubs[1],
        gi.hubs[2],
    );
    let mut lifted = Value::Null;
    if base.n() <= cfg.cap {
        let tr = transitivity_exact(base, cfg)?;
        let w = tr
            .witness
            .ok_or_else(|| anyhow!("no transitivity witness"))?;
        let p = lift_partition(&gi, &w)?;
        text.push_str(&format!(
            "base Tr = {}; lifted tournament partition of size {} verifies\n",
            tr.value,
            p.len()
        ));
        lifted = json!({ "base_tr": tr.value, "size": p.len(), "witness": p });
    }
    let json = json!({
        "command": "gadget",
        "base": { "n": base.n(), "m": base.m(), "max_degree": gi.delta },
        "gadget": { "n": gi.gadget.n(), "m": gi.gadget.m() },
        "expected_vertex_count": gi.expected_vertex_count(),
        "expected_edge_count": gi.expected_edge_count(),
        "edge_count_without_hub_edges": gi.stated_edge_count(),
        "hubs": gi.hubs,
        "lifted": lifted,
    });
    Ok(Outcome::ok(text, json))
}

fn gen(kind: &GenKind, seed: u64) -> Result<Outcome> {
    let mut rng = rng_from_seed(seed);
    let g = match *kind {
        GenKind::Family { ref spec } => parse_family(spec)?.generate()?,
        GenKind::Gnp { n, p } => {
            if n == 0 || !(0.0..=1.0).contains(&p) {
                bail!("need n >= 1 and 0 <= p <= 1");
            }
            random_graph(n, p, &mut rng)
        }
        GenKind::Bcg { n1, n2 } => {
            if n1 == 0 || n2 == 0 {
                bail!("both sides must be nonempty");
            }
            random_connected_bcg(n1, n2, &mut rng)
        }
    };
    let json = json!({ "command": "gen", "n": g.n(), "edges": g.edges().collect::<Vec<_>>() });
    Ok(Outcome::ok(g.to_edge_list(), json))
}

fn bounds(g: &Graph) -> Result<Outcome> {
    let (lower, upper) = bounds_ttr(g);
    let n = g.n();
    let (a, b, c) = (g.max_degree() + 1, n - g.min_degree(), n.div_ceil(2));
    let text = format!("lower: {lower}\nupper: {upper}\n  max degree + 1 = {a}\n  n - min degree = {b}\n  ceil(n/2) = {c}\n");
    let json = json!({
        "command": "bounds",
        "lower": lower,
        "upper": upper,
        "max_degree_plus_one": a,
        "n_minus_min_degree": b,
        "half_order": c,
    });
    Ok(Outcome::ok(text, json))
}
