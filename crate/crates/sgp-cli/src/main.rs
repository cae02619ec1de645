//! `sgp` — exact Steiner general position invariants from the command line.
//!
//! Three subcommands: `compute` evaluates an invariant on a graph file or a
//! family spec, `verify` runs a named verification suite, and `generate`
//! writes family graphs as edge-list files with a JSON sidecar.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a search
//! budget truncated the result (the printed value is then a certified lower
//! bound, never silently wrong).

mod cache;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sgp_core::{
    cartesian_grid, parse_graph_spec, subdivided_wheel, Budget, Distance, Exactness, Graph,
    InvariantResult, SuiteConfig, SuiteName, VertexSet,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "sgp",
    version,
    about = "Exact Steiner general position invariants of finite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant of a graph
    Compute(ComputeArgs),
    /// Run a verification suite and report per-case verdicts
    Verify(VerifyArgs),
    /// Generate a graph as an edge-list file plus a JSON sidecar
    Generate(GenerateArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file: header "n m", then one "u v" line per edge;
    /// blank lines and #-comments are ignored
    graph: Option<PathBuf>,

    /// Family spec instead of a file, e.g. cycle:10, wheel:7,
    /// complete_bipartite:3,4, tree:2,2,3, grid:2, counterexample:3,
    /// join:complete:1/cycle:6, lex:cycle:5/complete:2
    #[arg(long, conflicts_with = "graph")]
    family: Option<String>,

    /// Which invariant to compute
    #[arg(long, value_enum)]
    what: What,

    /// Parameter k (required for sgp, somega, sjc, sgp-interval)
    #[arg(long)]
    k: Option<usize>,

    /// Upper end of the interval (sgp-interval only)
    #[arg(long)]
    l: Option<usize>,

    /// Comma-separated terminal ids (steiner only)
    #[arg(long)]
    terminals: Option<String>,

    /// Stop the search after this many membership checks
    #[arg(long)]
    budget_nodes: Option<u64>,

    /// Stop the search after this many seconds of wall time
    #[arg(long)]
    budget_secs: Option<u64>,

    /// Largest graph order the exponential searches accept
    #[arg(long, default_value_t = 64)]
    max_n: usize,

    /// Emit the result as JSON on stdout
    #[arg(long)]
    json: bool,

    /// Skip the results cache entirely
    #[arg(long)]
    no_cache: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Sgp,
    Somega,
    Sjc,
    Gp,
    SgpInterval,
    Steiner,
}

impl What {
    fn name(self) -> &'static str {
        match self {
            What::Sgp => "sgp",
            What::Somega => "somega",
            What::Sjc => "sjc",
            What::Gp => "gp",
            What::SgpInterval => "sgp-interval",
            What::Steiner => "steiner",
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name (cycles, trees, joins, corollary44, sjc, lexicographic,
    /// split, grid, figure1, remark21, prop22, steiner-oracle,
    /// monotonicity) or "all"
    #[arg(long)]
    suite: String,

    /// Cap instance sizes where the suite ranges over them
    #[arg(long)]
    max_n: Option<usize>,

    /// Seed for the randomized corpora (fixed default, never wall-clock)
    #[arg(long)]
    seed: Option<u64>,

    /// Restrict the grid suite to one k
    #[arg(long)]
    k: Option<usize>,

    /// Emit the report as JSON on stdout instead of the text table
    #[arg(long)]
    json: bool,

    /// Also write the JSON report to this path
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family spec (same grammar as compute --family)
    #[arg(long)]
    family: Option<String>,

    /// The subdivided-wheel counterexample graph for this k
    #[arg(long, conflicts_with = "family")]
    counterexample: Option<usize>,

    /// Grid window of this radius
    #[arg(long, conflicts_with_all = ["family", "counterexample"])]
    grid: Option<usize>,

    /// Output path for the edge list; the sidecar goes to `<out>.json`
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
        Command::Generate(args) => generate(args),
    }
}

// ---------------------------------------------------------------------------
// compute

fn load_graph(args: &ComputeArgs) -> Result<Graph> {
    match (&args.graph, &args.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Graph::parse_edge_list(&text)
                .map_err(|e| anyhow!("{}: {e}", path.display()))
        }
        (None, Some(spec)) => Ok(parse_graph_spec(spec)?),
        (None, None) => bail!("provide a graph file or --family"),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    }
}

fn parse_terminals(text: &str) -> Result<VertexSet> {
    let ids: Vec<u32> = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .context("terminals must be comma-separated vertex ids")?;
    Ok(VertexSet::new(ids)?)
}

fn compute(args: ComputeArgs) -> Result<ExitCode> {
    let graph = load_graph(&args)?;
    let budget = Budget {
        max_n: args.max_n,
        max_nodes: args.budget_nodes,
        max_millis: args.budget_secs.map(|s| s * 1000),
    };

    let need_k = matches!(args.what, What::Sgp | What::Somega | What::Sjc | What::SgpInterval);
    if need_k && args.k.is_none() {
        bail!("--what {} requires --k", args.what.name());
    }
    if !need_k && args.k.is_some() {
        bail!("--k is not valid for --what {}", args.what.name());
    }
    if args.what == What::SgpInterval && args.l.is_none() {
        bail!("--what sgp-interval requires --l");
    }
    if (args.what == What::Steiner) != args.terminals.is_some() {
        bail!("--terminals is required for --what steiner and only valid there");
    }
    if args.what != What::SgpInterval && args.l.is_some() {
        bail!("--l is only valid for --what sgp-interval");
    }

    let edge_text = graph.to_edge_list();
    let hash = hex_sha256(edge_text.as_bytes());
    let mut params = json!({});
    if let Some(k) = args.k {
        params["k"] = json!(k);
    }
    if let Some(l) = args.l {
        params["l"] = json!(l);
    }
    let terminals = args
        .terminals
        .as_deref()
        .map(parse_terminals)
        .transpose()?;
    if let Some(t) = &terminals {
        params["terminals"] = json!(t.as_slice());
    }

    if !args.no_cache {
        if let Some(record) = cache::lookup(&hash, args.what.name(), &params) {
            let witness = VertexSet::new(record.witness.clone())?;
            emit(
                &args,
                &graph,
                &hash,
                &params,
                record.value.clone(),
                &witness,
                Exactness::Exact,
                json!({ "nodes": 0, "ms": 0, "truncated": false }),
                true,
            )?;
            return Ok(ExitCode::SUCCESS);
        }
    }

    let (value, witness, exactness, stats) = match args.what {
        What::Steiner => {
            let t = terminals.as_ref().expect("validated above");
            let d = sgp_core::steiner_distance(&graph, t)?;
            let value = match d {
                Distance::Finite(x) => json!(x),
                Distance::Infinite => Value::Null,
            };
            (
                value,
                VertexSet::empty(),
                Exactness::Exact,
                json!({ "nodes": 0, "ms": 0, "truncated": false }),
            )
        }
        What::Sgp => invariant_parts(sgp_core::sgp(&graph, args.k.unwrap(), &budget)?),
        What::Somega => invariant_parts(sgp_core::somega(&graph, args.k.unwrap())?),
        What::Sjc => invariant_parts(sgp_core::sjc(&graph, args.k.unwrap())?),
        What::Gp => invariant_parts(sgp_core::gp(&graph, &budget)?),
        What::SgpInterval => invariant_parts(sgp_core::sgp_interval(
            &graph,
            args.k.unwrap(),
            args.l.unwrap(),
            &budget,
        )?),
    };

    let truncated = exactness == Exactness::LowerBound;
    if !args.no_cache && !truncated {
        let record = cache::ResultRecord {
            hash: hash.clone(),
            operation: args.what.name().to_string(),
            params: params.clone(),
            value: value.clone(),
            witness: witness.iter().collect(),
            timestamp_secs: cache::now_secs(),
            version: env!("CARGO_PKG_VERSION").to_string(),
        };
        if let Err(err) = cache::append(&record) {
            eprintln!("warning: could not write cache record: {err:#}");
        }
    }

    emit(
        &args, &graph, &hash, &params, value, &witness, exactness, stats, false,
    )?;
    Ok(if truncated {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn invariant_parts(r: InvariantResult) -> (Value, VertexSet, Exactness, Value) {
    (
        json!(r.value),
        r.witness,
        r.exactness,
        json!({
            "nodes": r.stats.nodes,
            "ms": r.stats.millis,
            "truncated": r.stats.truncated,
        }),
    )
}

#[allow(clippy::too_many_arguments)]
fn emit(
    args: &ComputeArgs,
    graph: &Graph,
    hash: &str,
    params: &Value,
    value: Value,
    witness: &VertexSet,
    exactness: Exactness,
    stats: Value,
    cache_hit: bool,
) -> Result<()> {
    let witness_labels: Option<Vec<String>> = {
        let labels: Vec<Option<&str>> = witness.iter().map(|v| graph.label(v)).collect();
        if !labels.is_empty() && labels.iter().all(Option::is_some) {
            Some(labels.into_iter().map(|l| l.unwrap().to_string()).collect())
        } else {
            None
        }
    };
    let kind = match exactness {
        Exactness::Exact => "exact",
        Exactness::LowerBound => "lower_bound",
    };
    if args.json {
        let out = json!({
            "operation": args.what.name(),
            "graph": { "n": graph.n(), "m": graph.m(), "hash": hash },
            "params": params,
            "value": value,
            "kind": kind,
            "witness": witness.as_slice(),
            "witness_labels": witness_labels,
            "stats": stats,
            "cache_hit": cache_hit,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        let shown = if value.is_null() {
            "inf".to_string()
        } else {
            value.to_string()
        };
        let mut line = format!("{} = {shown}", args.what.name());
        if kind == "lower_bound" {
            line.push_str(" (lower bound: budget exhausted)");
        }
        if cache_hit {
            line.push_str(" (cached)");
        }
        println!("{line}");
        if !witness.is_empty() {
            let ids: Vec<String> = witness.iter().map(|v| v.to_string()).collect();
            match witness_labels {
                Some(labels) => println!("witness: {{{}}} = {{{}}}", ids.join(", "), labels.join(", ")),
                None => println!("witness: {{{}}}", ids.join(", ")),
            }
        }
    }
    Ok(())
}

fn hex_sha256(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

// ---------------------------------------------------------------------------
// verify

fn verify(args: VerifyArgs) -> Result<ExitCode> {
    let config = SuiteConfig {
        max_n: args.max_n,
        seed: args.seed.unwrap_or(sgp_core::DEFAULT_SEED),
        k: args.k,
    };
    let suites: Vec<SuiteName> = if args.suite == "all" {
        SuiteName::all().to_vec()
    } else {
        vec![args.suite.parse()?]
    };
    let mut all_passed = true;
    let mut reports = Vec::new();
    for suite in suites {
        let report = sgp_core::run_suite(suite, &config)?;
        all_passed &= report.passed();
        if !args.json {
            print!("{}", report.text_table());
        }
        reports.push(report);
    }
    let payload = if reports.len() == 1 {
        serde_json::to_value(&reports[0])?
    } else {
        serde_json::to_value(&reports)?
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&payload)?);
    }
    if let Some(path) = args.report {
        std::fs::write(&path, serde_json::to_string_pretty(&payload)?)
            .with_context(|| format!("writing report to {}", path.display()))?;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------------------
// generate

fn generate(args: GenerateArgs) -> Result<ExitCode> {
    let (graph, coordinates) = match (&args.family, args.counterexample, args.grid) {
        (Some(spec), None, None) => (parse_graph_spec(spec)?, None),
        (None, Some(k), None) => (subdivided_wheel(k)?, None),
        (None, None, Some(radius)) => {
            let (g, spec) = cartesian_grid(radius)?;
            let coords: Vec<(i64, i64)> = (0..g.n() as u32).map(|v| spec.coord(v)).collect();
            (g, Some(coords))
        }
        _ => bail!("provide exactly one of --family, --counterexample, --grid"),
    };
    std::fs::write(&args.out, graph.to_edge_list())
        .with_context(|| format!("writing {}", args.out.display()))?;
    let sidecar = json!({
        "n": graph.n(),
        "m": graph.m(),
        "provenance": graph.provenance(),
        "labels": graph.labels(),
        "coordinates": coordinates,
    });
    let sidecar_path = sidecar_path(&args.out);
    std::fs::write(&sidecar_path, serde_json::to_string_pretty(&sidecar)?)
        .with_context(|| format!("writing {}", sidecar_path.display()))?;
    println!(
        "wrote {} ({} vertices, {} edges) and {}",
        args.out.display(),
        graph.n(),
        graph.m(),
        sidecar_path.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn sidecar_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}
