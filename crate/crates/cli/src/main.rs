//! `lambdapack`: corpus generation, constructions, factor queries, claim
//! sweeps and lemma suites from the command line.

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lambdapack::claims::suites::{cut_case_suite, projection_suite, run_suite, SuiteId, SuiteReport, PROJECTION_FACTORS};
use lambdapack::claims::{corpus_claim_matrix, ClaimId, ClaimMatrix, ClaimOptions, QueryBudget, Verdict};
use lambdapack::constructions::{base_graph, Recipe};
use lambdapack::corpus::{export, generate_cubic, ingest, CorpusSource, CorpusSpec, GraphFormat, MAX_GENERATED_ORDER};
use lambdapack::packing::{
    enumerate_lambda_factors_limited, find_lambda_factor_limited, max_lambda_packing, FactorConstraint, FactorSearch,
};
use lambdapack::{Edge, Graph};

const EXIT_FAILS: u8 = 2;
const EXIT_SKIPPED: u8 = 3;

#[derive(Parser)]
#[command(name = "lambdapack", version, about = "Exact Λ-packing in cubic graphs")]
struct Cli {
    /// Worker threads for corpus sweeps (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Connected cubic graphs, one class per line.
    Gen(GenArgs),
    /// Build a graph from a JSON recipe.
    Construct(ConstructArgs),
    /// Maximum Λ-packing.
    Solve(SolveArgs),
    /// Constrained Λ-factor query.
    Factor(FactorArgs),
    /// Claim matrix over a corpus.
    Claims(ClaimsArgs),
    /// Structural checks on built instances.
    Lemmas(LemmasArgs),
    /// Merge JSON outputs of `claims` and `lemmas`.
    Report(ReportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Single order.
    #[arg(long, conflicts_with = "n_max")]
    n: Option<usize>,
    /// All even orders from 4 up to this one.
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    three_connected: bool,
    /// Every labelling the generator visits, without isomorphism dedup.
    #[arg(long)]
    raw: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// Recipe file, `-` for stdin, or inline JSON.
    recipe: String,
}

#[derive(Args, Clone)]
struct GraphArgs {
    /// Graph in graph6.
    #[arg(long, group = "source")]
    graph: Option<String>,
    /// Named base graph (K4, prism, K33, cube, petersen, Y_base, Z_base).
    #[arg(long, group = "source")]
    base: Option<String>,
    /// Recipe file or inline JSON.
    #[arg(long, group = "source")]
    recipe: Option<String>,
    /// First graph of a graph6 or edge-list file.
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    #[arg(long, default_value = "graph6")]
    input_format: InputFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
}

#[derive(Args)]
struct FactorArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Vertices to delete, e.g. `0,4,5`.
    #[arg(long, value_delimiter = ',')]
    remove: Vec<usize>,
    /// Edges no path may use, e.g. `0-1,2-3`.
    #[arg(long, value_delimiter = ',')]
    forbid: Vec<String>,
    /// Edges every factor must use.
    #[arg(long, value_delimiter = ',')]
    require: Vec<String>,
    /// List factors instead of finding one.
    #[arg(long)]
    all: bool,
    /// Cap on listed factors.
    #[arg(long, default_value_t = 1000)]
    enum_limit: usize,
    /// Wall-clock budget for the search.
    #[arg(long)]
    budget_ms: Option<u64>,
}

#[derive(Args)]
struct ClaimsArgs {
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    n_min: usize,
    /// Only 3-connected graphs; otherwise others appear as refused rows.
    #[arg(long)]
    three_connected: bool,
    /// Graph6 corpus instead of generation (orders n_min..=n_max kept).
    #[arg(long)]
    input: Option<PathBuf>,
    /// `all`, a family letter, or a list like `z1,z8,f1`.
    #[arg(long, default_value = "all")]
    claims: String,
    /// Per inner factor query.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Per inner factor query, in search nodes (deterministic).
    #[arg(long)]
    budget_nodes: Option<u64>,
    /// Where a failing run writes its witnesses.
    #[arg(long, default_value = "witness.json")]
    witness: PathBuf,
}

#[derive(Args)]
struct LemmasArgs {
    /// `all` or a list of suite names.
    #[arg(long, default_value = "all")]
    suites: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random splices in the cut-case suite.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Factors of the 78-vertex composite to check in the projection suite.
    #[arg(long, default_value_t = PROJECTION_FACTORS)]
    enum_limit: usize,
    /// Time budget for each projection-suite search.
    #[arg(long, default_value_t = 600_000)]
    budget_ms: u64,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(required = true)]
    files: Vec<PathBuf>,
}

/// What a command produced and how it should exit.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
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
            if let Err(e) = emit(&cli.out, &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Output> {
    if let Some(w) = cli.workers {
        if w == 0 {
            bail!("--workers must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(w).build_global()?;
    }
    let fmt = |default: Format, allowed: &[Format], cmd: &str| -> Result<Format> {
        let f = cli.format.unwrap_or(default);
        if !allowed.contains(&f) {
            bail!("{cmd} does not support --format {f:?}");
        }
        Ok(f)
    };
    match &cli.command {
        Command::Gen(a) => gen(a, fmt(Format::Graph6, &[Format::Graph6, Format::Json, Format::Table], "gen")?),
        Command::Construct(a) => construct(a, fmt(Format::Graph6, &[Format::Graph6, Format::Json], "construct")?),
        Command::Solve(a) => solve(a, fmt(Format::Table, &[Format::Table, Format::Json], "solve")?),
        Command::Factor(a) => factor(a, fmt(Format::Table, &[Format::Table, Format::Json], "factor")?),
        Command::Claims(a) => claims(a, &cli.out, fmt(Format::Table, &[Format::Table, Format::Json], "claims")?),
        Command::Lemmas(a) => lemmas(a, fmt(Format::Table, &[Format::Table, Format::Json], "lemmas")?),
        Command::Report(a) => report(a, fmt(Format::Table, &[Format::Table, Format::Json], "report")?),
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn orders(n: Option<usize>, n_max: Option<usize>) -> Result<Vec<usize>> {
    match (n, n_max) {
        (Some(n), _) => Ok(vec![n]),
        (None, Some(m)) => {
            if m > MAX_GENERATED_ORDER {
                bail!("--n-max {m} is above the generation limit {MAX_GENERATED_ORDER}");
            }
            Ok((4..=m).step_by(2).collect())
        }
        (None, None) => bail!("give --n or --n-max"),
    }
}

fn gen(a: &GenArgs, f: Format) -> Result<Output> {
    let mut rows = Vec::new();
    for n in orders(a.n, a.n_max)? {
        let mut graphs = generate_cubic(n, !a.raw)?;
        if a.three_connected {
            graphs.retain(lambdapack::connectivity::is_three_connected);
        }
        rows.push((n, graphs));
    }
    Ok(Output::ok(match f {
        Format::Graph6 => rows.iter().map(|(_, gs)| export(gs, GraphFormat::Graph6)).collect(),
        Format::Json => json_text(&Value::Array(
            rows.iter()
                .map(|(n, gs)| json!({ "n": n, "count": gs.len(), "graphs": gs.iter().map(Graph::to_graph6).collect::<Vec<_>>() }))
                .collect(),
        )),
        Format::Table => {
            let mut s = format!("{:>4}{:>10}\n", "n", "graphs");
            for (n, gs) in &rows {
                s += &format!("{n:>4}{:>10}\n", gs.len());
            }
            s
        }
    }))
}

fn read_text(arg: &str) -> Result<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

fn construct(a: &ConstructArgs, f: Format) -> Result<Output> {
    let recipe = Recipe::from_json(&read_text(&a.recipe)?)?;
    let built = recipe.build()?;
    let g6 = built.graph.to_graph6();
    Ok(Output::ok(match f {
        Format::Json => json_text(&json!({ "graph6": g6, "n": built.graph.n(), "graph": built.graph, "meta": built.meta })),
        _ => format!("{g6}\n{}\n", serde_json::to_string(&built.meta)?),
    }))
}

fn load_graph(a: &GraphArgs) -> Result<Graph> {
    if let Some(s) = &a.graph {
        return Ok(Graph::from_graph6(s)?);
    }
    if let Some(name) = &a.base {
        return Ok(base_graph(name)?);
    }
    if let Some(r) = &a.recipe {
        return Ok(Recipe::from_json(&read_text(r)?)?.build()?.graph);
    }
    if let Some(p) = &a.input {
        let fmt = match a.input_format {
            InputFormat::Graph6 => GraphFormat::Graph6,
            InputFormat::EdgeList => GraphFormat::EdgeList,
        };
        let got = ingest(p, fmt)?;
        if let Some((_, g)) = got.graphs.into_iter().next() {
            return Ok(g);
        }
        let why = got.diagnostics.first().map(|d| format!(" (line {}: {})", d.line, d.message)).unwrap_or_default();
        bail!("{} holds no readable graph{why}", p.display());
    }
    bail!("give one of --graph, --base, --recipe, --input")
}

fn solve(a: &SolveArgs, f: Format) -> Result<Output> {
    let g = load_graph(&a.graph)?;
    let p = max_lambda_packing(&g);
    let full = p.len() == g.n() / 3;
    Ok(Output::ok(match f {
        Format::Json => json_text(&json!({
            "graph6": g.to_graph6(),
            "n": g.n(),
            "lambda": p.len(),
            "lambda_full": full,
            "packing": p,
        })),
        _ => format!("λ={}\nn={}\nfull={full}\npacking={p}\n", p.len(), g.n()),
    }))
}

fn parse_edge(s: &str) -> Result<Edge> {
    let (a, b) = s.split_once('-').ok_or_else(|| anyhow!("edge {s:?} is not of the form u-v"))?;
    let (a, b) = (a.trim().parse()?, b.trim().parse()?);
    Edge::new(a, b).ok_or_else(|| anyhow!("edge {s:?} is a loop"))
}

fn factor(a: &FactorArgs, f: Format) -> Result<Output> {
    let g = load_graph(&a.graph)?;
    let c = FactorConstraint::removing(a.remove.iter().copied())
        .forbid(a.forbid.iter().map(|s| parse_edge(s)).collect::<Result<Vec<_>>>()?)
        .require(a.require.iter().map(|s| parse_edge(s)).collect::<Result<Vec<_>>>()?);
    let limits = a.budget_ms.map(QueryBudget::millis).unwrap_or_else(QueryBudget::unlimited).limits();
    let base = json!({ "graph6": g.to_graph6(), "constraint": c });
    let (result, code) = if a.all {
        let e = enumerate_lambda_factors_limited(&g, &c, a.enum_limit, limits)?;
        let capped = !e.complete && e.factors.len() >= a.enum_limit;
        let status = if e.complete { "complete" } else if capped { "capped" } else { "exhausted" };
        let code = if e.complete || capped { 0 } else { EXIT_SKIPPED };
        (json!({ "status": status, "count": e.factors.len(), "factors": e.factors }), code)
    } else {
        match find_lambda_factor_limited(&g, &c, limits)? {
            FactorSearch::Found(p) => (json!({ "status": "found", "factor": p }), 0),
            FactorSearch::NoFactor => (json!({ "status": "no_factor" }), 0),
            FactorSearch::Exhausted { nodes } => (json!({ "status": "exhausted", "nodes": nodes }), EXIT_SKIPPED),
        }
    };
    let mut v = base;
    v.as_object_mut().expect("object").extend(result.as_object().expect("object").clone());
    let text = match f {
        Format::Json => json_text(&v),
        _ => {
            let mut s = format!("status={}\n", v["status"].as_str().unwrap_or(""));
            if let Some(p) = v.get("factor") {
                s += &format!("factor={p}\n");
            }
            if let Some(fs) = v.get("factors").and_then(Value::as_array) {
                s += &format!("count={}\n", fs.len());
                for p in fs {
                    s += &format!("{p}\n");
                }
            }
            s
        }
    };
    Ok(Output { text, code })
}

fn claim_options(a: &ClaimsArgs) -> Result<ClaimOptions> {
    let budget = match (a.budget_ms, a.budget_nodes) {
        (Some(0), _) => bail!("--budget-ms must be positive"),
        (_, Some(0)) => bail!("--budget-nodes must be positive"),
        (time, nodes) => QueryBudget { time: time.map(Duration::from_millis), nodes },
    };
    Ok(ClaimOptions { budget, ..ClaimOptions::default() })
}

fn matrix_exit(m: &ClaimMatrix) -> u8 {
    if m.has_fails() {
        EXIT_FAILS
    } else if m.has_skipped() {
        EXIT_SKIPPED
    } else {
        0
    }
}

fn witness_value(m: &ClaimMatrix) -> Value {
    Value::Array(m.fails().map(|r| serde_json::to_value(r).expect("json")).collect())
}

fn claims(a: &ClaimsArgs, out: &Option<PathBuf>, f: Format) -> Result<Output> {
    let ids = ClaimId::parse_set(&a.claims)?;
    let options = claim_options(a)?;
    if a.n_min > a.n_max {
        bail!("--n-min {} is above --n-max {}", a.n_min, a.n_max);
    }
    let mut parts = Vec::new();
    match &a.input {
        Some(p) => {
            let spec = CorpusSpec { n: 0, require_3connected: a.three_connected, dedup: true, source: CorpusSource::Graph6File(p.clone()) };
            let mut m = corpus_claim_matrix(&spec, &ids, &options)?;
            let keep: Vec<String> =
                m.graphs.iter().filter(|g| (a.n_min..=a.n_max).contains(&g.n)).map(|g| g.graph.clone()).collect();
            m.graphs.retain(|g| keep.contains(&g.graph));
            m.reports.retain(|r| keep.contains(&r.graph));
            parts.push(m);
        }
        None => {
            if a.n_max > MAX_GENERATED_ORDER {
                bail!("--n-max {} is above the generation limit {MAX_GENERATED_ORDER}", a.n_max);
            }
            for n in (a.n_min.max(4)..=a.n_max).filter(|n| n % 2 == 0) {
                let mut spec = CorpusSpec::generated(n);
                spec.require_3connected = a.three_connected;
                parts.push(corpus_claim_matrix(&spec, &ids, &options)?);
            }
        }
    }
    let m = ClaimMatrix::merge(parts);
    let code = matrix_exit(&m);
    if m.has_fails() {
        let path = if out.as_deref() == Some(a.witness.as_path()) { a.witness.with_extension("witness.json") } else { a.witness.clone() };
        fs::write(&path, json_text(&witness_value(&m))).with_context(|| format!("writing {}", path.display()))?;
        eprintln!("claim failures written to {}", path.display());
    }
    let text = match f {
        Format::Json => json_text(&serde_json::to_value(&m)?),
        _ => m.to_table(),
    };
    Ok(Output { text, code })
}

fn parse_suites(text: &str) -> Result<Vec<SuiteId>> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(SuiteId::ALL.to_vec());
    }
    let mut ids = text.split(',').map(|s| s.parse::<SuiteId>().map_err(|e| anyhow!(e))).collect::<Result<Vec<_>>>()?;
    ids.sort();
    ids.dedup();
    Ok(ids)
}

fn suites_table(reports: &[SuiteReport]) -> String {
    let mut s = String::new();
    for r in reports {
        s += &format!("{} {}\n", if r.passed() { "PASS" } else { "FAIL" }, r.suite);
        for c in &r.checks {
            s += &format!("  {} {}\n", if c.passed { "ok  " } else { "FAIL" }, c.name);
            if !c.passed {
                s += &format!("       {}\n", c.detail);
            }
        }
        for n in &r.notes {
            s += &format!("  note: {n}\n");
        }
    }
    s
}

fn lemmas(a: &LemmasArgs, f: Format) -> Result<Output> {
    let mut reports = Vec::new();
    for id in parse_suites(&a.suites)? {
        reports.push(match id {
            SuiteId::CutCases => cut_case_suite(a.samples, a.seed)?,
            SuiteId::Projection => projection_suite(a.enum_limit, Duration::from_millis(a.budget_ms))?,
            other => run_suite(other, a.seed)?,
        });
    }
    let code = if reports.iter().all(SuiteReport::passed) { 0 } else { EXIT_FAILS };
    let text = match f {
        Format::Json => json_text(&json!({ "suites": reports })),
        _ => suites_table(&reports),
    };
    Ok(Output { text, code })
}

fn read_json(p: &Path) -> Result<Value> {
    let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))
}

fn report(a: &ReportArgs, f: Format) -> Result<Output> {
    let mut matrices = Vec::new();
    let mut suites: Vec<SuiteReport> = Vec::new();
    for p in &a.files {
        let v = read_json(p)?;
        if let Some(s) = v.get("suites") {
            suites.extend(serde_json::from_value::<Vec<SuiteReport>>(s.clone()).with_context(|| format!("suites in {}", p.display()))?);
        } else if v.get("reports").is_some() {
            matrices.push(serde_json::from_value::<ClaimMatrix>(v).with_context(|| format!("claim matrix in {}", p.display()))?);
        } else {
            bail!("{} is neither a claims nor a lemmas output", p.display());
        }
    }
    suites.sort_by_key(|s| s.suite);
    let m = ClaimMatrix::merge(matrices);
    let suites_ok = suites.iter().all(SuiteReport::passed);
    let code = if !suites_ok { EXIT_FAILS } else { matrix_exit(&m) };
    let skipped = m.reports.iter().filter(|r| r.verdict == Verdict::Skipped).count();
    let text = match f {
        Format::Json => json_text(&json!({ "matrix": m, "suites": suites })),
        _ => {
            let mut s = m.to_table();
            s += &format!("fails: {}  skipped: {skipped}\n", m.fails().count());
            s += &suites_table(&suites);
            s
        }
    };
    Ok(Output { text, code })
}
