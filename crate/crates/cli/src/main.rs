//! `holeminer`: mine blackhole and volcano patterns from directed graphs on
//! disk, inspect the pruning funnel, build stock-correlation graphs, and
//! race the mining algorithms against each other.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 search-space guard
//! refusal, 3 algorithm disagreement detected by `bench`.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use holeminer_core::graph::{load_edge_list, DirectedGraph, LoadReport};
use holeminer_core::mine::{mine, Algorithm, MiningConfig, PatternResult, DEFAULT_GUARD_LIMIT};
use holeminer_core::pattern::PatternKind;
use holeminer_core::prune::{prune_stats, PruneReport};
use holeminer_core::stock::{build_stock_graph, build_stock_graph_raw, load_prices};
use holeminer_core::Error as CoreError;

const GUARD_LIMIT_ENV: &str = "HOLEMINER_GUARD_LIMIT";

#[derive(Parser)]
#[command(
    name = "holeminer",
    version,
    about = "Mine blackhole and volcano patterns in directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Mine patterns from an edge-list file and report them
    Detect(DetectArgs),
    /// Report the pruning funnel per pattern size
    PruneStats(PruneStatsArgs),
    /// Build a lagged-correlation graph from a price CSV
    StockGraph(StockGraphArgs),
    /// Time the mining algorithms against each other on one graph
    Bench(BenchArgs),
    /// Print a structural summary of a graph
    Stats(StatsArgs),
}

#[derive(clap::Args)]
struct DetectArgs {
    /// Edge-list file (`src dst [weight]` lines, `v label` for isolated nodes)
    input: PathBuf,
    /// Largest pattern size to mine, starting from 1
    #[arg(short = 'n', long, default_value_t = 3)]
    max_size: usize,
    /// Which pattern to mine
    #[arg(short, long, value_enum, default_value_t = PatternArg::Blackhole)]
    pattern: PatternArg,
    /// Mining algorithm
    #[arg(short, long, value_enum, default_value_t = AlgorithmArg::IblackholeDc)]
    algorithm: AlgorithmArg,
    /// Search weak components in parallel (iblackhole-dc only)
    #[arg(long)]
    parallel: bool,
    /// Refuse any size level that would enumerate more candidate sets than
    /// this (overrides the HOLEMINER_GUARD_LIMIT environment variable)
    #[arg(long)]
    guard_limit: Option<u64>,
    /// Report format
    #[arg(short, long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report to this file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct PruneStatsArgs {
    /// Edge-list file
    input: PathBuf,
    /// Report funnels for sizes 1 through this
    #[arg(short = 'n', long, default_value_t = 3)]
    max_size: usize,
    /// Report format
    #[arg(short, long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report to this file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct StockGraphArgs {
    /// Price CSV: header `ticker,<day>,...`, one row per instrument
    input: PathBuf,
    /// Correlation threshold an edge must exceed
    #[arg(short, long, default_value_t = 0.35)]
    theta: f64,
    /// Lag in days between leader and follower
    #[arg(short, long, default_value_t = 1)]
    lag: usize,
    /// Correlate raw prices instead of daily movement directions
    #[arg(long)]
    raw_prices: bool,
    /// Write the edge list to this file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Edge-list file
    input: PathBuf,
    /// Largest pattern size to mine
    #[arg(short = 'n', long, default_value_t = 4)]
    max_size: usize,
    /// Which pattern to mine
    #[arg(short, long, value_enum, default_value_t = PatternArg::Blackhole)]
    pattern: PatternArg,
    /// Algorithms to race, comma separated
    #[arg(
        short,
        long,
        value_enum,
        value_delimiter = ',',
        default_values_t = [AlgorithmArg::Brute, AlgorithmArg::Iblackhole, AlgorithmArg::IblackholeDc]
    )]
    algorithms: Vec<AlgorithmArg>,
    /// Timed runs per algorithm; the reported time is the median
    #[arg(short, long, default_value_t = 3)]
    repeats: usize,
    /// Per-level candidate-set ceiling (overrides HOLEMINER_GUARD_LIMIT)
    #[arg(long)]
    guard_limit: Option<u64>,
    /// Write the CSV to this file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct StatsArgs {
    /// Edge-list file
    input: PathBuf,
    /// Write the report to this file instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    Brute,
    Iblackhole,
    IblackholeDc,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Algorithm {
        match a {
            AlgorithmArg::Brute => Algorithm::BruteForce,
            AlgorithmArg::Iblackhole => Algorithm::IBlackhole,
            AlgorithmArg::IblackholeDc => Algorithm::IBlackholeDc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PatternArg {
    Blackhole,
    Volcano,
}

impl From<PatternArg> for PatternKind {
    fn from(p: PatternArg) -> PatternKind {
        match p {
            PatternArg::Blackhole => PatternKind::Blackhole,
            PatternArg::Volcano => PatternKind::Volcano,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Core(CoreError),
    Io { path: PathBuf, source: std::io::Error },
    Tripwire(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::SearchSpaceTooLarge { .. }) => 2,
            CliError::Tripwire(_) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Tripwire(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Detect(args) => cmd_detect(args),
        Command::PruneStats(args) => cmd_prune_stats(args),
        Command::StockGraph(args) => cmd_stock_graph(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Stats(args) => cmd_stats(args),
    }
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    nodes: usize,
    edges: usize,
}

#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    algorithm: String,
    pattern: String,
    max_size: usize,
    input: InputDigest,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<String>,
    pattern_counts: BTreeMap<usize, usize>,
    patterns: BTreeMap<usize, Vec<Vec<String>>>,
    timings_ms: BTreeMap<usize, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    prune: Option<Vec<holeminer_core::prune::PruneStats>>,
}

fn cmd_detect(args: DetectArgs) -> Result<(), CliError> {
    let (graph, load_report) = open_graph(&args.input)?;
    let mut config = MiningConfig::new(
        args.algorithm.into(),
        args.pattern.into(),
        args.max_size,
    );
    config.parallel = args.parallel;
    config.guard_limit = resolve_guard_limit(args.guard_limit)?;

    let result = mine(&graph, &config)?;
    for (&size, sets) in &result.patterns_by_size {
        eprintln!(
            "size {size}: {} pattern(s) in {:.2} ms",
            sets.len(),
            result.timings_ms[&size]
        );
    }

    let patterns = patterns_as_labels(&graph, &result);
    let report = RunReport {
        command: "detect",
        algorithm: result.algorithm.to_string(),
        pattern: result.kind.to_string(),
        max_size: result.max_size,
        input: digest(&args.input, &graph),
        warnings: load_warnings(&load_report),
        pattern_counts: result
            .patterns_by_size
            .iter()
            .map(|(&size, sets)| (size, sets.len()))
            .collect(),
        patterns,
        timings_ms: result.timings_ms.clone(),
        prune: result.prune_stats.clone(),
    };

    let rendered = match args.format {
        FormatArg::Json => to_pretty_json(&report)?,
        FormatArg::Csv => patterns_csv(&report.patterns),
    };
    write_output(args.output.as_deref(), &rendered)
}

fn cmd_prune_stats(args: PruneStatsArgs) -> Result<(), CliError> {
    let (graph, load_report) = open_graph(&args.input)?;
    if args.max_size == 0 {
        return Err(CliError::Usage("--max-size must be at least 1".into()));
    }
    let levels: Vec<PruneReport> = (1..=args.max_size)
        .map(|size| prune_stats(&graph, size))
        .collect::<Result<_, _>>()?;

    let rendered = match args.format {
        FormatArg::Json => {
            #[derive(Serialize)]
            struct PruneRunReport {
                command: &'static str,
                input: InputDigest,
                #[serde(skip_serializing_if = "Vec::is_empty")]
                warnings: Vec<String>,
                levels: Vec<PruneReport>,
            }
            to_pretty_json(&PruneRunReport {
                command: "prune-stats",
                input: digest(&args.input, &graph),
                warnings: load_warnings(&load_report),
                levels,
            })?
        }
        FormatArg::Csv => {
            let mut out = String::from(
                "size,potential,candidates,finals,removed_escaping,\
                 removed_closure_overflow,removed_emitted,emitted,nodes,edges,components\n",
            );
            for r in &levels {
                let s = r.stats;
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{},{}\n",
                    s.size,
                    s.potential,
                    s.candidates,
                    s.finals,
                    s.removed_escaping,
                    s.removed_closure_overflow,
                    s.removed_emitted,
                    s.emitted,
                    r.nodes,
                    r.edges,
                    r.components
                ));
            }
            out
        }
    };
    write_output(args.output.as_deref(), &rendered)
}

fn cmd_stock_graph(args: StockGraphArgs) -> Result<(), CliError> {
    let file = File::open(&args.input).map_err(|e| CliError::Io {
        path: args.input.clone(),
        source: e,
    })?;
    let load = load_prices(BufReader::new(file))?;
    for r in &load.rejected {
        eprintln!("warning: skipped row {} ({}): {}", r.row, r.ticker, r.reason);
    }
    let graph = if args.raw_prices {
        build_stock_graph_raw(&load.matrix, args.theta, args.lag)?
    } else {
        build_stock_graph(&load.matrix, args.theta, args.lag)?
    };
    eprintln!(
        "{} instruments over {} days: {} edges at theta {}, lag {}",
        load.matrix.instrument_count(),
        load.matrix.days(),
        graph.edge_count(),
        args.theta,
        args.lag
    );
    write_output(args.output.as_deref(), &graph.to_edge_list())
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    if args.repeats == 0 {
        return Err(CliError::Usage("--repeats must be at least 1".into()));
    }
    if args.algorithms.is_empty() {
        return Err(CliError::Usage("--algorithms must name at least one".into()));
    }
    let (graph, _) = open_graph(&args.input)?;
    let guard_limit = resolve_guard_limit(args.guard_limit)?;

    let mut timings: BTreeMap<(String, usize), Vec<f64>> = BTreeMap::new();
    let mut results: Vec<PatternResult> = Vec::new();
    for &arg in &args.algorithms {
        let algorithm: Algorithm = arg.into();
        let mut config = MiningConfig::new(algorithm, args.pattern.into(), args.max_size);
        config.guard_limit = guard_limit;
        let mut kept: Option<PatternResult> = None;
        for round in 0..args.repeats {
            let result = mine(&graph, &config)?;
            for (&size, &ms) in &result.timings_ms {
                timings
                    .entry((algorithm.to_string(), size))
                    .or_default()
                    .push(ms);
            }
            eprintln!(
                "{algorithm} round {}/{}: {} pattern(s)",
                round + 1,
                args.repeats,
                result.total_patterns()
            );
            kept = Some(result);
        }
        results.push(kept.expect("at least one repeat"));
    }
    check_agreement(&results)?;

    let mut csv = String::from("algorithm,size,median_ms,patterns\n");
    for result in &results {
        let name = result.algorithm.to_string();
        for (&size, sets) in &result.patterns_by_size {
            let med = median(&timings[&(name.clone(), size)]);
            csv.push_str(&format!("{name},{size},{med:.3},{}\n", sets.len()));
        }
    }
    write_output(args.output.as_deref(), &csv)
}

fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let (graph, load_report) = open_graph(&args.input)?;

    #[derive(Serialize)]
    struct StatsReport {
        command: &'static str,
        input: InputDigest,
        #[serde(skip_serializing_if = "Vec::is_empty")]
        warnings: Vec<String>,
        weak_components: usize,
        out_degree_histogram: BTreeMap<usize, usize>,
        in_degree_histogram: BTreeMap<usize, usize>,
    }

    let mut out_hist: BTreeMap<usize, usize> = BTreeMap::new();
    let mut in_hist: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..graph.node_count() {
        let v = holeminer_core::graph::NodeId(v as u32);
        *out_hist.entry(graph.out_degree(v)?).or_default() += 1;
        *in_hist.entry(graph.in_degree(v)?).or_default() += 1;
    }
    let report = StatsReport {
        command: "stats",
        input: digest(&args.input, &graph),
        warnings: load_warnings(&load_report),
        weak_components: graph.weak_components().len(),
        out_degree_histogram: out_hist,
        in_degree_histogram: in_hist,
    };
    write_output(args.output.as_deref(), &to_pretty_json(&report)?)
}

/// The guard limit comes from the flag, else the environment, else the
/// built-in default.
fn resolve_guard_limit(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(limit) = flag {
        return Ok(limit);
    }
    match std::env::var(GUARD_LIMIT_ENV) {
        Ok(raw) => raw.trim().parse().map_err(|_| {
            CliError::Usage(format!("{GUARD_LIMIT_ENV} must be an integer, got {raw:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_GUARD_LIMIT),
        Err(e) => Err(CliError::Usage(format!("{GUARD_LIMIT_ENV}: {e}"))),
    }
}

fn open_graph(path: &Path) -> Result<(DirectedGraph, LoadReport), CliError> {
    let file = File::open(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        source: e,
    })?;
    load_edge_list(BufReader::new(file)).map_err(CliError::Core)
}

fn digest(path: &Path, graph: &DirectedGraph) -> InputDigest {
    InputDigest {
        path: path.display().to_string(),
        nodes: graph.node_count(),
        edges: graph.edge_count(),
    }
}

fn load_warnings(report: &LoadReport) -> Vec<String> {
    let mut warnings = Vec::new();
    if report.self_loops_dropped > 0 {
        warnings.push(format!(
            "{} self-loop(s) dropped",
            report.self_loops_dropped
        ));
    }
    if report.duplicates_collapsed > 0 {
        warnings.push(format!(
            "{} duplicate edge(s) collapsed",
            report.duplicates_collapsed
        ));
    }
    warnings
}

/// Converts id sets to label lists: labels sorted within each set, sets
/// sorted among themselves, so equal mining results always render the same.
fn patterns_as_labels(
    graph: &DirectedGraph,
    result: &PatternResult,
) -> BTreeMap<usize, Vec<Vec<String>>> {
    result
        .patterns_by_size
        .iter()
        .map(|(&size, sets)| {
            let mut rendered: Vec<Vec<String>> = sets
                .iter()
                .map(|s| {
                    let mut labels: Vec<String> =
                        s.iter().map(|v| graph.label(v).to_string()).collect();
                    labels.sort_unstable();
                    labels
                })
                .collect();
            rendered.sort_unstable();
            (size, rendered)
        })
        .collect()
}

fn patterns_csv(patterns: &BTreeMap<usize, Vec<Vec<String>>>) -> String {
    let mut out = String::from("size,members\n");
    for (size, sets) in patterns {
        for set in sets {
            out.push_str(&format!("{size},{}\n", set.join(" ")));
        }
    }
    out
}

/// The bench tripwire: every algorithm must have found exactly the same
/// patterns, otherwise the timings compare different work and something is
/// deeply wrong.
fn check_agreement(results: &[PatternResult]) -> Result<(), CliError> {
    for pair in results.windows(2) {
        if !pair[0].patterns_eq(&pair[1]) {
            let divergent = pair[0]
                .patterns_by_size
                .iter()
                .find(|(size, sets)| pair[1].patterns_by_size.get(size) != Some(sets))
                .map(|(&size, _)| size);
            return Err(CliError::Tripwire(format!(
                "algorithms disagree: {} and {} found different patterns{}",
                pair[0].algorithm,
                pair[1].algorithm,
                divergent.map_or(String::new(), |s| format!(" at size {s}")),
            )));
        }
    }
    Ok(())
}

fn median(samples: &[f64]) -> f64 {
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("timings are finite"));
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut rendered = serde_json::to_string_pretty(value).map_err(|e| {
        CliError::Usage(format!("cannot render report: {e}"))
    })?;
    rendered.push('\n');
    Ok(rendered)
}

fn write_output(path: Option<&Path>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut file = File::create(p).map_err(|e| CliError::Io {
                path: p.to_path_buf(),
                source: e,
            })?;
            file.write_all(content.as_bytes()).map_err(|e| CliError::Io {
                path: p.to_path_buf(),
                source: e,
            })
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Io {
                    path: PathBuf::from("<stdout>"),
                    source: e,
                })
        }
    }
}
