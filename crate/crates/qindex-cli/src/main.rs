//! Batch command-line front end: analyze graphs, run verification sweeps,
//! search for extremal graphs, generate inputs, and convert between the
//! edge-list and graph6 encodings.
//!
//! Contract: stdout carries data only, stderr carries diagnostics only.
//! Exit codes: 0 success, 1 a verification sweep found violations,
//! 2 parse/parameter/scope errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use qindex::bounds::{bound_report, BoundReport};
use qindex::edgelist::{format_edge_list, parse_edge_list};
use qindex::graph6::{decode_graph6, encode_graph6};
use qindex::search::{
    random_k_degenerate, verify_bound_universal, verify_edge_bound, verify_theorem_mu,
    verify_theorem_q, SearchReport, SweepOptions,
};
use qindex::Graph;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

/// Fixed header of `analyze --format csv`. The graph6 column needs no
/// quoting: its alphabet (bytes 63..=126) contains neither commas nor
/// quotes.
const ANALYZE_CSV_HEADER: &str = "graph6,n,m,min_degree,max_degree,degeneracy,\
q,mu,bound_main,bound_cor1,bound_cor2,bound_thm_a_mu,bound_lipa,bound_llt,\
equality_main,equality_cor1,equality_thm_a,\
gap_main,gap_cor1,gap_cor2,gap_thm_a_mu,gap_lipa,gap_llt";

#[derive(Parser)]
#[command(
    name = "qindex",
    about = "Signless-Laplacian spectral bounds for degenerate graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact spectral indices, all degree bounds, equality flags, and gaps
    /// for each input graph.
    Analyze(AnalyzeArgs),
    /// Exhaustive verification sweep; exits 1 if violations are found.
    Verify(VerifyArgs),
    /// Scan k-degenerate graphs of an order for the spectral maximizer.
    SearchExtremal(SearchExtremalArgs),
    /// Generate graphs as graph6 lines.
    Gen(GenArgs),
    /// Convert an edge-list document to a graph6 line.
    Encode(InputArgs),
    /// Convert graph6 lines to edge-list documents.
    Decode(InputArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Inline graph6 string.
    #[arg(long, value_name = "STRING")]
    g6: Option<String>,
    /// Path to an edge-list file (`n m` header, one `u v` pair per line).
    #[arg(long, value_name = "PATH")]
    edges: Option<PathBuf>,
    /// Read graph6 lines (or, for `encode`, one edge-list document) from
    /// standard input.
    #[arg(long)]
    stdin: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Six significant digits, one labeled block per graph.
    Human,
    /// Full-precision rows under a fixed header (for verify: the gap
    /// histogram).
    Csv,
    /// Full-precision JSON, one object per line.
    Json,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    /// Split-clique extremality of the Q-index over k-degenerate graphs.
    Q,
    /// Split-clique extremality of the adjacency index.
    Mu,
    /// Soundness + equality structure of every degree bound, all graphs.
    Bound,
    /// The k-degenerate edge bound and greedy completion exactness.
    Edges,
}

#[derive(Args)]
struct SweepArgs {
    /// Graph order to enumerate (<= 7; 8 with --allow-n8).
    #[arg(long)]
    n: usize,
    /// Degeneracy bound (required for q/mu/edges targets).
    #[arg(long)]
    k: Option<usize>,
    /// Worker threads; overrides the QINDEX_WORKERS environment variable.
    #[arg(long)]
    workers: Option<usize>,
    /// Opt into order-8 sweeps (2^28 graphs).
    #[arg(long)]
    allow_n8: bool,
    /// Progress file updated as `last_completed_mask <integer>` while the
    /// sweep runs.
    #[arg(long, value_name = "PATH")]
    checkpoint: Option<PathBuf>,
}

impl SweepArgs {
    fn options(&self) -> SweepOptions {
        SweepOptions {
            workers: self.workers,
            allow_order_8: self.allow_n8,
            checkpoint: self.checkpoint.clone(),
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    target: VerifyTarget,
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExtremalTarget {
    Q,
    Mu,
}

#[derive(Args)]
struct SearchExtremalArgs {
    #[arg(long, value_enum, default_value_t = ExtremalTarget::Q)]
    target: ExtremalTarget,
    #[command(flatten)]
    sweep: SweepArgs,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// The split-clique graph: a k-clique joined to n-k independent
    /// vertices.
    Snk,
    /// Random k-degenerate graphs from the incremental-attachment model.
    RandomDegenerate,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Seed of the first generated graph; graph i uses seed + i.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs to generate (random-degenerate only).
    #[arg(long, default_value_t = 1)]
    count: usize,
}

/// Any failure that maps to exit code 2.
struct UsageError(String);

impl<E: std::error::Error> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::SearchExtremal(args) => cmd_search_extremal(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Encode(args) => cmd_encode(args),
        Command::Decode(args) => cmd_decode(args),
    };
    match outcome {
        Ok(code) => code,
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Six-significant-digit rendering for the human format.
fn sig6(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let magnitude = v.abs().log10().floor() as i32;
    let decimals = (5 - magnitude).max(0) as usize;
    format!("{v:.decimals$}")
}

fn read_stdin() -> Result<String, UsageError> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

/// Resolve the input graphs along with a graph6 label for each.
fn load_graphs(input: &InputArgs) -> Result<Vec<(String, Graph)>, UsageError> {
    let sources = input.g6.is_some() as u8 + input.edges.is_some() as u8 + input.stdin as u8;
    if sources != 1 {
        return Err(UsageError(
            "exactly one input source required: --g6, --edges, or --stdin".to_string(),
        ));
    }
    if let Some(s) = &input.g6 {
        let g = decode_graph6(s.trim())?;
        return Ok(vec![(s.trim().to_string(), g)]);
    }
    if let Some(path) = &input.edges {
        let text = std::fs::read_to_string(path)
            .map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
        let g = parse_edge_list(&text)?;
        let label = encode_graph6(&g)?;
        return Ok(vec![(label, g)]);
    }
    let text = read_stdin()?;
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(line)
            .map_err(|e| UsageError(format!("stdin line {}: {e}", idx + 1)))?;
        graphs.push((line.to_string(), g));
    }
    if graphs.is_empty() {
        return Err(UsageError("no graphs on standard input".to_string()));
    }
    Ok(graphs)
}

fn analyze_csv_row(graph6: &str, degeneracy: usize, r: &BoundReport) -> String {
    format!(
        "{graph6},{},{},{},{},{degeneracy},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
        r.profile.n,
        r.profile.m,
        r.profile.min_degree,
        r.profile.max_degree,
        r.q_exact,
        r.mu_exact,
        r.bound_main,
        r.bound_cor1,
        r.bound_cor2,
        r.bound_thm_a_mu,
        r.bound_lipa,
        r.bound_llt,
        r.equality_main,
        r.equality_cor1,
        r.equality_thm_a,
        r.gaps.main,
        r.gaps.cor1,
        r.gaps.cor2,
        r.gaps.thm_a_mu,
        r.gaps.lipa,
        r.gaps.llt
    )
}

/// The JSON row is the bound report plus the graph6 label and degeneracy.
fn analyze_json_row(
    graph6: &str,
    degeneracy: usize,
    r: &BoundReport,
) -> Result<String, UsageError> {
    let mut value = serde_json::to_value(r)?;
    let obj = value.as_object_mut().expect("report serializes to an object");
    obj.insert("graph6".to_string(), serde_json::Value::from(graph6));
    obj.insert("degeneracy".to_string(), serde_json::Value::from(degeneracy));
    Ok(serde_json::to_string(&value)?)
}

fn analyze_human_block(graph6: &str, degeneracy: usize, r: &BoundReport) -> String {
    let flag = |b: bool| if b { "attained" } else { "strict" };
    format!(
        "graph {graph6}: n={} m={} min_degree={} max_degree={} degeneracy={degeneracy}\n\
         \x20 q = {}  mu = {}\n\
         \x20 bound_main     = {} ({}, gap {})\n\
         \x20 bound_cor1     = {} ({}, gap {})\n\
         \x20 bound_cor2     = {} (gap {})\n\
         \x20 bound_thm_a_mu = {} ({}, gap {})\n\
         \x20 bound_lipa     = {} (gap {})\n\
         \x20 bound_llt      = {} (gap {})",
        r.profile.n,
        r.profile.m,
        r.profile.min_degree,
        r.profile.max_degree,
        sig6(r.q_exact),
        sig6(r.mu_exact),
        sig6(r.bound_main),
        flag(r.equality_main),
        sig6(r.gaps.main),
        sig6(r.bound_cor1),
        flag(r.equality_cor1),
        sig6(r.gaps.cor1),
        sig6(r.bound_cor2),
        sig6(r.gaps.cor2),
        sig6(r.bound_thm_a_mu),
        flag(r.equality_thm_a),
        sig6(r.gaps.thm_a_mu),
        sig6(r.bound_lipa),
        sig6(r.gaps.lipa),
        sig6(r.bound_llt),
        sig6(r.gaps.llt)
    )
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, UsageError> {
    let graphs = load_graphs(&args.input)?;
    if args.format == Format::Csv {
        println!("{ANALYZE_CSV_HEADER}");
    }
    for (label, g) in &graphs {
        let report = bound_report(g)?;
        let degeneracy = g.degeneracy();
        match args.format {
            Format::Human => println!("{}", analyze_human_block(label, degeneracy, &report)),
            Format::Csv => println!("{}", analyze_csv_row(label, degeneracy, &report)),
            Format::Json => println!("{}", analyze_json_row(label, degeneracy, &report)?),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn require_k(args: &SweepArgs) -> Result<usize, UsageError> {
    args.k
        .ok_or_else(|| UsageError("this target requires --k".to_string()))
}

fn run_sweep(target: VerifyTarget, sweep: &SweepArgs) -> Result<SearchReport, UsageError> {
    let opts = sweep.options();
    let report = match target {
        VerifyTarget::Q => verify_theorem_q(sweep.n, require_k(sweep)?, &opts)?,
        VerifyTarget::Mu => verify_theorem_mu(sweep.n, require_k(sweep)?, &opts)?,
        VerifyTarget::Bound => verify_bound_universal(sweep.n, &opts)?,
        VerifyTarget::Edges => verify_edge_bound(sweep.n, require_k(sweep)?, &opts)?,
    };
    Ok(report)
}

fn report_human(report: &SearchReport) -> String {
    let mut out = format!(
        "scope: target={} n={}{} mode={}{}\ngraphs scanned: {}\nviolations: {}",
        report.scope.target,
        report.scope.n,
        report.scope.k.map_or(String::new(), |k| format!(" k={k}")),
        report.scope.mode,
        if report.scope.degenerate_k { " (degenerate scope: k >= n-1)" } else { "" },
        report.graphs_scanned,
        report.violation_count,
    );
    for v in &report.violations {
        out.push_str(&format!("\n  violation {}: {}", v.graph6, v.detail));
    }
    if let (Some(g6), Some(value)) = (&report.extremal_graph6, report.extremal_value) {
        out.push_str(&format!(
            "\nextremal: {g6} value={} labeled_count={}",
            sig6(value),
            report.extremal_count
        ));
    }
    if let Some(unique) = report.unique_up_to_iso {
        out.push_str(&format!("\nunique up to isomorphism: {unique}"));
    }
    if let Some(gap) = report.min_nonzero_gap {
        out.push_str(&format!("\nmin nonzero gap: {}", sig6(gap)));
    }
    out
}

fn print_report(report: &SearchReport, format: Format) -> Result<(), UsageError> {
    match format {
        Format::Human => println!("{}", report_human(report)),
        Format::Json => println!("{}", serde_json::to_string(report)?),
        // CSV renders the tightness histogram; everything else is in JSON.
        Format::Csv => print!("{}", report.tightness.to_csv()),
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, UsageError> {
    let report = run_sweep(args.target, &args.sweep)?;
    print_report(&report, args.format)?;
    Ok(if report.clean() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_search_extremal(args: SearchExtremalArgs) -> Result<ExitCode, UsageError> {
    let target = match args.target {
        ExtremalTarget::Q => VerifyTarget::Q,
        ExtremalTarget::Mu => VerifyTarget::Mu,
    };
    let report = run_sweep(target, &args.sweep)?;
    match args.format {
        Format::Human => {
            if let (Some(g6), Some(value)) = (&report.extremal_graph6, report.extremal_value) {
                println!(
                    "extremal: {g6} value={} labeled_count={} unique_up_to_iso={}",
                    sig6(value),
                    report.extremal_count,
                    report.unique_up_to_iso.unwrap_or(false)
                );
            } else {
                println!("extremal: none (no graph in scope)");
            }
        }
        other => print_report(&report, other)?,
    }
    Ok(if report.clean() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, UsageError> {
    match args.kind {
        GenKind::Snk => {
            let g = Graph::split_clique(args.n, args.k)?;
            println!("{}", encode_graph6(&g)?);
        }
        GenKind::RandomDegenerate => {
            for i in 0..args.count {
                let g = random_k_degenerate(args.n, args.k, args.seed + i as u64)?;
                println!("{}", encode_graph6(&g)?);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_encode(args: InputArgs) -> Result<ExitCode, UsageError> {
    if args.g6.is_some() {
        return Err(UsageError(
            "encode expects edge-list input (--edges or --stdin), not --g6".to_string(),
        ));
    }
    let text = if let Some(path) = &args.edges {
        std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?
    } else if args.stdin {
        read_stdin()?
    } else {
        return Err(UsageError("encode requires --edges or --stdin".to_string()));
    };
    let g = parse_edge_list(&text)?;
    println!("{}", encode_graph6(&g)?);
    Ok(ExitCode::SUCCESS)
}

fn cmd_decode(args: InputArgs) -> Result<ExitCode, UsageError> {
    if args.edges.is_some() {
        return Err(UsageError(
            "decode expects graph6 input (--g6 or --stdin), not --edges".to_string(),
        ));
    }
    for (_, g) in load_graphs(&args)? {
        print!("{}", format_edge_list(&g));
    }
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::sig6;

    #[test]
    fn six_significant_digits() {
        assert_eq!(sig6(6.372281323), "6.37228");
        assert_eq!(sig6(0.0012345678), "0.00123457");
        assert_eq!(sig6(123456.7), "123457");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(-2.0_f64.sqrt()), "-1.41421");
        assert_eq!(sig6(4.0), "4.00000");
    }
}
