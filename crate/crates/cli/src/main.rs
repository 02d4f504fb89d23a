//! `lspace` — derive, map, classify, analyze, and transform deterministic
//! L-systems from the command line.
//!
//! Every subcommand renders human-readable text by default and a stable
//! JSON document under `--json`. Exit codes: 0 on success, 1 on a domain
//! failure (unreadable grammar, failed precondition, cap exceeded), 2 on
//! a usage error.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "lspace",
    version,
    about = "A toolkit for deterministic (D0L) Lindenmayer systems",
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Abort any derivation whose next generation would exceed this many
    /// symbols. Overrides the LSPACE_LENGTH_CAP environment variable.
    #[arg(long, global = true)]
    pub length_cap: Option<usize>,

    /// Reserved. Every operation is deterministic; no randomness is used.
    #[arg(long, global = true, hide_short_help = true)]
    pub seed: Option<u64>,
}

#[derive(Subcommand)]
pub enum Command {
    /// Run a parallel derivation and print one generation per line.
    Derive(DeriveArgs),
    /// Run the sequential (one rewrite per step) contrast mode.
    #[command(name = "derive-seq")]
    DeriveSeq(DeriveSeqArgs),
    /// Print the derivation tree.
    Tree(TreeArgs),
    /// Apply a mapping expression to a string read from stdin.
    Map(MapArgs),
    /// Classify a grammar as symmetric / weakly / strongly asymmetric.
    Classify(ClassifyArgs),
    /// Match a minimal binary grammar against the rule-format taxonomy.
    Format(FormatArgs),
    /// Probe multi-symbol-head rule sets for overlapping-match conflicts.
    Frustration(FrustrationArgs),
    /// Quantitative reports: growth, legality, decomposition, repetition.
    Analyze(AnalyzeArgs),
    /// Expand, prune, reduce, or apply a tree operation.
    Transform(TransformArgs),
    /// Compare two grammars' exact symbol ratios generation by generation.
    Equiv(EquivArgs),
    /// Step a radius-1 binary rule-table cellular automaton.
    Ca(CaArgs),
    /// Run the whole reference suite and print a pass/fail table.
    Reproduce,
}

#[derive(Args)]
pub struct DeriveArgs {
    /// Grammar file.
    pub file: String,
    /// Number of generations to derive.
    #[arg(long, short = 'n', default_value_t = 8)]
    pub gens: usize,
}

#[derive(Args)]
pub struct DeriveSeqArgs {
    /// Grammar file (alternatives via `|` are allowed here).
    pub file: String,
    /// Maximum number of single rewrites.
    #[arg(long, default_value_t = 64)]
    pub steps: usize,
}

#[derive(Args)]
pub struct TreeArgs {
    pub file: String,
    #[arg(long, short = 'n', default_value_t = 4)]
    pub gens: usize,
}

#[derive(Args)]
pub struct MapArgs {
    /// Mapping expression: ID, M, N or MN.
    #[arg(long)]
    pub expr: String,
    /// Symbol pairing for N over non-binary alphabets, e.g. `a=b,c=c`.
    /// Binary 0/1 input needs no pairing.
    #[arg(long)]
    pub involution: Option<String>,
}

#[derive(Args)]
pub struct ClassifyArgs {
    pub file: String,
    /// Count stumps and erasing symbols in rule indices.
    #[arg(long)]
    pub count_stumps: bool,
    /// Strip stumps and erasing symbols from bodies before the containment
    /// check.
    #[arg(long)]
    pub containment_excludes_stumps: bool,
}

#[derive(Args)]
pub struct FormatArgs {
    pub file: String,
}

#[derive(Args)]
pub struct FrustrationArgs {
    /// A rewrite rule `LHS->RHS`; repeat for several rules.
    #[arg(long = "rule", required = true)]
    pub rules: Vec<String>,
    /// The string to scan for overlapping matches.
    #[arg(long)]
    pub sample: String,
    /// Cap on the tiling enumeration.
    #[arg(long, default_value_t = 10_000)]
    pub bound: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum AnalyzeReport {
    Growth,
    Legality,
    Decompose,
    Repetition,
}

#[derive(Args)]
pub struct AnalyzeArgs {
    pub file: String,
    #[arg(long, short = 'n', default_value_t = 8)]
    pub gens: usize,
    #[arg(long, value_enum)]
    pub report: AnalyzeReport,
}

#[derive(Args)]
pub struct TransformArgs {
    pub file: String,
    /// Rebuild bodies from Fibonacci generations, e.g. `--expand 0=3 1=4`
    /// or `0=4,3` for concatenations.
    #[arg(long, num_args = 2, value_names = ["ZERO", "ONE"])]
    pub expand: Option<Vec<String>>,
    /// Excise a constituent chunk: `RULE:CHUNK@POS`, e.g. `1:101@0`.
    #[arg(long)]
    pub prune: Option<String>,
    /// Search for a pruning proof down to a minimal grammar: `fib` or `xor`.
    #[arg(long)]
    pub reduce: Option<String>,
    /// Search bound (visited grammars) for --reduce.
    #[arg(long, default_value_t = 10_000)]
    pub bound: usize,
    /// Restrict pruning to plain generations (no mirror/negative images).
    #[arg(long)]
    pub no_mappings: bool,
    /// Tree operation: collapse, percolate, u-prune or atomize.
    #[arg(long)]
    pub tree_op: Option<String>,
    /// Node path for --tree-op, dot-separated from the root, e.g. `0.1`.
    #[arg(long)]
    pub path: Option<String>,
    /// Sister span for atomize, e.g. `0..2`.
    #[arg(long)]
    pub span: Option<String>,
    /// Tree depth for --tree-op.
    #[arg(long, default_value_t = 3)]
    pub gens: usize,
}

#[derive(Args)]
pub struct EquivArgs {
    pub left: String,
    pub right: String,
    /// The symbol pair whose ratio is compared.
    #[arg(long, default_value = "0,1")]
    pub pair: String,
    #[arg(long, short = 'n', default_value_t = 6)]
    pub gens: usize,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum BoundaryArg {
    Periodic,
    Zero,
}

#[derive(Args)]
pub struct CaArgs {
    /// Eight output bits ordered by neighborhood 000..111.
    #[arg(long)]
    pub table: String,
    /// Initial row of cells.
    #[arg(long)]
    pub state: String,
    #[arg(long, default_value_t = 1)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = BoundaryArg::Periodic)]
    pub boundary: BoundaryArg,
}

/// Writes to stdout, treating a closed pipe (the reader hung up early, as
/// under `lspace ... | head`) as a normal end of output.
fn print_stdout(text: &str) -> Result<(), std::io::Error> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (payload, code) = match commands::run(&cli) {
        Ok(output) => (Some(output), ExitCode::SUCCESS),
        Err(commands::CliError::Domain(message)) => {
            eprintln!("error: {message}");
            (None, ExitCode::from(1))
        }
        Err(commands::CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            (None, ExitCode::from(2))
        }
        Err(commands::CliError::ChecksFailed(message)) => (Some(message), ExitCode::from(1)),
    };
    if let Some(text) = payload {
        if let Err(e) = print_stdout(&text) {
            eprintln!("error: cannot write output: {e}");
            return ExitCode::from(1);
        }
    }
    code
}
