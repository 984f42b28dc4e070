mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ramsey_core::codec::CorpusFormat;
use ramsey_core::witness::Mode;
use ramsey_core::{Error, GraphName, ParamKind, TheoremId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ramsey",
    version,
    about = "Nontrivial-vertex Ramsey toolkit for small graphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// More log output on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

/// Where graphs are read from.
#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Input file; stdin when absent or `-`.
    #[arg(long, short)]
    pub input: Option<PathBuf>,
    /// Record format of the input.
    #[arg(long, default_value = "graph6", value_parser = parse_corpus_format)]
    pub input_format: CorpusFormat,
    /// Skip malformed records instead of stopping.
    #[arg(long)]
    pub lenient: bool,
}

fn parse_corpus_format(s: &str) -> Result<CorpusFormat, Error> {
    s.parse()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamChoice {
    All,
    One(ParamKind),
}

fn parse_param_choice(s: &str) -> Result<ParamChoice, Error> {
    if s == "all" {
        Ok(ParamChoice::All)
    } else {
        s.parse().map(ParamChoice::One)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a named graph as graph6.
    Gen {
        /// Graph name, e.g. `K5`, `K1,4*`, `CK3`, `K3^3`, `3K1,3`.
        name: GraphName,
    },
    /// Per-vertex parameters and h-indices.
    Analyze {
        #[arg(long, default_value = "all", value_parser = parse_param_choice)]
        param: ParamChoice,
        #[command(flatten)]
        input: Input,
    },
    /// Freeness against a statement's family, with the violating member.
    Free {
        /// `<theorem>:<n>`, e.g. `deg:3`.
        #[arg(long)]
        family: String,
        #[command(flatten)]
        input: Input,
    },
    /// Decide `left <= right`: every right member contains a left member.
    Le {
        /// `<theorem>:<n>` or a list of graph names separated by `,` or `;`.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Extract an induced family member from each input graph.
    Witness {
        #[arg(long)]
        theorem: TheoremId,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "best-effort")]
        mode: Mode,
        /// Count threshold override (`c + 1`, or `c_2` for h-index statements).
        #[arg(long)]
        threshold: Option<usize>,
        /// Parameter cut-off override (`c_1`) for h-index statements.
        #[arg(long)]
        param_threshold: Option<usize>,
        /// Report pipeline misses instead of searching the family directly.
        #[arg(long)]
        no_fallback: bool,
        /// Run a connected statement on a possibly disconnected input by
        /// way of its corollary.
        #[arg(long)]
        disconnected: bool,
        #[command(flatten)]
        input: Input,
    },
    /// The necessity tables: each member's nontrivial count against `c`.
    OnlyIf {
        #[arg(long)]
        theorem: TheoremId,
        /// `c`, or `c_1` for h-index statements.
        #[arg(long)]
        c: usize,
        /// `c_2` for h-index statements.
        #[arg(long)]
        c2: Option<usize>,
    },
    /// Run invariant checks over an enumeration or a corpus.
    Scan {
        /// Comma-separated check ids, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Enumerate every class on `1..=k` vertices.
        #[arg(long, conflicts_with = "corpus")]
        enumerate: Option<usize>,
        /// Only connected classes (with `--enumerate`).
        #[arg(long)]
        connected: bool,
        /// Read a corpus file (`-` for stdin).
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value = "graph6", value_parser = parse_corpus_format)]
        input_format: CorpusFormat,
        #[arg(long)]
        lenient: bool,
        /// Record freeness against these families (`<theorem>:<n>`, repeatable).
        #[arg(long)]
        family: Vec<String>,
        /// Include per-graph records in table output.
        #[arg(long)]
        records: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Maximum nontrivial count over family-free graphs, per order.
    Extremal {
        /// `<theorem>:<n>` or a list of graph names.
        #[arg(long)]
        family: String,
        #[arg(long)]
        param: ParamKind,
        #[arg(long)]
        max_n: usize,
        /// A vertex is nontrivial when its parameter is at least this.
        #[arg(long, default_value_t = 2)]
        threshold: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Ramsey certificates.
    Ramsey {
        #[command(subcommand)]
        command: RamseyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum RamseyCommand {
    /// Certify `R_2(3) = 6` exhaustively.
    CertifySmall,
    /// Estimate the order beyond which connected graphs hold `P_n`, `K_n`
    /// or `K_{1,n}` induced.
    N0 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        max_order: usize,
    },
}

/// Exit codes: 0 clean, 1 check failed, 2 usage, 3 input or runtime error.
pub enum Failure {
    Check,
    Error(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BadParameter(_) | Error::UnknownTheorem(_) | Error::BadGraphName(_) | Error::OrderCapExceeded { .. } => {
            2
        }
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
