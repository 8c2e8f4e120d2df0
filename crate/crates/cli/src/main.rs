//! `mahonian`: statistics, bijections, generating functions and the
//! verification suite from the command line.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

#[derive(Parser)]
#[command(name = "mahonian", version, about = "Mahonian statistics, Foata's bijection and friends")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Accepted for harness compatibility; every computation is deterministic.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of a single word.
    Stat(StatArgs),
    /// Apply a map to a word or partition.
    Map(MapArgs),
    /// Same as `map --trace`.
    Trace {
        /// phi or csv.
        map: String,
        input: String,
    },
    /// List the members of a word family.
    Enumerate(EnumerateArgs),
    /// Print a named polynomial or truncated series.
    Genfun(GenfunArgs),
    /// Run checks from the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct StatArgs {
    /// Digit string, or comma-separated letters.
    word: String,
    #[arg(long)]
    maj: bool,
    #[arg(long)]
    inv: bool,
    #[arg(long)]
    des: bool,
    /// Strict excedances (permutations).
    #[arg(long)]
    exc: bool,
    /// Maximal excess e(w) (binary words).
    #[arg(long)]
    e: bool,
    /// Number of paired (2,1) positions p(w) (binary words).
    #[arg(long)]
    pairs: bool,
    #[arg(long)]
    len: bool,
    #[arg(long)]
    ballot: bool,
}

#[derive(Args)]
struct MapArgs {
    /// One of phi, phi-inv, beta, csv, gk, gk-inv, prime, lambda, boundary.
    map: String,
    /// A word, or a partition such as "(8,8,6,5,2,1)".
    input: String,
    /// Print the stage table (phi and csv).
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Family name; run with `--help` for the list.
    #[arg(long_help = commands::FAMILY_HELP)]
    family: String,
    /// Family parameters.
    #[arg(allow_negative_numbers = true)]
    args: Vec<String>,
    /// Length cap for the infinite families.
    #[arg(long)]
    max_len: Option<usize>,
    /// Print only the number of members.
    #[arg(long)]
    count: bool,
    /// Print the distribution instead, e.g. "maj:q,des:t".
    #[arg(long, value_name = "STAT:VAR,...")]
    stats: Option<String>,
}

#[derive(Args)]
struct GenfunArgs {
    /// Polynomial family; run with `--help` for the list.
    #[arg(long_help = commands::GENFUN_HELP)]
    family: String,
    #[arg(allow_negative_numbers = true)]
    args: Vec<String>,
    /// Keep only these variables, setting the others to 1 (e.g. "q").
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Truncation degree in q for infinite series.
    #[arg(long, default_value_t = 20)]
    truncate: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id; omit with --all or --list.
    check: Option<String>,
    /// Run every registered check.
    #[arg(long)]
    all: bool,
    /// List the registered checks.
    #[arg(long)]
    list: bool,
    /// quick or full.
    #[arg(long, default_value = "quick")]
    profile: String,
    /// Override a bound, e.g. --set binary_len=12.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    #[arg(long)]
    max_len: Option<usize>,
    #[arg(long)]
    binary_len: Option<usize>,
    #[arg(long)]
    ternary_len: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    max_modulus: Option<usize>,
    #[arg(long)]
    max_j: Option<usize>,
}

/// Why a command did not succeed.
pub enum Failure {
    /// Bad input; exit code 2.
    Usage(String),
    /// A check failed; the output is still printed. Exit code 1.
    Verification(Output),
}

/// Text and JSON renderings of the same result.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl From<mahonian::Error> for Failure {
    fn from(e: mahonian::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("MAHONIAN_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
    {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn print(out: &Output, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
    } else if !out.text.is_empty() {
        println!("{}", out.text);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Stat(a) => commands::stat(&a),
        Command::Map(a) => commands::map(&a.map, &a.input, a.trace),
        Command::Trace { map, input } => commands::map(&map, &input, true),
        Command::Enumerate(a) => commands::enumerate(&a),
        Command::Genfun(a) => commands::genfun(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match result {
        Ok(out) => {
            print(&out, cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print(&out, cli.json);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
