//! Reproducible experiments on progressions in product sets.
//!
//! [`run`] is the whole command-line program: it parses arguments, runs one
//! experiment and writes CSV (or an edge list) to `--out` or stdout. Exit
//! codes are `0` on success, `1` when an asserted invariant fails (the
//! offending rows carry `ok=false`) and `2` on usage or input errors.

pub mod cache;
pub mod commands;
pub mod corpus;
pub mod edgelist;
pub mod parse;
pub mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "prodap",
    version,
    about = "Arithmetic progressions in product sets: experiments with CSV output"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Seed for randomized corpora (ChaCha8).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads; all cores when omitted.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Longest progression inside B.B against n·ln n, for one set or a
    /// seeded random corpus (length of progressions in product sets is
    /// O(n log n)).
    ApSearch(commands::ApSearchArgs),
    /// Erdős elimination: drop one term of maximal p-order per prime and
    /// check r(r+d)…(r+(N−1−M)d) ≤ (N−1)!.
    Eliminate(commands::GridArgs),
    /// Either d, r < N² or more than N/2 terms are removed by elimination.
    Dichotomy(commands::DichotomyArgs),
    /// Large-prime unique-divisor selection from the elimination output and
    /// the acyclicity of its containment graph.
    Select(commands::SelectArgs),
    /// General product-set proposition: hypotheses on A and the ratio
    /// |B| / M, where M counts large primes dividing A / gcd(A).
    Prop1(commands::Prop1Args),
    /// Containment graph G(A, B.B) exported as an edge list.
    Graph(commands::GraphArgs),
    /// Shortest even cycles of containment graphs, or the girth dichotomy
    /// over Q(√D) (a cycle forces an integer relation for r).
    Cycles(commands::CyclesArgs),
    /// Factorization types of an irreducible polynomial modulo primes up to
    /// x, with root and split densities (Frobenius and Chebotarev).
    Cheb(commands::ChebArgs),
    /// Greedy small set B with {1, …, N} ⊆ B.B.
    Cover(commands::CoverArgs),
    /// Length bound N ≤ 36·k·n·ln n and the n^{1 + ln ln n/√ln n} exponent.
    Bounds(commands::BoundsArgs),
}

/// What a subcommand produced.
pub struct Output {
    pub bytes: Vec<u8>,
    pub violations: usize,
}

/// Runs the program on `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.global.threads {
        if n == 0 {
            anyhow::bail!("--threads must be positive");
        }
        pool = pool.num_threads(n);
    }
    let pool = pool.build()?;
    let output = pool.install(|| commands::dispatch(&cli.command, &cli.global))?;
    match &cli.global.out {
        Some(path) => std::fs::write(path, &output.bytes)?,
        None => match std::io::stdout().lock().write_all(&output.bytes) {
            // a closed pipe (`| head`) is not an error of the experiment
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => {}
            other => other?,
        },
    }
    Ok(if output.violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}
