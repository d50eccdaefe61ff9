//! Thin binary over [`newton_ideals::cli`]: argument parsing, stdin
//! plumbing, and exit-code discipline (0 success, 1 computation error,
//! 2 parse error).

use clap::{Args, Parser, Subcommand};
use newton_ideals::cli::{self, AnalysisRequest, Bounds, OutputFormat};
use newton_ideals::MonomialIdeal;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "newton-ideals",
    version,
    about = "Convex-geometric invariants of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Extreme points, minimal reduction, slope, spread, compact faces
    Analyze(CommonArgs),
    /// Minimal monomial reduction report
    Reduce(CommonArgs),
    /// Integral closure and normality certificate
    Closure(CommonArgs),
    /// Fiber-ring report: primes, Hilbert functions, reducedness
    Fiber(CommonArgs),
    /// Re-check the structural invariants on one ideal
    Verify(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Comma-separated monomials, e.g. "x^2, x*y, y^2"; "-" reads stdin
    ideal: String,
    /// Number of ambient variables (inferred from the input when omitted)
    #[arg(long)]
    vars: Option<usize>,
    /// Hilbert-function degree bound
    #[arg(long, default_value_t = 6)]
    hilbert: usize,
    /// Binomial fiber-degree bound for minimal-prime parts
    #[arg(long = "binomial-bound", default_value_t = 4)]
    binomial_bound: u64,
    /// Search cutoff for reduction numbers
    #[arg(long, default_value_t = 20)]
    cutoff: usize,
    /// Emit a single-line JSON report instead of text
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, args) = match &cli.command {
        Cmd::Analyze(a) => (cli::Command::Analyze, a),
        Cmd::Reduce(a) => (cli::Command::Reduce, a),
        Cmd::Closure(a) => (cli::Command::Closure, a),
        Cmd::Fiber(a) => (cli::Command::Fiber, a),
        Cmd::Verify(a) => (cli::Command::Verify, a),
    };
    let text = if args.ideal == "-" {
        let mut buf = String::new();
        if let Err(e) = std::io::stdin().read_to_string(&mut buf) {
            eprintln!("error: cannot read stdin: {e}");
            return ExitCode::from(2);
        }
        buf
    } else {
        args.ideal.clone()
    };
    let ideal = match MonomialIdeal::parse_text(&text, args.vars) {
        Ok(ideal) => ideal,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = cli::run(&AnalysisRequest {
        command,
        ideal,
        bounds: Bounds {
            hilbert: args.hilbert,
            binomial: args.binomial_bound,
            cutoff: args.cutoff,
        },
        output: if args.json {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
    });
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    ExitCode::from(outcome.exit_code as u8)
}
