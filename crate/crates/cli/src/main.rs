//! `orbifrob`: build, verify, multiply, twist and export G-Frobenius algebras.
//!
//! Exit codes: 0 success, 1 a mathematical failure (an axiom or law does not
//! hold, or an input algebra is invalid), 2 a usage, parse or budget error.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "orbifrob",
    version,
    about = "Exact G-Frobenius algebras and symmetric products"
)]
struct Cli {
    /// Worker threads for table building and verification.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

/// How an input becomes a G-algebra.
#[derive(Args, Debug, Clone, Default)]
pub struct Build {
    /// Second quantization degree for a base algebra input.
    #[arg(long)]
    pub n: Option<usize>,
    /// Twist by the normalized S_n cocycle with this λ (`-1` is the Hilbert twist).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Twist by the sign super twist.
    #[arg(long = "super")]
    pub super_twist: bool,
    /// Cost limit; applies to the main step of the command.
    #[arg(long)]
    pub budget: Option<u128>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ShiftKind {
    Standard,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the laws of an algebra or the axioms of a G-algebra.
    Verify {
        input: String,
        #[command(flatten)]
        build: Build,
        /// Only print the JSON lines.
        #[arg(long)]
        json: bool,
        /// Also write the JSON lines here.
        #[arg(long)]
        out: Option<String>,
    },
    /// Second quantization of a base algebra.
    Symprod {
        base: String,
        #[command(flatten)]
        build: Build,
        #[arg(long)]
        out: Option<String>,
    },
    /// Multiply two elements, e.g. `1@(1 2)`.
    Mult {
        input: String,
        a: String,
        b: String,
        #[command(flatten)]
        build: Build,
    },
    /// Discrete-torsion twist by a cocycle document, `--lambda` or `--super`.
    Twist {
        input: String,
        #[arg(long)]
        cocycle: Option<String>,
        #[command(flatten)]
        build: Build,
        #[arg(long)]
        out: Option<String>,
    },
    /// Invariant algebra dimensions and Poincaré polynomials.
    Invariants {
        input: String,
        #[command(flatten)]
        build: Build,
        #[arg(long)]
        poincare: bool,
        #[arg(long, value_enum)]
        shift: Option<ShiftKind>,
        /// Multiplicity of the permutation representation for `--shift standard`.
        #[arg(long, default_value_t = 1)]
        copies: usize,
    },
    /// Write a document: a built-in model (`point`, `dual`, `surface4`,
    /// `k3`), `group-ring` with `--n`, or a file in canonical form.
    Export {
        source: String,
        #[command(flatten)]
        build: Build,
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(k) = cli.jobs {
        if k == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .expect("thread pool configured once");
    }
    let result = match cli.command {
        Command::Verify {
            input,
            build,
            json,
            out,
        } => commands::verify(&input, &build, json, out.as_deref()),
        Command::Symprod { base, build, out } => commands::symprod(&base, &build, out.as_deref()),
        Command::Mult { input, a, b, build } => commands::mult(&input, &a, &b, &build),
        Command::Twist {
            input,
            cocycle,
            build,
            out,
        } => commands::twist(&input, cocycle.as_deref(), &build, out.as_deref()),
        Command::Invariants {
            input,
            build,
            poincare,
            shift,
            copies,
        } => commands::invariants(&input, &build, poincare, shift, copies),
        Command::Export { source, build, out } => commands::export(&source, &build, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(input::exit_code(&e))
        }
    }
}
