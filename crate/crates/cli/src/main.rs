//! `taut`: Betti tables, pairing matrices, verification suites and reductions.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use commands::{Failure, Outcome};

#[derive(Parser, Debug)]
#[command(
    name = "taut",
    version,
    about = "Tautological rings of C^n, U_{n-1} and M_{1,n}^ct"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Also reduce every pairing-matrix entry and run the larger cases.
    #[arg(long, global = true)]
    slow: bool,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gorenstein,
    Getzler,
    Oracle,
    Tmatrix,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Curve,
    Blowup,
    Moduli,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim R^d(M_{1,n}^ct) for every d.
    Betti {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// The pairing matrix R^d x R^{n-1-d} -> Q on standard monomials.
    Pairing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Reduce an expression to standard monomials.
    Reduce {
        #[arg(long, value_enum)]
        ring: Ring,
        #[arg(long)]
        n: usize,
        expr: String,
        /// Print the socle value of a top-degree element.
        #[arg(long)]
        eval: bool,
        /// For the moduli ring: reduce the image under F^*.
        #[arg(long)]
        pullback: bool,
    },
    /// The Hodge integral of psi^alpha lambda_g over M_{g,n}.
    Integral {
        #[arg(long, default_value_t = 1)]
        g: usize,
        /// Exponents, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        alpha: Vec<usize>,
    },
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Betti { n, max_n } => commands::betti(*n, *max_n, cli.slow),
        Command::Pairing { n, degree, max_n } => commands::pairing(*n, *degree, *max_n, cli.slow),
        Command::Verify { suite, n, m } => commands::verify(*suite, *n, *m, cli.slow),
        Command::Reduce {
            ring,
            n,
            expr,
            eval,
            pullback,
        } => commands::reduce(*ring, *n, expr, *eval, *pullback),
        Command::Integral { g, alpha } => commands::integral(*g, alpha),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(msg)) => {
            eprintln!("FAIL: {msg}");
            ExitCode::from(1)
        }
    }
}
