use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use metgraph_cli::{run, Command, Method, OutputMode, RunConfig};

/// Arakelov-Green functions, tau constants and epsilon invariants on metrized graphs.
#[derive(Parser)]
#[command(name = "metgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Divisor coefficients "a0,a1,..." replacing the one in the file.
    #[arg(long, global = true, allow_hyphen_values = true)]
    divisor: Option<String>,

    /// Also print each value rounded to K decimal places.
    #[arg(long, global = true, value_name = "K", conflicts_with = "machine")]
    decimal: Option<usize>,

    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Green,
    Resistance,
    Both,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertices, edges, bridges, divisor and connectivity matrix.
    Info { file: PathBuf },
    /// Discrete Laplacian, one row per line.
    Laplacian { file: PathBuf },
    /// Pseudo-inverse of the Laplacian.
    Pinv { file: PathBuf },
    /// The tau constant.
    Tau { file: PathBuf },
    /// Effective resistance between two points "EDGE:OFFSET".
    Resistance {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        file: PathBuf,
    },
    /// Value of g at two points "EDGE:OFFSET".
    Green {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        file: PathBuf,
    },
    /// Every entry z[i][j] of the value matrix.
    ValueMatrix { file: PathBuf },
    /// Epsilon invariant of the divisor.
    Epsilon {
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        file: PathBuf,
    },
    /// Both consistency checks of the value matrix.
    Check { file: PathBuf },
    /// Closed forms against subdivision at each pair of points in FILE.
    Oracle {
        #[arg(long, value_name = "FILE")]
        points: PathBuf,
        file: PathBuf,
    },
}

fn config(cli: Cli) -> RunConfig {
    let (input, command) = match cli.command {
        Cmd::Info { file } => (file, Command::Info),
        Cmd::Laplacian { file } => (file, Command::Laplacian),
        Cmd::Pinv { file } => (file, Command::Pinv),
        Cmd::Tau { file } => (file, Command::Tau),
        Cmd::Resistance { x, y, file } => (file, Command::Resistance { x, y }),
        Cmd::Green { x, y, file } => (file, Command::Green { x, y }),
        Cmd::ValueMatrix { file } => (file, Command::ValueMatrix),
        Cmd::Epsilon { method, file } => {
            let method = match method {
                MethodArg::Green => Method::Green,
                MethodArg::Resistance => Method::Resistance,
                MethodArg::Both => Method::Both,
            };
            (file, Command::Epsilon { method })
        }
        Cmd::Check { file } => (file, Command::Check),
        Cmd::Oracle { points, file } => (file, Command::Oracle { points }),
    };
    let output = match (cli.machine, cli.decimal) {
        (true, _) => OutputMode::Machine,
        (false, Some(k)) => OutputMode::Decimal(k),
        (false, None) => OutputMode::Exact,
    };
    RunConfig { input, command, divisor: cli.divisor, output }
}

fn main() -> ExitCode {
    let cfg = config(Cli::parse());
    let code = run(&cfg, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code)
}
