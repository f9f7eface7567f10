//! polyapprox: approximate convex-polytope operations in fixed dimension.
//!
//! Subcommands: gen, build, intersect, minksum, width, kernel, bench,
//! selftest. Machine-readable JSON goes to stdout (byte-identical across
//! runs for a fixed seed); timings and progress go to stderr. Exit code 0 on
//! success, 1 on error; verdicts are data, not exit codes.

mod commands;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use commands::{GenArgs, OutputFormat, SumAlgo};
use polyapprox_oracles::gen::InstanceKind;
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "polyapprox", version, about = "approximate convex polytope operations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct IoArgs {
    /// Input file(s); repeat for operations on two polytopes.
    #[arg(long = "in", value_name = "PATH")]
    input: Vec<PathBuf>,
    /// Output path (stdout if omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a test instance (sphere-shell, rotated-box, simplex,
    /// random-hull, near-touching-pair).
    Gen {
        kind: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pair margin in units of eps * max directional width (pairs only;
        /// nonpositive margins give robustly intersecting pairs).
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long)]
        eps: Option<f64>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Build a directional-width index for a point polytope.
    Build {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        eps: f64,
        /// Net constant (kernel resolution is net-constant * sqrt(eps)).
        #[arg(long, default_value_t = 0.5)]
        net_constant: f64,
        /// Attach the per-cell bucket accelerator.
        #[arg(long)]
        buckets: bool,
    },
    /// Kernel statistics for a point polytope.
    Kernel {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 0.5)]
        net_constant: f64,
    },
    /// eps-approximate intersection of two polytopes (a pair file, or two
    /// polytope files).
    Intersect {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        eps: f64,
    },
    /// eps-approximate Minkowski sum of two polytopes.
    Minksum {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        eps: f64,
        /// dudley (halfspace output) or bi (point output).
        #[arg(long, default_value = "dudley")]
        algo: String,
        /// json or svg (svg is 2D only).
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// eps-approximate width of a point polytope.
    Width {
        #[command(flatten)]
        io: IoArgs,
        #[arg(long)]
        eps: f64,
    },
    /// Kernel and Dudley output sizes over an eps sweep.
    Bench {
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 2000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite and report per-criterion results.
    Selftest {
        /// Reduced instance counts (for smoke runs).
        #[arg(long)]
        quick: bool,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

fn read_inputs(io: &IoArgs, expected: std::ops::RangeInclusive<usize>) -> Result<Vec<String>> {
    if !expected.contains(&io.input.len()) {
        bail!(
            "expected {} input file(s) via --in, got {}",
            if expected.start() == expected.end() {
                format!("{}", expected.start())
            } else {
                format!("{} to {}", expected.start(), expected.end())
            },
            io.input.len()
        );
    }
    io.input
        .iter()
        .map(|p| {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        })
        .collect()
}

fn emit(payload: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            kind,
            dim,
            n,
            seed,
            margin,
            eps,
            out,
        } => {
            let kind: InstanceKind = kind.parse().map_err(anyhow::Error::msg)?;
            let payload = commands::cmd_gen(&GenArgs {
                kind,
                dim,
                n,
                seed,
                margin,
                eps,
            })?;
            emit(&payload, &out)
        }
        Command::Build {
            io,
            eps,
            net_constant,
            buckets,
        } => {
            let inputs = read_inputs(&io, 1..=1)?;
            let payload = commands::cmd_build(&inputs[0], eps, net_constant, buckets)?;
            emit(&payload, &io.out)
        }
        Command::Kernel {
            io,
            eps,
            net_constant,
        } => {
            let inputs = read_inputs(&io, 1..=1)?;
            let payload = commands::cmd_kernel(&inputs[0], eps, net_constant)?;
            emit(&payload, &io.out)
        }
        Command::Intersect { io, eps } => {
            let inputs = read_inputs(&io, 1..=2)?;
            let payload = commands::cmd_intersect(&inputs, eps)?;
            emit(&payload, &io.out)
        }
        Command::Minksum {
            io,
            eps,
            algo,
            format,
        } => {
            let inputs = read_inputs(&io, 1..=2)?;
            let algo: SumAlgo = commands::parse_algo(&algo)?;
            let format: OutputFormat = commands::parse_format(&format)?;
            let payload = commands::cmd_minksum(&inputs, eps, algo, format)?;
            emit(&payload, &io.out)
        }
        Command::Width { io, eps } => {
            let inputs = read_inputs(&io, 1..=1)?;
            let payload = commands::cmd_width(&inputs[0], eps)?;
            emit(&payload, &io.out)
        }
        Command::Bench { dim, n, seed, out } => {
            let payload = commands::cmd_bench(dim, n, seed)?;
            emit(&payload, &out)
        }
        Command::Selftest { quick, out } => {
            let payload = commands::cmd_selftest(quick)?;
            emit(&payload, &out)
        }
    }
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{{\"error\": {}}}", serde_json::to_string(&format!("{e:#}")).unwrap());
        std::process::exit(1);
    }
}
