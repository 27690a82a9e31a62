mod bench;
mod impls;
mod space;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rmqkit::dataset::{self, Distribution};
use rmqkit::Universe;

use crate::impls::{Fault, Impl};

#[derive(Parser)]
#[command(
    name = "rmqkit",
    version,
    about = "Range minimum query structures: generate, verify, measure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a deterministic dataset.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Dist::Uniform)]
        dist: Dist,
        #[arg(long, env = "RMQKIT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Text)]
        format: FileFormat,
    },
    /// Compare implementations against a linear scan.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Impl::ALL)]
        impls: Vec<Impl>,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Number of random queries in random mode.
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, env = "RMQKIT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Time builds and seeded random queries; write a CSV report.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = Impl::ALL)]
        impls: Vec<Impl>,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, env = "RMQKIT_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Answer a single range minimum query.
    Query {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long = "impl", value_enum, default_value_t = Impl::General)]
        implementation: Impl,
    },
    /// Print per-level storage of the unpacked, packed and general indexes.
    Space {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Dist {
    Uniform,
    Sorted,
    Reverse,
    Constant,
    Sawtooth,
}

impl From<Dist> for Distribution {
    fn from(d: Dist) -> Self {
        match d {
            Dist::Uniform => Distribution::Uniform,
            Dist::Sorted => Distribution::Sorted,
            Dist::Reverse => Distribution::Reverse,
            Dist::Constant => Distribution::Constant,
            Dist::Sawtooth => Distribution::Sawtooth,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Text,
    Bin,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Random,
}

fn load(path: &PathBuf) -> Result<Vec<rmqkit::Element>> {
    dataset::load(path).with_context(|| format!("loading {}", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            n,
            dist,
            seed,
            out,
            format,
        } => {
            let values = dataset::generate(n, dist.into(), seed, Universe::default())?;
            let format = match format {
                FileFormat::Text => dataset::Format::Text,
                FileFormat::Bin => dataset::Format::Bin,
            };
            dataset::save(&out, &values, format)
                .with_context(|| format!("writing {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            impls,
            mode,
            queries,
            seed,
            inject_fault,
        } => {
            let values = load(&input)?;
            let ok = verify::run(&values, &impls, mode, queries, seed, inject_fault)?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Bench {
            input,
            impls,
            queries,
            seed,
            out,
        } => {
            let values = load(&input)?;
            let report = bench::run(&values, &impls, queries, seed)?;
            std::fs::write(&out, report.to_csv())
                .with_context(|| format!("writing {}", out.display()))?;
            if !report.checksums_agree() {
                eprintln!("checksums differ across implementations");
                return Ok(ExitCode::FAILURE);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Query {
            input,
            i,
            j,
            implementation,
        } => {
            let values = load(&input)?;
            if let Some(reason) = implementation.skip_reason(values.len()) {
                bail!("{implementation} cannot be built: {reason}");
            }
            let r = implementation.build(&values, None)?;
            println!("min={}", r.range_min(i, j)?);
            if let Some(pos) = r.range_argmin(i, j) {
                println!("pos={}", pos?);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Space { input } => {
            let values = load(&input)?;
            print!("{}", space::render(&values)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
