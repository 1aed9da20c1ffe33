//! `partnet`: partition counts, divisor traces and network export.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use partnet::divisor::{enumerate_distinct_partitions, trace};
use partnet::enumeration::{build_partition_network, enumerate_partitions};
use partnet::evector::{divisors_from_evector_with, e_vector_in};
use partnet::export::{to_dot, to_json, to_text};
use partnet::network::DEFAULT_NODE_BUDGET;
use partnet::verify::{self, Fault, Methods};
use partnet::{counting, divisor, oracles, sigma, Budget, Error};

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "partnet", version, about = "Integer partitions, divisor traces and jump networks")]
struct Cli {
    /// Maximum nodes (or E-vector entries) a command may materialize.
    #[arg(long, global = true, env = "PARTNET_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET,
          value_parser = parse_budget)]
    node_budget: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Number of partitions p(n).
    P {
        n: u64,
        #[arg(long, value_enum, default_value_t = PMethod::Recursive)]
        method: PMethod,
    },
    /// Number of divisors d(n).
    D {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = DMethod::Trace)]
        method: DMethod,
    },
    /// Sum of divisors sigma1(n).
    Sigma {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = SigmaMethod::Trace)]
        method: SigmaMethod,
    },
    /// Stream partitions of n, one per line.
    Enum {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        /// Only partitions into distinct parts.
        #[arg(long)]
        distinct: bool,
    },
    /// Write a network as DOT, JSON or a plain node list.
    Export {
        #[arg(long, value_enum)]
        kind: Kind,
        /// n, a1_max or n_max depending on the kind.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every method against the classical oracles.
    Verify {
        #[arg(long, default_value_t = 60)]
        max: u64,
        /// Replace one method with an off-by-one mutant.
        #[arg(long, hide = true, value_parser = parse_fault)]
        inject_fault: Option<Fault>,
    },
    /// Wall-clock timings over a size ladder.
    Bench {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PMethod {
    Recursive,
    Pentagonal,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum DMethod {
    Trace,
    Evector,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum SigmaMethod {
    Trace,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Partition,
    PartitionAnnotated,
    Divisor,
    Sigma,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    P,
    Trace,
    Evector,
    All,
}

fn parse_budget(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_fault(s: &str) -> Result<Fault, String> {
    Fault::parse(s).ok_or_else(|| {
        let names: Vec<&str> = Fault::ALL.iter().map(|f| f.as_str()).collect();
        format!("unknown method, expected one of {}", names.join(", "))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.node_budget);
    match run(cli.command, budget) {
        Ok(code) => code,
        Err(Failure::Lib(e @ Error::LimitExceeded { .. })) => {
            eprintln!("partnet: {e}");
            ExitCode::from(EXIT_BUDGET)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("partnet: {e}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("partnet: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn run(command: Command, budget: Budget) -> Result<ExitCode, Failure> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match command {
        Command::P { n, method } => {
            let value = match method {
                PMethod::Recursive => counting::p(n),
                PMethod::Pentagonal => oracles::p_pentagonal(n),
                PMethod::Enumerate if n == 0 => 1u8.into(),
                PMethod::Enumerate => enumerate_partitions(n).count().into(),
            };
            writeln!(out, "{value}")?;
        }
        Command::D { n, method } => {
            let value = match method {
                DMethod::Trace => trace(n) as u64,
                DMethod::Evector => {
                    let n = usize::try_from(n).map_err(|_| Error::Overflow("n"))?;
                    divisors_from_evector_with(n, budget)?[n - 1]
                }
                DMethod::Oracle => oracles::divisor_stats_trial(n).0,
            };
            writeln!(out, "{value}")?;
        }
        Command::Sigma { n, method } => {
            let value = match method {
                SigmaMethod::Trace => sigma::sigma1(n),
                SigmaMethod::Oracle => oracles::divisor_stats_trial(n).1,
            };
            writeln!(out, "{value}")?;
        }
        Command::Enum { n, distinct } => {
            if distinct {
                for term in enumerate_distinct_partitions(n) {
                    writeln!(out, "{}", term.partition)?;
                }
            } else {
                for part in enumerate_partitions(n) {
                    writeln!(out, "{part}")?;
                }
            }
        }
        Command::Export {
            kind,
            n,
            format,
            out: path,
        } => {
            let net = match kind {
                Kind::Partition => build_partition_network(n, false, budget)?,
                Kind::PartitionAnnotated => build_partition_network(n, true, budget)?,
                Kind::Divisor => divisor::build_divisor_network(n, budget)?,
                Kind::Sigma => sigma::build_sigma_network(n, budget)?,
            };
            let mut text = match format {
                Format::Dot => to_dot(&net),
                Format::Json => to_json(&net),
                Format::Text => to_text(&net),
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match path {
                Some(path) => File::create(path)?.write_all(text.as_bytes())?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify { max, inject_fault } => {
            let methods = match inject_fault {
                Some(fault) => Methods::with_fault(fault),
                None => Methods::standard(),
            };
            let report = verify::run(max, &methods);
            write!(out, "{report}")?;
            out.flush()?;
            if !report.passed() {
                return Ok(ExitCode::from(EXIT_MISMATCH));
            }
        }
        Command::Bench { suite } => bench(suite, budget, &mut out)?,
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn bench(suite: Suite, budget: Budget, out: &mut impl Write) -> Result<(), Failure> {
    let wants = |s: Suite| suite == Suite::All || suite == s;
    writeln!(out, "suite\tn\tmillis")?;
    if wants(Suite::P) {
        for n in [100, 200, 400, 800] {
            let start = Instant::now();
            let _ = counting::p(n);
            report(out, "p", n, start)?;
        }
    }
    if wants(Suite::Trace) {
        for n in [20, 40, 60, 80] {
            let start = Instant::now();
            let _ = trace(n);
            report(out, "trace", n, start)?;
        }
    }
    if wants(Suite::Evector) {
        for n in [100, 200, 400, 800] {
            let start = Instant::now();
            let _ = e_vector_in::<std::num::Wrapping<i64>>(n, budget)?;
            report(out, "evector", n as u64, start)?;
        }
    }
    Ok(())
}

fn report(out: &mut impl Write, suite: &str, n: u64, start: Instant) -> io::Result<()> {
    writeln!(out, "{suite}\t{n}\t{:.3}", start.elapsed().as_secs_f64() * 1e3)
}
