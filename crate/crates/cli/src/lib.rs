//! Batch front end: each invocation runs one job and prints JSON.
//!
//! Exit codes: 0 on success whatever the verdict, 2 for malformed input,
//! 3 when a table would exceed the resource cap.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use pgst_core::dynamics::{default_samples, ScanSummary};
use pgst_core::{
    build_witness, check_certificate, classify_corners, decide_pgst, find_time_reaching,
    laplacian_corner_verdict, scan_fidelity, spectrum_table, Certificate, CertificateCheck,
    CornerPair, EigenIndex, Hamiltonian, ProductGraph, WitnessCase,
};
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pgst_core::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(pgst_core::Error::ResourceCap { .. }) => EXIT_RESOURCE,
            _ => EXIT_MALFORMED,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pgst", version, about = "State transfer between corners of path products")]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify transfer among all corners from the factor sizes alone.
    Classify(GraphArgs),
    /// Decide transfer for one corner pair, with a certificate when it fails.
    Decide(PairArgs),
    /// Check a certificate file (stdin when no path is given).
    Certify {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a closed-form certificate for one witness family.
    Witness {
        /// prime-3mod4, prime-5mod8, twice-prime-3mod4, twice-prime-3mod4-with-prime,
        /// prime-3mod4-with-twice-prime or prime-5mod8-with-twice-prime
        #[arg(long)]
        case: WitnessCase,
        /// The two primes, e.g. `7,5`.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Grouped product spectrum.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Include the exact value of each eigenvalue.
        #[arg(long)]
        exact: bool,
    },
    /// Sample the corner fidelity, write the CSV trace and print a summary.
    Scan {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        t_max: f64,
        /// Grid size; defaults to 1000 samples per unit time.
        #[arg(long)]
        samples: Option<usize>,
        /// Also report the earliest refined time reaching this fidelity.
        #[arg(long)]
        target: Option<f64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Path sizes, e.g. `3,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub factors: Vec<usize>,
    #[arg(long, default_value = "adjacency")]
    pub hamiltonian: Hamiltonian,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Corner masks `source/target`, one digit per factor, 1 = last vertex.
    #[arg(long, required = true)]
    pub pair: String,
}

impl GraphArgs {
    fn build(&self) -> Result<ProductGraph, CliError> {
        Ok(ProductGraph::new(&self.factors, self.hamiltonian)?)
    }
}

impl PairArgs {
    fn build(&self) -> Result<(ProductGraph, CornerPair), CliError> {
        let g = self.graph.build()?;
        let pair = CornerPair::parse(&self.pair)?;
        pair.check(&g)?;
        Ok((g, pair))
    }
}

/// Parses `args` (program name first) and runs the job.
pub fn main_with_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match JobSpec::try_parse_from(args) {
        Ok(spec) => match run(&spec, out) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            if e.use_stderr() {
                EXIT_MALFORMED
            } else {
                EXIT_OK
            }
        }
    }
}

pub fn run(spec: &JobSpec, out: &mut dyn Write) -> Result<(), CliError> {
    match &spec.command {
        Command::Classify(a) => {
            let g = a.build()?;
            match g.hamiltonian() {
                Hamiltonian::Adjacency => emit(&classify_corners(&g)?, a.output.as_deref(), out),
                Hamiltonian::Laplacian => {
                    emit(&laplacian_corner_verdict(&g)?, a.output.as_deref(), out)
                }
            }
        }
        Command::Decide(a) => {
            let (g, pair) = a.build()?;
            let d = decide_pgst(&g, &pair)?;
            emit(&d, a.graph.output.as_deref(), out)
        }
        Command::Certify { input, output } => {
            let text = match input {
                Some(p) => fs::read_to_string(p)?,
                None => {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s)?;
                    s
                }
            };
            let v = match Certificate::from_json(&text) {
                Ok(c) => {
                    let check = check_certificate(&c);
                    CertifyReport {
                        valid: check.valid(),
                        check: Some(check),
                        error: None,
                    }
                }
                Err(e) => CertifyReport {
                    valid: false,
                    check: None,
                    error: Some(e.to_string()),
                },
            };
            emit(&v, output.as_deref(), out)
        }
        Command::Witness { case, primes, output } => {
            let &[p1, p2] = primes.as_slice() else {
                return Err(CliError::Usage(format!(
                    "--primes takes exactly two values, got {}",
                    primes.len()
                )));
            };
            let c = build_witness(*case, p1, p2)?;
            write_text(&c.to_json(), output.as_deref(), out)
        }
        Command::Spectrum { graph, exact } => {
            let g = graph.build()?;
            let t = spectrum_table(&g)?;
            let groups = t
                .groups()
                .iter()
                .enumerate()
                .map(|(i, grp)| GroupDoc {
                    value: t.exact_value(i).to_f64() + 0.0,
                    exact: exact.then(|| t.exact_value(i).to_string()),
                    multiplicity: grp.multiplicity(),
                    members: &grp.members,
                })
                .collect();
            let v = SpectrumDoc {
                factors: g.sizes(),
                hamiltonian: g.hamiltonian(),
                indices: t.index_count(),
                distinct: t.distinct_count(),
                simple: t.is_simple(),
                groups,
            };
            emit(&v, graph.output.as_deref(), out)
        }
        Command::Scan {
            pair,
            t_max,
            samples,
            target,
            csv,
        } => {
            let (g, p) = pair.build()?;
            let n = samples.unwrap_or_else(|| default_samples(*t_max));
            let trace = scan_fidelity::<f64>(&g, &p, *t_max, n)?;
            if let Some(path) = csv {
                let mut w = io::BufWriter::new(fs::File::create(path)?);
                trace.write_csv(&mut w)?;
                w.flush()?;
            }
            let reaching = match *target {
                Some(target) => Some(TargetDoc {
                    target,
                    time: find_time_reaching::<f64>(&g, &p, target, *t_max)?,
                }),
                None => None,
            };
            let v = ScanDoc {
                summary: trace.summary(),
                reaching,
            };
            emit(&v, pair.graph.output.as_deref(), out)
        }
    }
}

#[derive(Serialize)]
struct CertifyReport {
    valid: bool,
    #[serde(flatten)]
    check: Option<CertificateCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct SpectrumDoc<'a> {
    factors: Vec<usize>,
    hamiltonian: Hamiltonian,
    indices: usize,
    distinct: usize,
    simple: bool,
    groups: Vec<GroupDoc<'a>>,
}

#[derive(Serialize)]
struct GroupDoc<'a> {
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    exact: Option<String>,
    multiplicity: usize,
    members: &'a [EigenIndex],
}

#[derive(Serialize)]
struct ScanDoc {
    #[serde(flatten)]
    summary: ScanSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    reaching: Option<TargetDoc>,
}

#[derive(Serialize)]
struct TargetDoc {
    target: f64,
    time: Option<f64>,
}

fn emit<T: Serialize>(v: &T, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    write_text(&serde_json::to_string(v).expect("serializable"), path, out)
}

fn write_text(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}
