use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use symalg::construct::{self, Kind, Params};
use symalg::format::{self, OutputFormat};
use symalg::predicates::Space;
use symalg::verify::{self, Suite, SuiteConfig};
use symalg::{classify, decompose, to_block, Error, Matrix, Scalar, SplitKind};

#[derive(Parser)]
#[command(name = "symalg", version, about = "Exact symmetry classification, construction and decomposition of square matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report every symmetry property, space and composite flag.
    Classify {
        path: PathBuf,
        #[arg(long, default_value = "json", value_parser = ["json", "pretty"])]
        format: String,
    },
    /// Split into the two graded parts of a direct sum.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        split: SplitKind,
        /// Write the parts to `<prefix>.even.json` and `<prefix>.odd.json` instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Print the block representation `X M X`.
    Block {
        path: PathBuf,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Build a member of a symmetry space.
    Construct {
        #[arg(long = "type")]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "SYMALG_SEED", default_value_t = 0)]
        seed: u64,
        /// Adds `w E_n` (for odd-n S, the block weight parameter).
        #[arg(long)]
        w: Option<Scalar>,
        /// Explicit block parameters as JSON instead of random ones.
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: OutputFormat,
    },
    /// Run verification suites and print a JSON report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, env = "SYMALG_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of a space from its constraint system.
    Dim {
        #[arg(long)]
        space: Space,
        #[arg(long)]
        n: usize,
        #[arg(long, env = "SYMALG_SEED", default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Error(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Error(e.into())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn construct_matrix(kind: Kind, n: usize, seed: u64, w: Option<&Scalar>, params: Option<&Path>) -> Result<Matrix, Error> {
    if let Some(path) = params {
        let p: Params = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        if p.kind() != kind {
            return Err(Error::Precondition(format!("parameter form is for type `{}`, not `{kind}`", p.kind())));
        }
        let m = construct::build(&p, n)?;
        return Ok(match w {
            Some(w) => &m + &Matrix::ones(n, n).scale(w),
            None => m,
        });
    }
    let mut rng = verify::trial_rng(seed, 0);
    let mut p = construct::random_params(kind, n, &mut rng)?;
    let mut extra = w.cloned();
    if let (Params::SOdd { weight, .. }, Some(w)) = (&mut p, &extra) {
        *weight = w.clone();
        extra = None;
    }
    let m = construct::build(&p, n)?;
    Ok(match extra {
        Some(w) => &m + &Matrix::ones(n, n).scale(&w),
        None => m,
    })
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { path, format } => {
            let m = format::read_matrix(&path)?;
            let report = classify(&m)?;
            if format == "pretty" {
                print!("{}", symalg::predicates::render_report(&report));
            } else {
                print!("{}", json(&report));
            }
        }
        Command::Decompose { path, split, out, format } => {
            let m = format::read_matrix(&path)?;
            let pair = decompose::split(&m, split)?;
            match out {
                Some(prefix) => {
                    let ext = match format {
                        OutputFormat::Csv => "csv",
                        OutputFormat::Pretty => "txt",
                        OutputFormat::Json => "json",
                    };
                    let stem = prefix.to_string_lossy();
                    format::write_matrix(Path::new(&format!("{stem}.even.{ext}")), &pair.even_part, format)?;
                    format::write_matrix(Path::new(&format!("{stem}.odd.{ext}")), &pair.odd_part, format)?;
                }
                None if format == OutputFormat::Json => print!("{}", json(&pair)),
                None => {
                    println!("even part:");
                    print!("{}", format::render(&pair.even_part, format)?);
                    println!("odd part:");
                    print!("{}", format::render(&pair.odd_part, format)?);
                }
            }
        }
        Command::Block { path, format } => {
            let m = format::read_matrix(&path)?;
            print!("{}", format::render(to_block(&m)?.conjugate(), format)?);
        }
        Command::Construct { kind, n, seed, w, params, out, format } => {
            let m = construct_matrix(kind, n, seed, w.as_ref(), params.as_deref())?;
            emit(&format::render(&m, format)?, out.as_deref())?;
        }
        Command::Verify { suite, n_max, trials, seed } => {
            if n_max < 2 || trials == 0 {
                return Err(Error::Precondition("need --n-max ≥ 2 and --trials ≥ 1".into()).into());
            }
            let report = verify::run_suite(suite, &SuiteConfig { n_max, trials, seed })?;
            print!("{}", json(&report));
            if !report.passed {
                return Err(Failure::Verification);
            }
        }
        Command::Dim { space, n, seed } => {
            let probe = verify::dimension_probe(space, n, seed)?;
            print!("{}", json(&probe));
            if !probe.passed {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(4),
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Precondition(_) | Error::OddDimension { .. } => 3,
                Error::Inconsistent(_) => 4,
                _ => 2,
            })
        }
    }
}
