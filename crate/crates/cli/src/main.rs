mod config;
mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use mnsd_core::pipeline::ScanOptions;
use mnsd_core::{
    compare_reference, DiscrepancyReport, Engine, EngineConfig, F2Mode, Mode, TypeVector,
    FIXTURE_DIMENSIONS,
};

use config::{FileConfig, CONFIG_ENV};
use render::Format;

const DEFAULT_MAX: u64 = 2025;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] mnsd_core::Error),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use mnsd_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Core(E::Config(_)) => 1,
            CliError::Core(
                E::InvalidInput(_) | E::EvenDimension(_) | E::Parse { .. } | E::NotFound(_),
            ) => 2,
            CliError::Core(E::NotSupported(_) | E::Internal(_)) | CliError::Internal(_) => 4,
        }
    }
}

/// Classify maximally non-self-dual modular categories by type.
#[derive(Parser, Debug)]
#[command(name = "mnsd", version)]
struct Cli {
    /// Defaults file with key=value lines.
    #[arg(long, global = true, env = CONFIG_ENV)]
    config: Option<PathBuf>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify the types of one odd dimension.
    Classify(ClassifyArgs),
    /// Classify every odd dimension below a bound.
    Scan(ScanArgs),
    /// Show every filter's verdict on one type.
    Explain(ExplainArgs),
    /// List the filter catalog with citations.
    Filters(FormatArgs),
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Filter set: basic or full.
    #[arg(long, value_parser = parse_mode)]
    filters: Option<Mode>,
    /// Dimension-3 filter reading: legacy or strict.
    #[arg(long, value_parser = parse_f2)]
    f2_mode: Option<F2Mode>,
    #[command(flatten)]
    format: FormatArgs,
    /// Include elapsed times.
    #[arg(long)]
    timing: bool,
    /// Compare with the embedded reference lists; exit 3 on disagreement.
    #[arg(long, visible_alias = "compare-paper")]
    compare_reference: bool,
}

#[derive(Args, Debug)]
struct FormatArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long)]
    dim: u64,
    /// List every rejected type with all rejecting verdicts.
    #[arg(long)]
    explain: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// Exclusive upper bound.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max: Option<u64>,
    /// Run the full pipeline even where the prime-power shape settles a dimension.
    #[arg(long)]
    no_shortcut: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct ExplainArgs {
    #[arg(long)]
    dim: u64,
    /// Canonical type string, e.g. "(1,9;3,26)".
    #[arg(long = "type")]
    type_vector: String,
    #[arg(long, value_parser = parse_f2)]
    f2_mode: Option<F2Mode>,
    #[command(flatten)]
    format: FormatArgs,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: mnsd_core::Error| e.to_string())
}

fn parse_f2(s: &str) -> Result<F2Mode, String> {
    s.parse().map_err(|e: mnsd_core::Error| e.to_string())
}

struct Settings {
    mode: Mode,
    f2_mode: F2Mode,
    format: Format,
    timing: bool,
}

impl Settings {
    fn resolve(file: &FileConfig, run: &RunArgs) -> Self {
        Settings {
            mode: run.filters.or(file.filters).unwrap_or(Mode::Full),
            f2_mode: run.f2_mode.or(file.f2_mode).unwrap_or_default(),
            format: run.format.format.or(file.format).unwrap_or_default(),
            timing: run.timing || file.timing.unwrap_or(false),
        }
    }
}

/// Rendered text plus whether a reference comparison disagreed.
struct Outcome {
    text: String,
    mismatch: bool,
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    match &cli.command {
        Command::Classify(args) => {
            let s = Settings::resolve(&file, &args.run);
            let engine = Engine::new(EngineConfig {
                f2_mode: s.f2_mode,
                exhaustive: args.explain,
                ..EngineConfig::default()
            });
            let report = engine.classify(args.dim, s.mode)?;
            let discrepancy = if args.run.compare_reference {
                Some(compare_reference(&report)?)
            } else {
                None
            };
            let mismatch = discrepancy.as_ref().is_some_and(|d| !d.is_empty());
            let text = render::classify(
                &report,
                discrepancy.as_ref(),
                s.format,
                args.explain,
                s.timing,
            )?;
            Ok(Outcome { text, mismatch })
        }
        Command::Scan(args) => {
            let s = Settings::resolve(&file, &args.run);
            let max = args.max.or(file.max).unwrap_or(DEFAULT_MAX);
            let engine = Engine::with_f2_mode(s.f2_mode);
            let start = Instant::now();
            let reports = engine.scan(
                max,
                ScanOptions {
                    mode: s.mode,
                    shortcut: !args.no_shortcut,
                },
            )?;
            let elapsed = start.elapsed();
            let reports: Vec<_> = reports.iter().map(|r| r.as_ref()).collect();
            let discrepancies: Option<Vec<DiscrepancyReport>> = if args.run.compare_reference {
                Some(
                    reports
                        .iter()
                        .filter(|r| FIXTURE_DIMENSIONS.contains(&r.dimension))
                        .map(|r| compare_reference(r))
                        .collect::<Result<_, _>>()?,
                )
            } else {
                None
            };
            let mismatch = discrepancies
                .as_ref()
                .is_some_and(|ds| ds.iter().any(|d| !d.is_empty()));
            let view = render::ScanView {
                max,
                mode: s.mode,
                f2_mode: s.f2_mode,
                reports: &reports,
                discrepancies: discrepancies.as_deref(),
                elapsed,
            };
            let text = render::scan(&view, s.format, s.timing)?;
            Ok(Outcome { text, mismatch })
        }
        Command::Explain(args) => {
            let t: TypeVector = args.type_vector.parse()?;
            let engine = Engine::with_f2_mode(args.f2_mode.or(file.f2_mode).unwrap_or_default());
            let verdicts = engine.explain(args.dim, &t)?;
            let format = args.format.format.or(file.format).unwrap_or_default();
            let text = render::explain(args.dim, &t, &verdicts, format)?;
            Ok(Outcome {
                text,
                mismatch: false,
            })
        }
        Command::Filters(args) => {
            let text = render::filters(args.format.or(file.format).unwrap_or_default())?;
            Ok(Outcome {
                text,
                mismatch: false,
            })
        }
    }
}

fn emit(path: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Internal(format!("cannot write to stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|outcome| {
        emit(cli.output.as_ref(), &outcome.text)?;
        Ok(outcome.mismatch)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("error: engine output disagrees with the reference lists");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
