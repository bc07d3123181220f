//! `hopftrace`: reductivity, integrals, Fourier transforms and blocks of finite
//! group schemes described in JSON.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopftrace::linalg::Field;
use hopftrace_cli::commands::{self, Failure, Loaded};
use hopftrace_cli::report;

#[derive(Parser)]
#[command(name = "hopftrace", version, about = "Exact analysis of finite group schemes")]
struct Cli {
    /// Base field, `q` or `fp:<p>`; overrides the descriptor's field.
    #[arg(long, global = true, value_parser = commands::parse_field_flag)]
    field: Option<Field>,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse Hopf algebras of larger dimension.
    #[arg(long, global = true, default_value_t = 64)]
    max_dim: usize,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reductivity, trace-form rank, integral and Parseval check.
    Check { descriptor: PathBuf },
    /// Gram matrix of the trace form on the dual basis.
    Gram { descriptor: PathBuf },
    /// The space of integrals and the normalized integral.
    Integral { descriptor: PathBuf },
    /// Fourier transform of an element, given as a basis label or `a,b,c,...`.
    Fourier { descriptor: PathBuf, element: String },
    /// Block decomposition of the dual algebra (prime fields only).
    Blocks { descriptor: PathBuf },
    /// Characters, invariants and the integral of the character for comodules.
    Chars { descriptor: PathBuf, comodules: PathBuf },
    /// Integral, polarity and Fourier transform of a diagonalizable group.
    Diag {
        descriptor: PathBuf,
        /// JSON file `{"support": [{"at": [..], "value": ".."}, ...]}`.
        #[arg(long)]
        functional: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn run(cli: &Cli) -> Result<report::AnalysisReport, Failure> {
    let load = |path: &Path| -> Result<Loaded, Failure> { commands::load(&read(path)?, cli.field, cli.max_dim) };
    match &cli.command {
        Command::Check { descriptor } => commands::check(&load(descriptor)?),
        Command::Gram { descriptor } => commands::gram(&load(descriptor)?),
        Command::Integral { descriptor } => commands::integral(&load(descriptor)?),
        Command::Fourier { descriptor, element } => commands::fourier_cmd(&load(descriptor)?, element),
        Command::Blocks { descriptor } => commands::blocks(&load(descriptor)?),
        Command::Chars { descriptor, comodules } => {
            let loaded = load(descriptor)?;
            commands::chars(&loaded, &read(comodules)?)
        }
        Command::Diag { descriptor, functional } => {
            let loaded = load(descriptor)?;
            let text = functional.as_deref().map(read).transpose()?;
            commands::diag(&loaded, text.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // usage errors count as malformed input; help and version are not errors
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(r) => {
            let text = if cli.json { r.to_json() } else { r.to_text() };
            match &cli.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            match &failure {
                Failure::Input(m) | Failure::Unsupported(m) => eprintln!("error: {m}"),
                Failure::Axioms(m, report) => {
                    eprintln!("error: {m}");
                    if let Some(report) = report {
                        for check in &report.checks {
                            eprintln!("  {}: {}", check.axiom, if check.passed { "pass" } else { "FAIL" });
                        }
                        if cli.json {
                            println!("{}", serde_json::to_string_pretty(report).expect("report serializes"));
                        }
                    }
                }
            }
            ExitCode::from(failure.exit_code() as u8)
        }
    }
}
