//! `feec` — generate, export, and verify computational bases for the
//! tensor product (`q-`), serendipity (`s`), and trimmed serendipity (`s-`)
//! finite element differential form families on `[-1,1]^2` and `[-1,1]^3`.
//!
//! Exit codes: 0 success / verification passed, 1 verification failure,
//! 2 usage error, 3 I/O error.

mod golden;
mod output;
mod selftest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use feec::json::{self, form_from_dto, form_to_dto, FormDto};
use feec::{assemble, check_computational_basis, verify_basis, Face, Family, FamilyId};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

pub enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "feec",
    version,
    about = "Computational bases for finite element differential forms on squares and cubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Quick,
    Full,
}

#[derive(Args)]
struct SpaceArgs {
    /// Element family: q-, s, or s-
    #[arg(long)]
    family: String,
    /// Ambient dimension (2 or 3)
    #[arg(long)]
    n: usize,
    /// Form order (0..=n)
    #[arg(long)]
    k: usize,
    /// Polynomial order (>= 1)
    #[arg(long)]
    r: u32,
}

impl SpaceArgs {
    fn id(&self) -> Result<FamilyId, CliError> {
        let family = Family::from_str(&self.family).map_err(CliError::Usage)?;
        Ok(FamilyId::new(family, self.r, self.k, self.n))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the computational basis of a space
    Basis {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the rank-equality verification for a space
    Verify {
        #[command(flatten)]
        space: SpaceArgs,
        /// Verify the basis stored in this JSON file instead of the
        /// assembled one
        #[arg(long)]
        candidate: Option<PathBuf>,
    },
    /// Verify many spaces and compare against the committed golden data
    Selftest {
        #[arg(long, value_enum, default_value = "quick")]
        scope: Scope,
        /// Rewrite golden/rendered/*.txt from the current output and exit
        #[arg(long)]
        regen_golden: bool,
    },
    /// Apply an operator to a JSON-encoded form
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
}

#[derive(Args)]
struct OpIo {
    /// Read the form from this file (default: stdin)
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Subcommand)]
enum OpCommand {
    /// Exterior derivative
    D {
        #[command(flatten)]
        io: OpIo,
    },
    /// Koszul operator
    Kappa {
        #[command(flatten)]
        io: OpIo,
    },
    /// Trace onto a coordinate face
    Trace {
        #[command(flatten)]
        io: OpIo,
        /// Pinned axis: x, y, or z
        #[arg(long)]
        axis: char,
        /// Pinned value: 1 or -1
        #[arg(long, allow_hyphen_values = true)]
        value: i8,
    },
}

fn write_output(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
    }
}

fn cmd_basis(
    space: &SpaceArgs,
    format: OutputFormat,
    out: Option<&PathBuf>,
) -> Result<u8, CliError> {
    let id = space.id()?;
    let basis = assemble(&id).map_err(|e| CliError::Usage(e.to_string()))?;
    write_output(&output::render_basis(&basis, format), out)?;
    Ok(0)
}

fn cmd_verify(space: &SpaceArgs, candidate: Option<&PathBuf>) -> Result<u8, CliError> {
    let id = space.id()?;
    let report = match candidate {
        None => {
            let basis = assemble(&id).map_err(|e| CliError::Usage(e.to_string()))?;
            let outcome =
                check_computational_basis(&basis).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(offender) = &outcome.first_offender {
                eprintln!("face association failure: {offender}");
            }
            let mut report = outcome.report;
            report.verdict = outcome.passed;
            report
        }
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            let dto: json::BasisDto = serde_json::from_str(&text)
                .map_err(|e| CliError::Usage(format!("malformed candidate file: {e}")))?;
            let forms = json::forms_from_basis_dto(&dto).map_err(CliError::Usage)?;
            let standard =
                feec::verify::standard_span_for(&id).map_err(|e| CliError::Usage(e.to_string()))?;
            verify_basis(&forms, standard.elements()).map_err(|e| CliError::Usage(e.to_string()))?
        }
    };
    let dto = json::report_to_dto(&report, &id);
    println!(
        "{}",
        serde_json::to_string(&dto).expect("report serializes")
    );
    Ok(if report.verdict { 0 } else { 1 })
}

fn read_form(io: &OpIo) -> Result<feec::DifferentialForm, CliError> {
    let text = match &io.input {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let dto: FormDto = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed form JSON: {e}")))?;
    form_from_dto(&dto).map_err(CliError::Usage)
}

fn emit_form(w: &feec::DifferentialForm, format: OutputFormat) -> Result<u8, CliError> {
    match format {
        OutputFormat::Text => println!("{}", feec::render::render_form(w)),
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string(&form_to_dto(w)).expect("form serializes")
        ),
        _ => {
            return Err(CliError::Usage(
                "op supports --format text or json".to_string(),
            ))
        }
    }
    Ok(0)
}

fn cmd_op(op: &OpCommand) -> Result<u8, CliError> {
    match op {
        OpCommand::D { io } => {
            let w = read_form(io)?;
            emit_form(&w.d(), io.format)
        }
        OpCommand::Kappa { io } => {
            let w = read_form(io)?;
            emit_form(&w.koszul(), io.format)
        }
        OpCommand::Trace { io, axis, value } => {
            let w = read_form(io)?;
            let axis = feec::form::axis_index(*axis)
                .ok_or_else(|| CliError::Usage(format!("unknown axis {axis:?}")))?;
            let face = Face::new(w.ambient_dim(), vec![(axis, *value)])
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let traced = w.trace(&face).map_err(|e| CliError::Usage(e.to_string()))?;
            emit_form(&traced, io.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Basis { space, format, out } => cmd_basis(space, *format, out.as_ref()),
        Command::Verify { space, candidate } => cmd_verify(space, candidate.as_ref()),
        Command::Selftest {
            scope,
            regen_golden,
        } => selftest::run(*scope, *regen_golden),
        Command::Op { op } => cmd_op(op),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}
