//! Batch interface over JSON workspaces: check, compose, comc, laws and
//! gallery. Library half of the `entwine` binary.

pub mod commands;
pub mod format;
pub mod workspace;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use entwine_core::laws::Level;
use entwine_core::Field;

use crate::commands::{cmd_check, cmd_comc, cmd_compose, cmd_gallery, cmd_laws, Outcome};
use crate::workspace::Workspace;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Unreadable or inconsistent input: exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// Well-formed input whose mathematics fails: exit code 1.
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Semantic(_) => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "entwine",
    version,
    about = "Check and transform entwining workspaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the built-in example workspace.
    Gallery {
        #[arg(long, default_value = "rational")]
        field: String,
        /// Comma-separated entry names; their dependencies come along.
        #[arg(long)]
        selector: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every applicable checker on the selected entries.
    Check {
        file: PathBuf,
        #[arg(long, default_value = "all")]
        selector: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Compose two 1-cells, or two 2-cells (vertically unless --horizontal).
    Compose {
        file: PathBuf,
        first: String,
        second: String,
        #[arg(long)]
        horizontal: bool,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Image of an entwining, 1-cell or 2-cell in the coring bicategory.
    Comc {
        file: PathBuf,
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Run the law suites up to a level.
    Laws {
        file: PathBuf,
        #[arg(long, default_value = "pseudofunctor")]
        level: String,
        #[arg(long)]
        field: Option<String>,
    },
}

fn parse_field(s: &str) -> Result<Field, CliError> {
    s.parse()
        .map_err(|e| CliError::Input(format!("--field: {e}")))
}

fn load(path: &PathBuf, field: Option<&str>) -> Result<Workspace, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let ws = Workspace::parse(&text)?;
    if let Some(f) = field {
        let f = parse_field(f)?;
        if f != ws.field {
            return Err(CliError::Input(format!(
                "--field {f} but the workspace is over {}",
                ws.field
            )));
        }
    }
    Ok(ws)
}

/// What to print and write for one invocation.
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub file: Option<(PathBuf, String)>,
}

fn execute(cli: &Cli) -> Result<(Outcome, Option<PathBuf>), CliError> {
    match &cli.command {
        Command::Gallery {
            field,
            selector,
            out,
        } => Ok((
            cmd_gallery(parse_field(field)?, selector.as_deref())?,
            out.clone(),
        )),
        Command::Check {
            file,
            selector,
            field,
        } => Ok((cmd_check(&load(file, field.as_deref())?, selector)?, None)),
        Command::Compose {
            file,
            first,
            second,
            horizontal,
            name,
            out,
            field,
        } => {
            let ws = load(file, field.as_deref())?;
            Ok((
                cmd_compose(&ws, first, second, *horizontal, name.as_deref())?,
                out.clone(),
            ))
        }
        Command::Comc {
            file,
            name,
            out,
            field,
        } => Ok((cmd_comc(&load(file, field.as_deref())?, name)?, out.clone())),
        Command::Laws { file, level, field } => {
            let level: Level = level
                .parse()
                .map_err(|e| CliError::Input(format!("--level: {e}")))?;
            Ok((cmd_laws(&load(file, field.as_deref())?, level)?, None))
        }
    }
}

/// Runs one invocation without touching stdout or the filesystem.
pub fn run(cli: &Cli) -> Output {
    match execute(cli) {
        Ok((outcome, out)) => {
            let mut stdout = outcome.report.to_string();
            let code = outcome.exit_code();
            let file = match (outcome.document, out) {
                // a failing output is reported, not written
                (Some(doc), Some(path)) if code == 0 => Some((path, doc)),
                (Some(doc), None) if code == 0 => {
                    stdout.push_str(&doc);
                    None
                }
                _ => None,
            };
            Output {
                code,
                stdout,
                stderr: String::new(),
                file,
            }
        }
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            file: None,
        },
    }
}
