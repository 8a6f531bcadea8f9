//! Command-line front end for `folcalc-core`: input files, reports and
//! subcommands.

pub mod args;
pub mod commands;
pub mod document;
pub mod report;

use std::path::Path;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use rayon::prelude::*;

use args::{Cli, Command};
use commands::{execute, CliError, Inputs};
use document::{InputDocument, MAX_FILE_BYTES};
use report::{ErrorInfo, Report, Status};

/// Everything one invocation produces.
#[derive(Clone, Debug, PartialEq)]
pub struct Execution {
    pub reports: Vec<Report>,
    pub output: String,
    pub exit_code: i32,
}

fn load(path: &Path) -> Result<InputDocument, CliError> {
    let meta = std::fs::metadata(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    if meta.len() > MAX_FILE_BYTES as u64 {
        return Err(CliError::Resource(format!("{}: file exceeds {MAX_FILE_BYTES} bytes", path.display())));
    }
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes).map_err(|_| CliError::Invalid(format!("{}: not valid UTF-8", path.display())))?;
    Ok(InputDocument::parse(&text)?)
}

fn run_one(cmd: &Command, path: Option<&Path>) -> Report {
    let start = Instant::now();
    let mut report = Report::new(cmd.name(), path.map(|p| p.display().to_string()));
    let doc = match path.map(load).transpose() {
        Ok(d) => d,
        Err(e) => {
            report.status = e.status();
            report.error = Some(e.info());
            report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
            return report;
        }
    };
    let mut inputs = Inputs::new(doc.as_ref());
    match execute(cmd, &mut inputs) {
        Ok(out) => {
            report.result = out.result;
            report.warnings = out.warnings;
            report.status = out.status;
        }
        Err(e) => {
            report.status = e.status();
            report.error = Some(e.info());
        }
    }
    report.inputs_echo = inputs.echo;
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Overall exit code: the most severe report status.
pub fn exit_code_of(reports: &[Report]) -> i32 {
    reports.iter().map(|r| r.status).max().unwrap_or(Status::Ok).exit_code()
}

pub fn render(reports: &[Report], json: bool) -> String {
    if json {
        match reports {
            [one] => one.to_json() + "\n",
            many => serde_json::to_string_pretty(many).expect("reports serialize") + "\n",
        }
    } else {
        reports.iter().map(Report::render_text).collect()
    }
}

/// Parses `argv` (program name first) and runs the command. Files are
/// processed in parallel; reports keep the input order.
pub fn run_command<I, T>(argv: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand) && e.exit_code() == 0 {
                return Execution { reports: Vec::new(), output: e.to_string(), exit_code: 0 };
            }
            let mut report = Report::new("usage", None);
            report.status = Status::InvalidInput;
            report.error = Some(ErrorInfo { message: e.kind().to_string(), line: None, column: None });
            let json = argv.iter().any(|a| a == "--json");
            let output = if json { render(std::slice::from_ref(&report), true) } else { e.to_string() };
            return Execution { reports: vec![report], output, exit_code: Status::InvalidInput.exit_code() };
        }
    };
    let files = cli.command.files();
    let reports: Vec<Report> = if files.is_empty() {
        vec![run_one(&cli.command, None)]
    } else {
        files.par_iter().map(|p| run_one(&cli.command, Some(p))).collect()
    };
    Execution { output: render(&reports, cli.json), exit_code: exit_code_of(&reports), reports }
}
