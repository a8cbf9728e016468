//! The structured report and the process-level driver shared by `main` and
//! the fixture runner.

use std::time::Instant;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use crate::args::Cli;
use crate::commands::{run, CliError, RunConfig};

#[derive(Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
}

/// One report per invocation. Field names are stable.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub inputs: Value,
    pub result: Value,
    pub certificate: Option<Value>,
    /// `null` unless `--timing` was given, so reports are byte-identical
    /// across runs by default.
    pub timing: Option<Timing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
    pub exit_code: i32,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

/// What one invocation produced, before printing.
pub struct Invocation {
    pub report: Option<Report>,
    pub human: String,
    pub structured: bool,
    pub exit_code: i32,
}

impl Invocation {
    pub fn render(&self) -> String {
        match &self.report {
            Some(r) if self.structured => {
                serde_json::to_string_pretty(r).expect("reports serialize")
            }
            _ => self.human.clone(),
        }
    }
}

/// Parses `argv` and runs it. Never exits the process.
pub fn invoke<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Invocation {
                report: None,
                human: e.render().to_string(),
                structured: false,
                exit_code: code,
            };
        }
    };
    let structured = cli.common.format == crate::args::Format::Structured;
    let name = cli.command.name();
    let cfg = match RunConfig::from_common(&cli.common) {
        Ok(c) => c,
        Err(e) => return failed(name, Value::Null, e, structured),
    };
    let config = serde_json::to_value(&cfg).expect("config serializes");
    let start = Instant::now();
    let outcome = run(&cli.command, &cli.common, &cfg);
    let elapsed = start.elapsed();
    let timing = cli.common.timing.then_some(Timing {
        elapsed_ms: elapsed.as_secs_f64() * 1e3,
    });
    match outcome {
        Ok(o) => {
            let exit_code = if !o.positive {
                1
            } else if o.ceiling {
                3
            } else {
                0
            };
            let mut human = o.human;
            if let Some(t) = &timing {
                human.push_str(&format!("\n({:.1} ms)", t.elapsed_ms));
            }
            Invocation {
                report: Some(Report {
                    command: name,
                    config,
                    inputs: o.inputs,
                    result: o.result,
                    certificate: o.certificate,
                    timing,
                    error: None,
                    exit_code,
                }),
                human,
                structured,
                exit_code,
            }
        }
        Err(e) => failed(name, config, e, structured),
    }
}

fn failed(name: &'static str, config: Value, e: CliError, structured: bool) -> Invocation {
    let exit_code = e.exit_code();
    Invocation {
        human: format!("error: {}", e.message()),
        report: Some(Report {
            command: name,
            config,
            inputs: Value::Null,
            result: Value::Null,
            certificate: None,
            timing: None,
            error: Some(ErrorInfo {
                kind: e.kind(),
                message: e.message().to_string(),
            }),
            exit_code,
        }),
        structured,
        exit_code,
    }
}
