//! Command-line front end: parses arguments, dispatches to the library and
//! renders deterministic text or JSON documents.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 a verification check
//! failed.

pub mod commands;
pub mod expr;
pub mod render;

use std::ffi::OsString;

use charnum_core::{CobordismRing, GenusPolynomial, DEFAULT_MAX_WEIGHT};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use commands::{CommandError, VERSION};
pub use render::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "charnum",
    version,
    about = "Exact Pontrjagin numbers and genera of products of K3 and HP^k"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest weight k (dimension 4k) accepted.
    #[arg(long = "max-k", global = true, default_value_t = DEFAULT_MAX_WEIGHT)]
    pub max_k: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All Pontrjagin numbers of a product manifold, e.g. `K3^2 x HP3`.
    Numbers {
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
    },
    /// Evaluate the Â or L genus on a product manifold.
    Genus {
        /// `ahat` or `L`.
        series: String,
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
    },
    /// Check the basis sequence and the Â characterization in weight k.
    Verify { k: usize },
    /// The basis matrix of weight k with its determinant.
    Matrix { k: usize },
}

/// Everything a run writes, so tests can inspect it without a process.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run<I, T>(args: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    match Cli::try_parse_from(&args) {
        Ok(cli) => execute(&cli),
        Err(err) => {
            let code = if err.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_OK
            };
            let text = err.render().to_string();
            if err.use_stderr() {
                let stdout = if requests_json(&args) {
                    let doc = json!({
                        "command": Value::Null,
                        "input": Value::Null,
                        "error": {"kind": "usage", "message": err.kind().to_string()},
                        "version": VERSION,
                    });
                    render::render(&doc, Format::Json)
                } else {
                    String::new()
                };
                RunOutput {
                    stdout,
                    stderr: text,
                    code,
                }
            } else {
                RunOutput {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            }
        }
    }
}

/// Whether the raw arguments ask for JSON, looked up without a full parse so
/// that usage errors can still produce a document.
fn requests_json(args: &[OsString]) -> bool {
    args.windows(2)
        .any(|w| w[0] == "--format" && w[1] == "json")
        || args.iter().any(|a| a == "--format=json")
}

pub fn execute(cli: &Cli) -> RunOutput {
    let ring = CobordismRing::new(cli.max_k);
    let (name, input) = describe(cli);
    let outcome = match &cli.command {
        Command::Numbers { expr } => commands::numbers(&ring, &expr.join(" ")).map(|v| (v, true)),
        Command::Genus { series, expr } => {
            commands::genus(&ring, series, &expr.join(" ")).map(|v| (v, true))
        }
        Command::Verify { k } => commands::verify(&ring, *k, None),
        Command::Matrix { k } => commands::matrix(&ring, *k).map(|v| (v, true)),
    };
    finish(cli.format, name, input, outcome)
}

/// The `verify` command with `candidate` in place of the Â polynomial of
/// degree `k`; exits with [`EXIT_CHECK_FAILED`] when it is not Â.
pub fn verify_output(
    ring: &CobordismRing,
    k: usize,
    candidate: Option<&GenusPolynomial>,
    format: Format,
) -> RunOutput {
    let input = json!({"k": k, "max_k": ring.max_weight()});
    finish(
        format,
        "verify",
        input,
        commands::verify(ring, k, candidate),
    )
}

fn finish(
    format: Format,
    name: &'static str,
    input: Value,
    outcome: Result<(Value, bool), CommandError>,
) -> RunOutput {
    match outcome {
        Ok((result, passed)) => {
            let doc = json!({
                "command": name,
                "input": input,
                "result": result,
                "version": VERSION,
            });
            RunOutput {
                stdout: render::render(&doc, format),
                stderr: if passed {
                    String::new()
                } else {
                    "verification failed\n".to_string()
                },
                code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            }
        }
        Err(err) => error_output(format, name, input, &err),
    }
}

fn error_output(format: Format, name: &str, input: Value, err: &CommandError) -> RunOutput {
    let stdout = match format {
        Format::Json => render::render(
            &json!({
                "command": name,
                "input": input,
                "error": err.to_json(),
                "version": VERSION,
            }),
            Format::Json,
        ),
        Format::Text => String::new(),
    };
    RunOutput {
        stdout,
        stderr: format!("error: {err}\n"),
        code: EXIT_USAGE,
    }
}

fn describe(cli: &Cli) -> (&'static str, Value) {
    match &cli.command {
        Command::Numbers { expr } => (
            "numbers",
            json!({"expr": expr.join(" "), "max_k": cli.max_k}),
        ),
        Command::Genus { series, expr } => (
            "genus",
            json!({"series": series, "expr": expr.join(" "), "max_k": cli.max_k}),
        ),
        Command::Verify { k } => ("verify", json!({"k": k, "max_k": cli.max_k})),
        Command::Matrix { k } => ("matrix", json!({"k": k, "max_k": cli.max_k})),
    }
}
