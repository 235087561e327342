//! Command-line front end: `hpp catalog`, `hpp verify`, `hpp falsify`.
//!
//! [`run`] does all the work and returns the exit code and output, so tests
//! can drive it without spawning a process.

pub mod claims;
pub mod falsify;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hpp_core::matroid::catalog;
use hpp_core::poly::BUILTIN_GRID;
use serde_json::{json, Value};

use claims::{Claim, Options, CLAIMS};
use report::{Status, VerificationReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "hpp", version, about = "Exact checks for matroid, polymatroid and stable-polynomial claims")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock runtimes (makes output run-dependent).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a catalog matroid as JSON.
    Catalog { name: String },
    /// Run one claim, or every claim with --all.
    Verify {
        #[arg(required_unless_present_any = ["all", "list"], conflicts_with_all = ["all", "list"])]
        claim: Option<String>,
        #[arg(long)]
        all: bool,
        /// List claim ids and exit.
        #[arg(long)]
        list: bool,
        /// Scale factor for amalgam-counterexample.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances or sampled lines.
        #[arg(long)]
        samples: Option<usize>,
    },
    /// Search for a stability witness of the polynomial in FILE.
    Falsify {
        file: PathBuf,
        #[arg(long, default_value_t = BUILTIN_GRID)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String, code: u8) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into() + "\n",
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = u8::try_from(e.exit_code()).unwrap_or(EXIT_USAGE);
            return if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text, code)
            };
        }
    };
    match cli.command {
        Command::Catalog { name } => match catalog(&name) {
            Ok(m) => Output::ok(pretty(&serde_json::to_value(m.to_json()).expect("serializes")), EXIT_OK),
            Err(e) => Output::usage(format!("error: {e}")),
        },
        Command::Verify {
            claim,
            all,
            list,
            m,
            seed,
            samples,
        } => {
            let opts = Options { m, seed, samples };
            if list {
                let text: String = CLAIMS
                    .iter()
                    .map(|c| format!("{:<24} {:<13} {}\n", c.id, c.expected.as_str(), c.summary))
                    .collect();
                return Output::ok(text, EXIT_OK);
            }
            if all {
                return verify_all(&opts, cli.json, cli.timing);
            }
            let id = claim.expect("clap enforces a claim id");
            let Some(c) = claims::find(&id) else {
                let ids: Vec<&str> = CLAIMS.iter().map(|c| c.id).collect();
                return Output::usage(format!("error: unknown claim {id:?}; known: {}", ids.join(", ")));
            };
            let r = verify(c, &opts, cli.timing);
            let code = if r.matches { EXIT_OK } else { EXIT_MISMATCH };
            let text = if cli.json { pretty(&r.to_value()) } else { r.human() + "\n" };
            Output::ok(text, code)
        }
        Command::Falsify { file, samples, seed } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return Output::usage(format!("error: cannot read {}: {e}", file.display())),
            };
            let p = match falsify::load_polynomial(&text) {
                Ok(p) => p,
                Err(e) => return Output::usage(format!("error: {}: {e}", file.display())),
            };
            let start = Instant::now();
            let (status, details) = match falsify::falsify(&p, samples, seed) {
                Ok(x) => x,
                Err(e) => return Output::usage(format!("error: {e}")),
            };
            let r = VerificationReport {
                claim: "falsify".into(),
                status,
                expected: status,
                matches: true,
                details,
                runtime_ms: cli.timing.then(|| start.elapsed().as_millis() as u64),
            };
            let text = if cli.json { pretty(&r.to_value()) } else { r.human() + "\n" };
            Output::ok(text, EXIT_OK)
        }
    }
}

/// Runs one claim; an error from the check counts as a falsified claim.
pub fn verify(c: &Claim, opts: &Options, timing: bool) -> VerificationReport {
    let start = Instant::now();
    let (status, details) = (c.run)(opts).unwrap_or_else(|e| (Status::Falsified, json!({ "error": e })));
    VerificationReport {
        claim: c.id.into(),
        status,
        expected: c.expected,
        matches: status == c.expected,
        details,
        runtime_ms: timing.then(|| start.elapsed().as_millis() as u64),
    }
}

fn verify_all(opts: &Options, as_json: bool, timing: bool) -> Output {
    // Claims run concurrently; results keep registry order.
    let reports: Vec<VerificationReport> = std::thread::scope(|s| {
        let handles: Vec<_> = CLAIMS.iter().map(|c| s.spawn(move || verify(c, opts, timing))).collect();
        handles.into_iter().map(|h| h.join().expect("claim thread panicked")).collect()
    });
    let all_match = reports.iter().all(|r| r.matches);
    let text = if as_json {
        pretty(&json!({
            "all_match": all_match,
            "claims": reports.iter().map(VerificationReport::to_value).collect::<Vec<_>>(),
        }))
    } else {
        let mut t: String = reports
            .iter()
            .map(|r| {
                let mark = if r.matches { "ok" } else { "MISMATCH" };
                format!("{:<8} {:<24} {}\n", mark, r.claim, r.status.as_str())
            })
            .collect();
        t.push_str(if all_match { "all claims match\n" } else { "some claims do not match\n" });
        t
    };
    Output::ok(text, if all_match { EXIT_OK } else { EXIT_MISMATCH })
}
