//! The `trebly` command line.
//!
//! Exit codes: `0` success, `1` verification failure or differing reports,
//! `2` usage or input errors.

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trebly_core::chords::{find_chorded_cycle, find_k_chords_at_apex};
use trebly_core::graph::{graph6_decode, graph6_encode, Family};
use trebly_core::spectral::q_value;
use trebly_core::Graph;

use crate::verifier::{
    diff_reports, property_suite, verify_appendix, verify_corollary, verify_theorem_main,
    ClaimBounds, CorollaryOptions, PropertyOptions, Report, TheoremOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trebly",
    version,
    about = "Signless Laplacian index and chorded-cycle verification for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print q(G) for each graph6 line.
    Q(InputArgs),
    /// Search each graph for a cycle with K chords.
    Detect {
        #[arg(long)]
        k: usize,
        /// Require all chords to meet at one vertex of the cycle.
        #[arg(long)]
        apex: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print named graphs, e.g. `K11n2Plus:n=7`, as graph6.
    Family {
        #[arg(required = true)]
        specs: Vec<String>,
    },
    /// Run a verification task and print its report.
    Verify {
        #[command(subcommand)]
        task: VerifyTask,
    },
    /// Compare two JSON reports, ignoring timing.
    ReportDiff { a: PathBuf, b: PathBuf },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, env = "TREBLY_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
enum VerifyTask {
    /// Every graph of order n without isolated vertices.
    Theorem {
        #[arg(long)]
        n: usize,
        /// Lower the threshold by this much (mutation runs).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        threshold_offset: f64,
        #[arg(long)]
        allow_n8: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Graphs above the threshold must contain a cycle with enough chords.
    Corollary {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        min_chords: usize,
        #[arg(long)]
        allow_n8: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form polynomial identities and inequalities for n in a range.
    Appendix {
        #[arg(long)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Seeded randomized invariant suites.
    Properties {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        trials: usize,
        /// Override a structural cap, `NAME=VALUE`; repeatable.
        #[arg(long = "claim-bound", value_name = "NAME=VALUE")]
        claim_bounds: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// A failure that maps to an exit code and a message on stderr.
struct Failure(i32, String);

fn usage(msg: impl Into<String>) -> Failure {
    Failure(EXIT_USAGE, msg.into())
}

/// A closed downstream pipe ends output quietly.
fn io_error(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        Failure(EXIT_OK, String::new())
    } else {
        usage(format!("io: {e}"))
    }
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run(
    args: impl IntoIterator<Item = impl Into<std::ffi::OsString> + Clone>,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    let result = dispatch(cli.command, &mut io);
    let _ = io.out.flush();
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                let _ = writeln!(io.err, "error: {msg}");
            }
            code
        }
    }
}

fn dispatch(command: Command, io: &mut Io) -> Result<i32, Failure> {
    match command {
        Command::Q(input) => {
            for_each_graph(&input, io, |g, out| {
                let q = q_value(g).map_err(|e| usage(e.to_string()))?;
                writeln!(out, "{}", significant(q, 12)).map_err(io_error)
            })?;
            Ok(EXIT_OK)
        }
        Command::Detect { k, apex, input } => {
            for_each_graph(&input, io, |g, out| {
                let found = if apex {
                    find_k_chords_at_apex(g, k)
                } else {
                    find_chorded_cycle(g, k)
                };
                match found {
                    Some(c) => writeln!(out, "{c}"),
                    None => writeln!(out, "NONE"),
                }
                .map_err(io_error)
            })?;
            Ok(EXIT_OK)
        }
        Command::Family { specs } => {
            for spec in specs {
                let family: Family = spec.parse().map_err(|e| usage(format!("{spec}: {e}")))?;
                let g = family.graph().map_err(|e| usage(format!("{spec}: {e}")))?;
                writeln!(io.out, "{}", graph6_encode(&g)).map_err(io_error)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify { task } => verify(task, io),
        Command::ReportDiff { a, b } => {
            let a = load_report(&a)?;
            let b = load_report(&b)?;
            let lines = diff_reports(&a, &b);
            for line in &lines {
                writeln!(io.out, "{line}").map_err(io_error)?;
            }
            Ok(if lines.is_empty() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

fn verify(task: VerifyTask, io: &mut Io) -> Result<i32, Failure> {
    let (report, format) = match task {
        VerifyTask::Theorem {
            n,
            threshold_offset,
            allow_n8,
            common,
        } => {
            let opts = TheoremOptions {
                threshold_offset,
                allow_n8,
                jobs: common.jobs.max(1),
            };
            (verify_theorem_main(n, opts), common.format)
        }
        VerifyTask::Corollary {
            n,
            min_chords,
            allow_n8,
            common,
        } => {
            let opts = CorollaryOptions {
                min_chords,
                allow_n8,
                jobs: common.jobs.max(1),
            };
            (verify_corollary(n, opts), common.format)
        }
        VerifyTask::Appendix { n_lo, n_hi, format } => (verify_appendix(n_lo, n_hi), format),
        VerifyTask::Properties {
            seed,
            trials,
            claim_bounds,
            common,
        } => {
            let mut bounds = ClaimBounds::default();
            for spec in &claim_bounds {
                bounds.set(spec).map_err(usage)?;
            }
            let opts = PropertyOptions {
                seed,
                trials,
                bounds,
                jobs: common.jobs.max(1),
            };
            (property_suite(opts), common.format)
        }
    };
    let report = report.map_err(|e| usage(e.to_string()))?;
    let text = match format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    writeln!(io.out, "{}", text.trim_end()).map_err(io_error)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}

fn load_report(path: &PathBuf) -> Result<Report, Failure> {
    let file = File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_reader(BufReader::new(file))
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Decodes graph6 lines, skipping blank ones, and applies `f` to each graph.
fn for_each_graph(
    input: &InputArgs,
    io: &mut Io,
    mut f: impl FnMut(&Graph, &mut dyn Write) -> Result<(), Failure>,
) -> Result<(), Failure> {
    let mut file;
    let reader: &mut dyn BufRead = match &input.input {
        Some(path) => {
            file = BufReader::new(
                File::open(path).map_err(|e| usage(format!("{}: {e}", path.display())))?,
            );
            &mut file
        }
        None => io.stdin,
    };
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_error)?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = graph6_decode(text).map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        f(&g, io.out).map_err(|Failure(code, msg)| {
            let msg = if msg.is_empty() {
                msg
            } else {
                format!("line {}: {msg}", i + 1)
            };
            Failure(code, msg)
        })?;
    }
    Ok(())
}

/// `x` rounded to `digits` significant digits, in fixed notation.
pub fn significant(x: f64, digits: usize) -> String {
    let magnitude = if x == 0.0 {
        0
    } else {
        x.abs().log10().floor() as i64
    };
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(significant(4.0, 12), "4.00000000000");
        assert_eq!(significant(11.5, 12), "11.5000000000");
        assert_eq!(significant(0.0, 3), "0.00");
        assert_eq!(significant(0.5, 2), "0.50");
    }
}
