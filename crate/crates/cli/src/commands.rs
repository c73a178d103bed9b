//! Command implementations, independent of process I/O.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starcolor::constructions::witness_certificate;
use starcolor::formulas::WitnessStatus;
use starcolor::oracle::{OracleConfig, OracleOutcome};
use starcolor::verify::{check_certificate, SampleOutcome, Verdict};
use starcolor::{
    classify_only, general_bounds, oracle_ramsey, ramsey_star_s_eq_t_minus_1,
    ramsey_star_s_eq_t_minus_2, sample_upper_check, Color, Error, Query,
};

use crate::file_format::{parse, serialize_with_comments};
use crate::report::{Outcome, Report};
use crate::table::{render, table_rows, TableFormat};

#[derive(Debug, Parser)]
#[command(
    name = "starcolor",
    version,
    about = "Generalized Ramsey numbers R_{s,t}(K_1,n) for stars"
)]
pub struct Cli {
    /// Print `key=value` lines instead of the aligned text layout.
    #[arg(long, global = true)]
    pub machine: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value for s = t-1 or s = t-2, with its case and witness.
    Compute(StarArgs),
    /// General bounds for s = t-l.
    Bounds(BoundsArgs),
    /// Write a verified lower-bound coloring of K_{R-1}.
    Construct(ConstructArgs),
    /// Check a coloring file as a certificate for R > p.
    Verify(VerifyArgs),
    /// Exhaustive search for small instances.
    Oracle(OracleArgs),
    /// Table of values over a range of n.
    Table(TableArgs),
    /// Random-sample the upper bound on K_p.
    SampleCheck(SampleArgs),
}

#[derive(Debug, Clone, Args)]
pub struct StarArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub l: usize,
}

#[derive(Debug, Clone, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub star: StarArgs,
    /// Output file; the coloring goes to stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub s: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub star: StarArgs,
    #[arg(long = "max-p")]
    pub max_p: usize,
    #[arg(long = "edge-budget")]
    pub edge_budget: Option<usize>,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long = "n-from")]
    pub n_from: usize,
    #[arg(long = "n-to")]
    pub n_to: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub star: StarArgs,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub trials: u64,
    #[arg(long)]
    pub seed: u64,
    /// Where to write a counterexample coloring, if one is found.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// What a command produced: a report, optional raw payload for stdout, and
/// the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub report: Report,
    pub payload: Option<String>,
    pub outcome: Outcome,
}

impl CommandOutput {
    fn new(report: Report, outcome: Outcome) -> Self {
        CommandOutput {
            report,
            payload: None,
            outcome,
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self::new(Report::new().field("error", message), Outcome::Usage)
    }
}

fn error_output(e: Error) -> CommandOutput {
    match e {
        Error::ConstructionFailed(_) => {
            CommandOutput::new(Report::new().field("error", e), Outcome::Fail)
        }
        _ => CommandOutput::usage(e),
    }
}

pub fn run(command: &Command) -> CommandOutput {
    match command {
        Command::Compute(a) => compute(a),
        Command::Bounds(a) => bounds(a),
        Command::Construct(a) => construct(a),
        Command::Verify(a) => verify(a),
        Command::Oracle(a) => oracle(a),
        Command::Table(a) => table(a),
        Command::SampleCheck(a) => sample_check(a),
    }
}

pub fn compute(a: &StarArgs) -> CommandOutput {
    let query = match Query::new(a.n, a.t, a.s) {
        Ok(q) => q,
        Err(e) => return CommandOutput::usage(e),
    };
    let verdict = match query.l() {
        1 => ramsey_star_s_eq_t_minus_1(a.n, a.t),
        2 => ramsey_star_s_eq_t_minus_2(a.n, a.t),
        _ => classify_only(a.n, a.t, a.s),
    };
    let v = match verdict {
        Ok(v) => v,
        Err(e) => return error_output(e),
    };
    let mut report = Report::new()
        .headline(format!("R_{{{},{}}}(K_1,{}) = {}", a.s, a.t, a.n, v.value))
        .field("n", a.n)
        .field("t", a.t)
        .field("s", a.s)
        .field("value", v.value)
        .field("case", v.tag);
    if let Some(d) = v.data {
        report.push("x", d.x);
        report.push("q", d.q);
        report.push("r", d.r);
        report.push("t_prime", d.t_prime);
    }
    report.push("recipe", &v.recipe);
    let outcome = match &v.witness {
        WitnessStatus::Verified(c) => {
            report.push("witness", format!("verified K_{}", c.order()));
            Outcome::Success
        }
        WitnessStatus::Failed(msg) => {
            report.push("witness", format!("failed: {msg}"));
            Outcome::Fail
        }
        WitnessStatus::NotBuilt => {
            report.push("witness", "not-built");
            Outcome::Success
        }
    };
    CommandOutput::new(report, outcome)
}

pub fn bounds(a: &BoundsArgs) -> CommandOutput {
    match general_bounds(a.n, a.t, a.l) {
        Ok(b) => CommandOutput::new(
            Report::new()
                .headline(format!("{} ≤ R ≤ {}", b.lower, b.upper))
                .field("n", a.n)
                .field("t", a.t)
                .field("l", a.l)
                .field("lower", b.lower)
                .field("upper", b.upper)
                .field("t_prime", b.t_prime)
                .field("y", b.y)
                .field("epsilon", b.epsilon),
            Outcome::Success,
        ),
        Err(e) => CommandOutput::usage(e),
    }
}

pub fn construct(a: &ConstructArgs) -> CommandOutput {
    let StarArgs { n, t, s } = a.star;
    if let Err(e) = Query::new(n, t, s) {
        return CommandOutput::usage(e);
    }
    let cert = match witness_certificate(n, t, s) {
        Ok(c) => c,
        Err(e) => return error_output(e),
    };
    let recipe = cert
        .recipe
        .as_ref()
        .map(|r| r.to_string())
        .unwrap_or_default();
    let text = serialize_with_comments(
        &cert.coloring,
        &[
            format!(
                "lower-bound witness for R_{{{s},{t}}}(K_1,{n}): {}",
                cert.claim()
            ),
            format!("recipe {recipe}"),
            format!("min-star-colors {}", cert.min_star_colors),
        ],
    );
    let report = Report::new()
        .field("order", cert.coloring.order())
        .field("t", t)
        .field("n", n)
        .field("s", s)
        .field("recipe", recipe)
        .field("min_star_colors", cert.min_star_colors)
        .field("verdict", "pass");
    match &a.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                return CommandOutput::usage(format!("cannot write {}: {e}", path.display()));
            }
            CommandOutput::new(report.field("file", path.display()), Outcome::Success)
        }
        None => CommandOutput {
            report,
            payload: Some(text),
            outcome: Outcome::Success,
        },
    }
}

/// Checks coloring-file text as a certificate for `(n, s)`.
pub fn verify_text(text: &str, n: usize, s: usize) -> CommandOutput {
    let coloring = match parse(text) {
        Ok(c) => c,
        Err(e) => {
            let mut report = Report::new().field("verdict", "malformed");
            if let Some(line) = e.line() {
                report.push("line", line);
            }
            report.push("error", e);
            return CommandOutput::new(report, Outcome::Usage);
        }
    };
    let cert = check_certificate(coloring, n, s);
    let report = Report::new()
        .field("order", cert.coloring.order())
        .field("t", cert.coloring.num_colors())
        .field("n", n)
        .field("s", s)
        .field("min_star_colors", cert.min_star_colors);
    match cert.verdict {
        Verdict::Pass => CommandOutput::new(report.field("verdict", "pass"), Outcome::Success),
        Verdict::Fail(star) => {
            let colors: Vec<String> = star.colors.iter().map(|c| c.to_string()).collect();
            CommandOutput::new(
                report
                    .field("verdict", "fail")
                    .field("vertex", star.vertex.index())
                    .field("colors", colors.join(",")),
                Outcome::Fail,
            )
        }
    }
}

pub fn verify(a: &VerifyArgs) -> CommandOutput {
    match fs::read_to_string(&a.file) {
        Ok(text) => verify_text(&text, a.n, a.s),
        Err(e) => CommandOutput::usage(format!("cannot read {}: {e}", a.file.display())),
    }
}

pub fn oracle(a: &OracleArgs) -> CommandOutput {
    let StarArgs { n, t, s } = a.star;
    if let Err(e) = Query::new(n, t, s) {
        return CommandOutput::usage(e);
    }
    let mut config = OracleConfig::default().with_threads(a.threads);
    if let Some(b) = a.edge_budget {
        config.edge_budget = b;
    }
    match oracle_ramsey(n, t, s, a.max_p, &config) {
        Ok((outcome, stats)) => {
            let mut report = Report::new().field("n", n).field("t", t).field("s", s);
            match outcome {
                OracleOutcome::Value(p) => {
                    report = report.headline(format!("R_{{{s},{t}}}(K_1,{n}) = {p}"));
                    report.push("value", p);
                }
                OracleOutcome::ExceedsMax(p) => report.push("value", format!("exceeds {p}")),
            }
            report.push("nodes", stats.nodes);
            report.push("leaves", stats.leaves);
            report.push("canonical_prunes", stats.canonical_prunes);
            report.push("bound_prunes", stats.bound_prunes);
            report.push("subtrees", stats.subtrees);
            CommandOutput::new(report, Outcome::Success)
        }
        Err(e) => CommandOutput::usage(e),
    }
}

pub fn table(a: &TableArgs) -> CommandOutput {
    if a.n_from > a.n_to {
        return CommandOutput::usage(format!("empty range {}..={}", a.n_from, a.n_to));
    }
    match table_rows(a.t, a.s, a.n_from, a.n_to) {
        Ok(rows) => {
            let format = match a.format {
                FormatArg::Text => TableFormat::Text,
                FormatArg::Csv => TableFormat::Csv,
            };
            CommandOutput {
                report: Report::new().field("rows", rows.len()),
                payload: Some(render(&rows, format)),
                outcome: Outcome::Success,
            }
        }
        Err(e) => CommandOutput::usage(e),
    }
}

pub fn sample_check(a: &SampleArgs) -> CommandOutput {
    let StarArgs { n, t, s } = a.star;
    if let Err(e) = Query::new(n, t, s) {
        return CommandOutput::usage(e);
    }
    if a.trials == 0 {
        return CommandOutput::usage("trials must be at least 1");
    }
    let Ok(t_color) = Color::try_from(t) else {
        return CommandOutput::usage(format!("{t} colors is too many"));
    };
    let report = Report::new()
        .field("p", a.p)
        .field("n", n)
        .field("t", t)
        .field("s", s)
        .field("trials", a.trials)
        .field("seed", a.seed);
    match sample_upper_check(a.p, n, t_color, s, a.trials, a.seed) {
        SampleOutcome::Pass { .. } => {
            CommandOutput::new(report.field("verdict", "pass"), Outcome::Success)
        }
        SampleOutcome::Counterexample { trial, coloring } => {
            let mut report = report
                .field("verdict", "counterexample")
                .field("trial", trial);
            let text = serialize_with_comments(
                &coloring,
                &[format!(
                    "counterexample: no K_1,{n} with at most {s} colors"
                )],
            );
            match &a.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, text) {
                        return CommandOutput::usage(format!(
                            "cannot write {}: {e}",
                            path.display()
                        ));
                    }
                    report.push("file", path.display());
                    CommandOutput::new(report, Outcome::Fail)
                }
                None => CommandOutput {
                    report,
                    payload: Some(text),
                    outcome: Outcome::Fail,
                },
            }
        }
    }
}
