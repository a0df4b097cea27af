//! Command-line front end for the author weight library.
//!
//! Five subcommands: `weights` prints one weight vector, `table` prints
//! vectors for a range of author counts, `figure` prints the first and last
//! weights per count as plot data, `verify` runs the invariant suite, and
//! `score` aggregates per-author credit over a publication corpus.
//!
//! Exit status: 0 on success, 1 for domain or validation errors (including
//! a failed verification), 2 for I/O and parse errors. Every error path
//! writes exactly one diagnostic line to standard error.

use std::fmt::Write as _;
use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use paperweight::{
    compute_weights, parse_corpus, run_invariant_suite, score_corpus, CorpusError, NumericError,
    Param, SchemeKind, SchemeSpec, VerifyReport, WeightError,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "paperweight",
    version,
    about = "Author credit weights: vectors, tables, invariant checks, and corpus scoring"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the weight vector for one scheme and author count
    Weights {
        /// Number of authors
        #[arg(long)]
        k: usize,
        /// Weighting scheme
        #[arg(long)]
        scheme: SchemeKind,
        /// Weight control parameter; integer, decimal, or fraction such as
        /// 1/2 (polynomial schemes only)
        #[arg(long, allow_negative_numbers = true)]
        x: Option<Param>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print weight vectors for author counts 1 through KMAX, one row each
    Table {
        /// Weight control parameter; picks the polynomial form by its value
        #[arg(long, default_value = "2", allow_negative_numbers = true)]
        x: Param,
        /// Largest author count to include
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print first and last author weights per author count, as plot data
    Figure {
        /// Weight control parameter; picks the polynomial form by its value
        #[arg(long, default_value = "2", allow_negative_numbers = true)]
        x: Param,
        /// Largest author count to include
        #[arg(long, default_value_t = 10)]
        kmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Check normalization, monotonicity, duality, the ratio law, the
    /// equal-weight limit, and the geometric specialization
    Verify {
        /// Largest author count to check
        #[arg(long, default_value_t = 20)]
        kmax: usize,
        /// Parameter to check; repeatable [default: 2]
        #[arg(long = "x", value_name = "X", allow_negative_numbers = true)]
        x: Vec<Param>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Score a publication corpus and print per-author credit totals
    Score {
        /// Corpus CSV file with header paper_id,authors; authors separated
        /// by `|` within the second column
        #[arg(long)]
        input: PathBuf,
        /// Weighting scheme
        #[arg(long)]
        scheme: SchemeKind,
        /// Weight control parameter (polynomial schemes only)
        #[arg(long, allow_negative_numbers = true)]
        x: Option<Param>,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
}

/// What a subcommand produced: a payload for standard output and, for a
/// failed verification, the diagnostic that turns the run into exit 1.
struct Output {
    text: String,
    failure: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            failure: None,
        }
    }
}

enum CliError {
    /// Invalid parameters or scheme usage; exit 1.
    Domain(String),
    /// Unreadable or malformed input; exit 2.
    Input(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Domain(m) | CliError::Input(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl From<WeightError> for CliError {
    fn from(e: WeightError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<NumericError> for CliError {
    fn from(e: NumericError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        match e {
            CorpusError::Scheme(inner) => CliError::Domain(inner.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    // Die quietly when the consumer of standard output goes away, instead
    // of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            if !output.text.is_empty() {
                println!("{}", output.text);
            }
            match output.failure {
                None => ExitCode::SUCCESS,
                Some(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Weights {
            k,
            scheme,
            x,
            format,
        } => cmd_weights(k, scheme, x, format),
        Command::Table { x, kmax, format } => cmd_table(x, kmax, format),
        Command::Figure { x, kmax, format } => cmd_figure(x, kmax, format),
        Command::Verify { kmax, x, format } => cmd_verify(kmax, x, format),
        Command::Score {
            input,
            scheme,
            x,
            format,
        } => cmd_score(&input, scheme, x, format),
    }
}

fn cmd_weights(
    k: usize,
    scheme: SchemeKind,
    x: Option<Param>,
    format: Format,
) -> Result<Output, CliError> {
    let spec = SchemeSpec::new(scheme, x)?;
    let weights = compute_weights(&spec, k)?;
    let text = match format {
        Format::Text => weights.rendered().join(" "),
        Format::Tsv => {
            let mut out = String::from("j\tweight");
            for (i, w) in weights.rendered().iter().enumerate() {
                write!(out, "\n{}\t{}", i + 1, w).expect("string writes are infallible");
            }
            out
        }
        Format::Json => {
            let entries: Vec<Value> = weights
                .to_json_weights()
                .into_iter()
                .enumerate()
                .map(|(i, w)| json!({"j": i + 1, "weight": w}))
                .collect();
            pretty(json!({
                "scheme": spec.to_json_value(),
                "k": k,
                "weights": entries,
            }))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_table(x: Param, kmax: usize, format: Format) -> Result<Output, CliError> {
    let spec = SchemeSpec::polynomial_for(x)?;
    let rows = weight_rows(&spec, kmax)?;
    let text = match format {
        Format::Text => {
            let lines: Vec<String> = rows.iter().map(|cells| cells.join(" ")).collect();
            lines.join("\n")
        }
        Format::Tsv => {
            let mut out = String::from("k\tj\tweight");
            for (k, cells) in rows.iter().enumerate() {
                for (j, w) in cells.iter().enumerate() {
                    write!(out, "\n{}\t{}\t{}", k + 1, j + 1, w)
                        .expect("string writes are infallible");
                }
            }
            out
        }
        Format::Json => {
            let json_rows: Vec<Value> = (1..=kmax)
                .map(|k| {
                    compute_weights(&spec, k)
                        .map(|w| json!({"k": k, "weights": w.to_json_weights()}))
                })
                .collect::<Result<_, _>>()?;
            pretty(json!({
                "scheme": spec.to_json_value(),
                "k_max": kmax,
                "rows": json_rows,
            }))
        }
    };
    Ok(Output::ok(text))
}

fn cmd_figure(x: Param, kmax: usize, format: Format) -> Result<Output, CliError> {
    let spec = SchemeSpec::polynomial_for(x)?;
    let rows = weight_rows(&spec, kmax)?;
    let text = match format {
        Format::Text | Format::Tsv => {
            let mut out = String::from("k\tw_1\tw_k");
            for (k, cells) in rows.iter().enumerate() {
                write!(
                    out,
                    "\n{}\t{}\t{}",
                    k + 1,
                    cells.first().expect("rows are non-empty"),
                    cells.last().expect("rows are non-empty")
                )
                .expect("string writes are infallible");
            }
            out
        }
        Format::Json => {
            let points: Vec<Value> = (1..=kmax)
                .map(|k| {
                    compute_weights(&spec, k).map(|w| {
                        let values = w.to_json_weights();
                        json!({
                            "k": k,
                            "w_1": values.first().cloned().unwrap_or(Value::Null),
                            "w_k": values.last().cloned().unwrap_or(Value::Null),
                        })
                    })
                })
                .collect::<Result<_, _>>()?;
            pretty(json!({
                "scheme": spec.to_json_value(),
                "k_max": kmax,
                "points": points,
            }))
        }
    };
    Ok(Output::ok(text))
}

/// Rendered weight vectors for k = 1..=kmax under one spec.
fn weight_rows(spec: &SchemeSpec, kmax: usize) -> Result<Vec<Vec<String>>, CliError> {
    if kmax == 0 {
        return Err(WeightError::InvalidAuthorCount(0).into());
    }
    (1..=kmax)
        .map(|k| Ok(compute_weights(spec, k)?.rendered()))
        .collect()
}

fn cmd_verify(kmax: usize, x: Vec<Param>, format: Format) -> Result<Output, CliError> {
    let params = if x.is_empty() {
        vec!["2".parse::<Param>().expect("a literal integer parses")]
    } else {
        x
    };
    let report = run_invariant_suite(kmax, &params)?;
    let text = match format {
        Format::Text => render_verify_text(&report),
        Format::Tsv => {
            let mut out = String::from("check\tresult\tdetail");
            for check in report.checks() {
                let result = if check.passed { "pass" } else { "fail" };
                write!(out, "\n{}\t{}\t{}", check.name, result, check.detail)
                    .expect("string writes are infallible");
            }
            out
        }
        Format::Json => {
            let checks: Vec<Value> = report
                .checks()
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            pretty(json!({
                "k_max": kmax,
                "x": params.iter().map(Param::to_json_value).collect::<Vec<_>>(),
                "checks": checks,
                "all_passed": report.all_passed(),
            }))
        }
    };
    let failure = report
        .first_failure()
        .map(|c| format!("check `{}` failed: {}", c.name, c.detail));
    Ok(Output { text, failure })
}

fn render_verify_text(report: &VerifyReport) -> String {
    let lines: Vec<String> = report
        .checks()
        .iter()
        .map(|c| {
            let result = if c.passed { "PASS" } else { "FAIL" };
            format!("{}: {} ({})", c.name, result, c.detail)
        })
        .collect();
    lines.join("\n")
}

fn cmd_score(
    input: &std::path::Path,
    scheme: SchemeKind,
    x: Option<Param>,
    format: Format,
) -> Result<Output, CliError> {
    let spec = SchemeSpec::new(scheme, x)?;
    let file = File::open(input)
        .map_err(|e| CliError::Input(format!("{}: {}", input.display(), e)))?;
    let records = parse_corpus(file)?;
    let report = score_corpus(&records, &spec)?;
    let text = match format {
        Format::Text | Format::Tsv => report.to_tsv().trim_end().to_string(),
        Format::Json => pretty(report.to_json_value()),
    };
    Ok(Output::ok(text))
}

fn pretty(value: Value) -> String {
    serde_json::to_string_pretty(&value).expect("JSON values built here always serialize")
}
