//! Command-line front end for V-order string comparison, V-word
//! factorization, suffix sorting, the V-order Burrows-Wheeler transform, the
//! invariant check suite, and the workload benchmarks.

mod bench;
mod checks;
mod input;

use std::cmp::Ordering;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use vorder::{
    bwt_incremental_with, compare_input_sensitive_report, compare_star_oracle, compare_v_form,
    factorize_with, suffix_array_lexext, PrefixStream, SuffixStream,
};

use crate::input::InputModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Raw text; each byte is a letter, ordered by the byte alphabet.
    Text,
    /// Whitespace-separated decimal letters (each >= 1), ordered numerically.
    Ints,
}

#[derive(Debug, Parser)]
#[command(
    name = "vorder",
    about = "Compare, factorize, suffix-sort, and transform strings in V-order",
    version
)]
struct Cli {
    /// Input format.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Text)]
    mode: Mode,

    /// Explicit alphabet for text mode: the bytes of this string, in
    /// increasing order. Integer mode always orders letters numerically.
    #[arg(long, global = true)]
    alphabet: Option<String>,

    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the check and bench workloads.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,

    /// Largest random string length used by check workloads.
    #[arg(long, global = true, default_value_t = 48)]
    max_n: usize,

    /// Largest alphabet size used by check workloads.
    #[arg(long, global = true, default_value_t = 6)]
    sigma: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two strings in V-order; prints LT, EQ, or GT.
    Compare { a: String, b: String },
    /// Factorize each input line into V-words, one factor per output line.
    Factor { file: Option<PathBuf> },
    /// Print the lex-extension suffix array of each input line.
    Sa { file: Option<PathBuf> },
    /// Print the V-order Burrows-Wheeler transform of each input line.
    Bwt { file: Option<PathBuf> },
    /// Run the invariant suite; exits nonzero on any violation.
    Check,
    /// Report input-sensitivity and scaling workloads.
    Bench,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let model = match cli.mode {
        Mode::Text => InputModel::text(cli.alphabet.as_deref())?,
        Mode::Ints => {
            if cli.alphabet.is_some() {
                return Err("--alphabet applies to text mode only; integer mode orders letters numerically".to_string());
            }
            InputModel::ints()
        }
    };

    match &cli.command {
        Command::Compare { a, b } => {
            let (x, y) = model.bind_pair(a, b)?;
            let order = compare_v_form(&x, &y);
            if cli.json {
                let report = compare_input_sensitive_report(&x, &y);
                let mut prefix_stream = PrefixStream::new();
                for i in 0..x.len().min(y.len()) {
                    prefix_stream.push(x[i], y[i]);
                }
                for &a in &x[x.len().min(y.len())..] {
                    prefix_stream.push_left(a);
                }
                for &b in &y[x.len().min(y.len())..] {
                    prefix_stream.push_right(b);
                }
                let mut suffix_stream = SuffixStream::new();
                let common = x.len().min(y.len());
                for i in 0..common {
                    suffix_stream.push(x[x.len() - 1 - i], y[y.len() - 1 - i]);
                }
                for &a in x[..x.len() - common].iter().rev() {
                    suffix_stream.push_left(a);
                }
                for &b in y[..y.len() - common].iter().rev() {
                    suffix_stream.push_right(b);
                }
                let value = serde_json::json!({
                    "a": a,
                    "b": b,
                    "order": order_label(order),
                    "algorithms": {
                        "star_oracle": order_label(compare_star_oracle(&x, &y)),
                        "v_form": order_label(order),
                        "input_sensitive": order_label(report.order),
                        "prefix_stream": order_label(prefix_stream.order()),
                        "suffix_stream": order_label(suffix_stream.order()),
                    },
                    "letters_inspected": report.letters_inspected,
                    "stream_fallbacks": {
                        "prefix": prefix_stream.fallbacks(),
                        "suffix": suffix_stream.fallbacks(),
                    },
                });
                println!("{}", value);
            } else {
                println!("{}", order_label(order));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor { file } => {
            let lines = input::read_lines(file.as_deref())?;
            let stdout = std::io::stdout();
            for (lineno, line) in lines.iter().enumerate() {
                let bound = bind_line(&model, line, lineno)?;
                if cli.json {
                    let mut factors = Vec::new();
                    factorize_with(&bound.letters, |factor, end| {
                        factors.push(serde_json::json!({
                            "factor": bound.render(factor),
                            "end": end,
                        }));
                    })
                    .map_err(|e| format!("line {}: {}", lineno + 1, e))?;
                    println!("{}", serde_json::json!({ "factors": factors }));
                } else {
                    // Each factor is flushed as soon as it is identified.
                    let mut out = stdout.lock();
                    factorize_with(&bound.letters, |factor, end| {
                        writeln!(out, "{}\t{}", bound.render(factor), end).expect("stdout");
                        out.flush().expect("stdout");
                    })
                    .map_err(|e| format!("line {}: {}", lineno + 1, e))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sa { file } => {
            let lines = input::read_lines(file.as_deref())?;
            for (lineno, line) in lines.iter().enumerate() {
                let bound = bind_line(&model, line, lineno)?;
                let sa = suffix_array_lexext(&bound.letters)
                    .map_err(|e| format!("line {}: {}", lineno + 1, e))?;
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({ "order": sa.order(), "comparison": "lexext" })
                    );
                } else {
                    let rendered: Vec<String> =
                        sa.order().iter().map(|p| p.to_string()).collect();
                    println!("{}", rendered.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bwt { file } => {
            let lines = input::read_lines(file.as_deref())?;
            for (lineno, line) in lines.iter().enumerate() {
                let bound = bind_line(&model, line, lineno)?;
                let mut last = None;
                bwt_incremental_with(&bound.letters, |_, _, bwt| last = Some(bwt.clone()))
                    .map_err(|e| format!("line {}: {}", lineno + 1, e))?;
                let bwt = last.expect("nonempty input");
                if cli.json {
                    println!(
                        "{}",
                        serde_json::json!({
                            "transformed": bound.render(&bwt.transformed),
                            "primary_index": bwt.primary_index,
                        })
                    );
                } else {
                    println!("{}\t{}", bound.render(&bwt.transformed), bwt.primary_index);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check => {
            let report = checks::run_all(cli.seed, cli.max_n, cli.sigma);
            if cli.json {
                let suites: Vec<serde_json::Value> = report
                    .suites
                    .iter()
                    .map(|s| {
                        serde_json::json!({
                            "name": s.name,
                            "passed": s.passed,
                            "detail": s.detail,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({ "passed": report.passed(), "suites": suites })
                );
            } else {
                for suite in &report.suites {
                    if suite.passed {
                        println!("ok   {} ({})", suite.name, suite.detail);
                    } else {
                        println!("FAIL {} ({})", suite.name, suite.detail);
                    }
                }
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
        Command::Bench => {
            let report = bench::run(cli.seed);
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn bind_line(
    model: &InputModel,
    line: &str,
    lineno: usize,
) -> Result<input::BoundLine, String> {
    model.bind_line(line).map_err(|e| format!("line {}: {}", lineno + 1, e))
}

fn order_label(order: Ordering) -> &'static str {
    match order {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}
