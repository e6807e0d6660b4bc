//! `svq` — run the verification suites, expand twisted structure maps for
//! inspection, and normalize expressions into the PBW basis.
//!
//! Exit codes: 0 when everything requested passed, 1 when a verification
//! check failed, 2 for usage errors (bad flags, malformed expressions,
//! impossible parameter combinations).

mod parse;
mod render;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use svq_core::twist::{antipode_twisted, closed_form_antipode, closed_form_delta, delta_twisted};
use svq_core::{run_suite, Suite, SuiteConfig, TwistCase, TwistData, UeaElement};

#[derive(Parser)]
#[command(
    name = "svq",
    version,
    about = "Exact symbolic computation in a twisted Schrödinger-Virasoro enveloping algebra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites over a parameter grid and report every check.
    Verify(VerifyArgs),
    /// Expand a twisted coproduct or antipode of one generator as a series in t.
    Expand(ExpandArgs),
    /// Parse an expression and print its normal-ordered canonical form.
    Normalize(NormalizeArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run (repeatable or comma-separated): all, bialgebra,
    /// pbw-hopf, lemmas, twist, theorem1, theorem2, case3-hopf.
    #[arg(
        long = "suite",
        value_name = "NAME",
        value_delimiter = ',',
        default_value = "all"
    )]
    suites: Vec<String>,
    /// Twist index parameters n0 to sweep; nonzero, comma-separated. Cases
    /// that need odd n0 skip even values.
    #[arg(
        long,
        value_name = "INT,...",
        value_delimiter = ',',
        allow_negative_numbers = true,
        default_values_t = [1, 2, 3]
    )]
    n0: Vec<i64>,
    /// Series truncation order N: checks hold through the coefficient of t^N.
    #[arg(long, value_name = "N", default_value_t = 4)]
    order: usize,
    /// Generator grid radius: integer indices sweep |n| <= RANGE and
    /// half-odd indices sweep |p| <= RANGE - 1/2.
    #[arg(long, value_name = "INT", default_value_t = 3)]
    range: i64,
    /// Report format on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Echoed into the report. The grids are exhaustive, so the seed does
    /// not change any result.
    #[arg(long, value_name = "INT", default_value_t = 0)]
    seed: u64,
    /// Also write the JSON report to this file.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Self-test fault injection: run with a deliberately corrupted [L,L]
    /// bracket table. A healthy build must then FAIL the conjugation-based
    /// checks and exit 1.
    #[arg(long)]
    corrupt_bracket: bool,
}

#[derive(Args)]
struct ExpandArgs {
    /// Twist case: 1 (abelian, M-type), 2 (Y-type, odd n0), or 3 (L-type;
    /// conjugation only, no closed forms).
    #[arg(long, value_name = "1|2|3")]
    case: u8,
    /// Twist index parameter, nonzero (odd for case 2).
    #[arg(
        long,
        value_name = "INT",
        allow_negative_numbers = true,
        default_value_t = 1
    )]
    n0: i64,
    /// Series truncation order N.
    #[arg(long, value_name = "N", default_value_t = 4)]
    order: usize,
    /// What to expand: conjugation (delta, antipode) or the closed form
    /// (delta-closed, antipode-closed).
    #[arg(long, value_enum)]
    op: Op,
    /// The generator, e.g. "L(2)", "M(-1)", "Y(3/2)".
    #[arg(long, value_name = "GEN")]
    gen: String,
    /// Output format: canonical text or JSON with nested tensor legs.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct NormalizeArgs {
    /// Expression such as "L(1)*L(0) + 1/2*M(2)". Whitespace is
    /// insignificant; Y indices must be half-odd.
    #[arg(long, value_name = "EXPR")]
    expr: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Delta,
    Antipode,
    DeltaClosed,
    AntipodeClosed,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::Delta => "delta",
            Op::Antipode => "antipode",
            Op::DeltaClosed => "delta-closed",
            Op::AntipodeClosed => "antipode-closed",
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify(args) => cmd_verify(args),
        Command::Expand(args) => cmd_expand(&args),
        Command::Normalize(args) => cmd_normalize(&args),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let mut suites = Vec::new();
    for name in &args.suites {
        if name == "all" {
            suites.extend(Suite::ALL);
        } else {
            match name.parse::<Suite>() {
                Ok(s) => suites.push(s),
                Err(e) => return usage_error(&e),
            }
        }
    }
    if args.n0.contains(&0) {
        return usage_error("--n0 values must be nonzero");
    }
    let theorem = |s: &Suite| matches!(s, Suite::Theorem1 | Suite::Theorem2);
    if args.order < 2 && suites.iter().any(theorem) {
        return usage_error("theorem suites need --order at least 2 (t^2 terms carry content)");
    }
    if suites.contains(&Suite::Theorem2) && !args.n0.iter().any(|n| n % 2 != 0) {
        return usage_error("suite theorem2 needs an odd value among --n0");
    }

    let cfg = SuiteConfig {
        suites,
        n0_values: args.n0,
        order: args.order,
        index_range: args.range,
        seed: args.seed,
        corrupt_bracket: args.corrupt_bracket,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg);

    if let Some(path) = &args.output {
        let json = serde_json::to_string_pretty(&report).expect("reports serialize");
        if let Err(e) = std::fs::write(path, json) {
            return usage_error(&format!("cannot write `{}`: {e}", path.display()));
        }
    }
    match args.format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("reports serialize")
            );
        }
        Format::Text => {
            let stdout = io::stdout();
            let mut w = io::BufWriter::new(stdout.lock());
            write_report_or_die(&mut w, &report);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn write_report_or_die(w: &mut impl Write, report: &svq_core::Report) {
    render::write_report_text(w, report)
        .and_then(|_| w.flush())
        .expect("stdout is writable");
}

fn cmd_expand(args: &ExpandArgs) -> ExitCode {
    let case = match TwistCase::new(args.case, args.n0) {
        Ok(c) => c,
        Err(e) => return usage_error(&e.to_string()),
    };
    let g = match parse::parse_generator(&args.gen) {
        Ok(g) => g,
        Err(e) => return usage_error(&format!("in --gen: {e}")),
    };
    let data = TwistData::new(case, args.order);
    let x = UeaElement::generator(g.clone());
    let series = match args.op {
        Op::Delta => delta_twisted(&data, &x),
        Op::Antipode => antipode_twisted(&data, &x),
        Op::DeltaClosed => match closed_form_delta(&data, &g) {
            Ok(s) => s,
            Err(e) => return usage_error(&e.to_string()),
        },
        Op::AntipodeClosed => match closed_form_antipode(&data, &g) {
            Ok(s) => s,
            Err(e) => return usage_error(&e.to_string()),
        },
    };
    match args.format {
        Format::Text => println!("{series}"),
        Format::Json => {
            let payload = serde_json::json!({
                "case": args.case,
                "n0": args.n0,
                "order": args.order,
                "op": args.op.name(),
                "gen": g.to_string(),
                "series": render::series_json(&series),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("series serialize")
            );
        }
    }
    ExitCode::SUCCESS
}

fn cmd_normalize(args: &NormalizeArgs) -> ExitCode {
    match parse::parse_element(&args.expr) {
        Ok(x) => {
            println!("{x}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(&format!("in --expr: {e}")),
    }
}
