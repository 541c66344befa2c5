//! diag12: decide when the multiplication table of Z_n, or of the
//! polynomial ring Z_n[x1..xm], has 1 only on the diagonal.
//!
//! Exit codes: 0 when the command completes and any verdict or expectation
//! is satisfied; 1 when a verdict is negative, an expectation fails, or a
//! polynomial turns out not to be a unit; 2 for usage, parse, and budget
//! errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use diag12_core::diagonal::{self, DiagonalReport, DEFAULT_TABLE_BUDGET};
use diag12_core::modring::RingSpec;
use diag12_core::polyring::{Polynomial, DEFAULT_ENUMERATION_BUDGET};
use diag12_core::units::invert_unit;

use diag12::render;

/// Environment variable that overrides the enumeration budget (the largest
/// number of polynomials an exhaustive search may visit).
const BUDGET_ENV_VAR: &str = "DIAG12_BUDGET";

#[derive(Parser)]
#[command(
    name = "diag12",
    version,
    about = "Decide when multiplication tables over Z_n and Z_n[x1..xm] have 1 only on the diagonal"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the multiplication table of Z_n
    Table(TableArgs),
    /// Decide the diagonal property for one modulus
    Check(CheckArgs),
    /// Invert a unit of Z_n[x1..xm] against an exactness certificate
    Invert(InvertArgs),
    /// Decide the diagonal property for every modulus up to a limit
    Survey(SurveyArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Modulus
    n: u64,
    /// Mark cells equal to 1 as [1]
    #[arg(long)]
    highlight_ones: bool,
    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct CheckArgs {
    /// Modulus
    n: u64,
    /// Check the polynomial ring Z_n[x1..xm] instead of Z_n
    #[arg(long)]
    poly: bool,
    /// Number of variables, at least 1 (requires --poly; default 1)
    #[arg(long)]
    vars: Option<usize>,
    /// Total degree bound for --method enumerate (requires --poly; default 2)
    #[arg(long)]
    degree: Option<u32>,
    /// Decision method (default: table for Z_n, theorem for --poly)
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Expected verdict; a mismatch exits with code 1
    #[arg(long, value_enum)]
    expect: Option<ExpectArg>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Divisibility criterion (24 for Z_n, 12 for Z_n[x1..xm])
    Theorem,
    /// Exhaustive search over polynomials up to the degree bound
    Enumerate,
    /// Scan the full multiplication table of Z_n
    Table,
    /// Square every unit of Z_n
    Involution,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpectArg {
    Yes,
    No,
}

#[derive(Args)]
struct InvertArgs {
    /// Modulus
    n: u64,
    /// Polynomial to invert, e.g. "2*x1 + 1"
    polynomial: String,
    /// Number of variables (default: the highest index mentioned, at least 1)
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct SurveyArgs {
    /// Largest modulus to check (starting from 1)
    #[arg(long)]
    max_n: u64,
    /// Survey the polynomial rings Z_n[x1..xm] instead of Z_n
    #[arg(long)]
    poly: bool,
    /// Number of variables, at least 1 (requires --poly; default 1)
    #[arg(long)]
    vars: Option<usize>,
    /// Total degree bound for --method enumerate (requires --poly; default 2)
    #[arg(long)]
    degree: Option<u32>,
    /// Decision method (default: table for Z_n, theorem for --poly)
    #[arg(long, value_enum)]
    method: Option<MethodArg>,
    /// Emit all reports as JSON
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Table(args) => cmd_table(args),
        Command::Check(args) => cmd_check(args),
        Command::Invert(args) => cmd_invert(args),
        Command::Survey(args) => cmd_survey(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// Reject flag combinations that silently change meaning: variable and
/// degree settings only apply to polynomial rings, and each method is
/// specific to one side.
fn validate_mode_flags(
    poly: bool,
    vars: Option<usize>,
    degree: Option<u32>,
    method: Option<MethodArg>,
) -> Result<(), String> {
    if poly {
        if matches!(method, Some(MethodArg::Table)) {
            return Err("--method table scans Z_n; drop --poly".to_string());
        }
        if matches!(method, Some(MethodArg::Involution)) {
            return Err("--method involution scans Z_n; drop --poly".to_string());
        }
        if vars == Some(0) {
            return Err("--vars must be at least 1".to_string());
        }
    } else {
        if vars.is_some() {
            return Err("--vars requires --poly".to_string());
        }
        if degree.is_some() {
            return Err("--degree requires --poly".to_string());
        }
        if matches!(method, Some(MethodArg::Enumerate)) {
            return Err("--method enumerate requires --poly".to_string());
        }
    }
    Ok(())
}

fn enumeration_budget() -> Result<u64, String> {
    match std::env::var(BUDGET_ENV_VAR) {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| format!("invalid {BUDGET_ENV_VAR} value {text:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_BUDGET),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(format!("invalid {BUDGET_ENV_VAR} value: not unicode"))
        }
    }
}

/// Run the selected decision method for one modulus. Flags must already be
/// validated.
fn decide(
    ring: &RingSpec,
    poly: bool,
    vars: Option<usize>,
    degree: Option<u32>,
    method: Option<MethodArg>,
) -> Result<DiagonalReport, String> {
    if poly {
        let vars = vars.unwrap_or(1);
        match method.unwrap_or(MethodArg::Theorem) {
            MethodArg::Theorem => Ok(diagonal::check_poly_theorem(ring, vars)),
            MethodArg::Enumerate => {
                let bound = degree.unwrap_or(2);
                let budget = enumeration_budget()?;
                diagonal::check_poly_enumeration(ring, vars, bound, budget)
                    .map_err(|e| e.to_string())
            }
            MethodArg::Table | MethodArg::Involution => unreachable!("rejected by validation"),
        }
    } else {
        match method.unwrap_or(MethodArg::Table) {
            MethodArg::Table => {
                diagonal::check_zn_table(ring, DEFAULT_TABLE_BUDGET).map_err(|e| e.to_string())
            }
            MethodArg::Involution => {
                diagonal::check_zn_involution(ring, DEFAULT_TABLE_BUDGET).map_err(|e| e.to_string())
            }
            MethodArg::Theorem => Ok(diagonal::check_zn_theorem(ring)),
            MethodArg::Enumerate => unreachable!("rejected by validation"),
        }
    }
}

fn cmd_table(args: TableArgs) -> Result<u8, String> {
    let ring = RingSpec::new(args.n).map_err(|e| e.to_string())?;
    match args.format {
        TableFormat::Text => {
            let report =
                diagonal::check_zn_table(&ring, DEFAULT_TABLE_BUDGET).map_err(|e| e.to_string())?;
            print!("{}", render::table_text(&ring, args.highlight_ones, &report));
        }
        TableFormat::Csv => {
            if args.n > DEFAULT_TABLE_BUDGET {
                return Err(format!(
                    "table scan refused: modulus {} exceeds the budget of {}",
                    args.n, DEFAULT_TABLE_BUDGET
                ));
            }
            print!("{}", render::table_csv(&ring));
        }
    }
    Ok(0)
}

fn cmd_check(args: CheckArgs) -> Result<u8, String> {
    validate_mode_flags(args.poly, args.vars, args.degree, args.method)?;
    let ring = RingSpec::new(args.n).map_err(|e| e.to_string())?;
    let report = decide(&ring, args.poly, args.vars, args.degree, args.method)?;
    if args.json {
        println!("{}", render::report_json(&report));
    } else {
        print!("{}", render::report_text(&report));
    }
    let verdict = report.verdict();
    let ok = match args.expect {
        None => verdict,
        Some(ExpectArg::Yes) => verdict,
        Some(ExpectArg::No) => !verdict,
    };
    Ok(if ok { 0 } else { 1 })
}

/// Infer the variable count from the highest variable index that appears in
/// the input text, so "x3" alone implies three variables.
fn inferred_vars(text: &str) -> usize {
    let mut max_index = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c != 'x' {
            continue;
        }
        let mut index = 0usize;
        let mut saw_digit = false;
        while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
            chars.next();
            saw_digit = true;
            index = index.saturating_mul(10).saturating_add(d as usize);
        }
        if saw_digit {
            max_index = max_index.max(index);
        }
    }
    max_index
}

fn cmd_invert(args: InvertArgs) -> Result<u8, String> {
    let ring = RingSpec::new(args.n).map_err(|e| e.to_string())?;
    let vars = match args.vars {
        Some(0) => return Err("--vars must be at least 1".to_string()),
        Some(v) => v,
        None => inferred_vars(&args.polynomial),
    };
    let f = Polynomial::parse(&args.polynomial, &ring, vars).map_err(|e| e.to_string())?;
    match invert_unit(&f) {
        Ok(certificate) => {
            println!("{}", certificate.inverse());
            println!(
                "product = {}",
                certificate.polynomial() * certificate.inverse()
            );
            Ok(0)
        }
        Err(reason) => {
            eprintln!("error: {reason}");
            Ok(1)
        }
    }
}

fn cmd_survey(args: SurveyArgs) -> Result<u8, String> {
    validate_mode_flags(args.poly, args.vars, args.degree, args.method)?;
    if args.max_n == 0 {
        return Err("--max-n must be at least 1".to_string());
    }
    let mut reports = Vec::new();
    for n in 1..=args.max_n {
        let ring = RingSpec::new(n).map_err(|e| e.to_string())?;
        reports.push(decide(&ring, args.poly, args.vars, args.degree, args.method)?);
    }
    let positives: Vec<u64> = reports
        .iter()
        .filter(|r| r.verdict())
        .map(|r| r.ring().n)
        .collect();
    if args.json {
        println!("{}", render::survey_json(&reports, &positives));
    } else {
        for report in &reports {
            println!(
                "{}: {}",
                report.ring(),
                if report.verdict() { "yes" } else { "no" }
            );
        }
        let listed: Vec<String> = positives.iter().map(|n| n.to_string()).collect();
        println!("positives: {}", listed.join(" "));
    }
    Ok(0)
}
