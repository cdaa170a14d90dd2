//! Command-line front end: verify identity cases and congruences from the
//! registry, print statistic tables, and expand q-series expressions.
//!
//! Data goes to stdout, diagnostics and summaries to stderr. Exit status is
//! 0 when everything requested succeeded or verified, 1 when any case
//! mismatched (or a congruence or self-check failed), and 2 for usage
//! problems: bad flags, unknown ids, malformed expressions.

mod expr;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcrank::{
    congruence_registry, find_cases, find_congruence, nb_enumerate, registry,
    verify_congruence, CongruenceReport, NbCache, NbTable, Status, VerificationReport,
    Verifier,
};
use serde::Serialize;

/// Largest `n` the enumeration oracle cross-checks in `table --self-check`.
const SELF_CHECK_LIMIT: u64 = 8;

#[derive(Parser)]
#[command(name = "qcrank", version, about = "Exact verifier for colored-partition crank identities", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the registry cases whose id matches a glob
    Verify {
        /// Case id or glob, e.g. eq-1-6 or eq-2-*
        #[arg(long)]
        case: String,
        /// Truncation order; defaults to each case's class default
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify every case in the registry
    VerifyAll {
        /// Truncation order; defaults to each case's class default
        #[arg(long)]
        order: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print NB_k(r, m, n) for r = 0..m-1 and n = 0..n_max
    Table {
        /// Number of colors (at least 2)
        #[arg(long)]
        k: u32,
        /// Crank modulus
        #[arg(long, default_value_t = 5)]
        m: u32,
        #[arg(long = "n-max")]
        n_max: u64,
        /// Cross-check rows against direct enumeration for n <= 8
        #[arg(long)]
        self_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Check one congruence case along its whole progression
    Congruence {
        /// Congruence id, e.g. eq-1-3
        #[arg(long)]
        case: String,
        #[arg(long = "n-max", default_value_t = 100)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Expand an expression in q as an exact truncated series
    Series {
        /// Expression over INT, q, P(a,m), theta, thetaN with + - * / ^
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = 20)]
        order: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            case,
            order,
            format,
        } => cmd_verify(&case, order, format),
        Command::VerifyAll { order, format } => cmd_verify_all(order, format),
        Command::Table {
            k,
            m,
            n_max,
            self_check,
            format,
        } => cmd_table(k, m, n_max, self_check, format),
        Command::Congruence {
            case,
            n_max,
            format,
        } => cmd_congruence(&case, n_max, format),
        Command::Series {
            expr,
            order,
            format,
        } => cmd_series(&expr, order, format),
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

// ---------------------------------------------------------------------------
// verify / verify-all

/// Serialized with keys in canonical (alphabetical) order so that parsing
/// and reserializing a report line reproduces it byte for byte.
#[derive(Serialize)]
struct JsonMismatch {
    exponent: i64,
    lhs: String,
    rhs: String,
}

#[derive(Serialize)]
struct JsonReport {
    elapsed_ms: u64,
    first_mismatch: Option<JsonMismatch>,
    id: String,
    order: i64,
    status: &'static str,
}

impl JsonReport {
    fn of(report: &VerificationReport) -> Self {
        JsonReport {
            elapsed_ms: report.elapsed.as_millis() as u64,
            first_mismatch: report.first_mismatch.as_ref().map(|m| JsonMismatch {
                exponent: m.exponent,
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
            }),
            id: report.id.clone(),
            order: report.order,
            status: report.status.as_str(),
        }
    }
}

fn emit_reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => {
            for report in reports {
                let line = serde_json::to_string(&JsonReport::of(report))
                    .expect("report serialization cannot fail");
                println!("{line}");
            }
        }
        Format::Csv => {
            println!("id,order,status,mismatch_exponent,mismatch_lhs,mismatch_rhs,elapsed_ms");
            for report in reports {
                let (e, l, r) = match &report.first_mismatch {
                    Some(m) => (m.exponent.to_string(), m.lhs.to_string(), m.rhs.to_string()),
                    None => (String::new(), String::new(), String::new()),
                };
                println!(
                    "{},{},{},{},{},{},{}",
                    report.id,
                    report.order,
                    report.status.as_str(),
                    e,
                    l,
                    r,
                    report.elapsed.as_millis()
                );
            }
        }
        Format::Plain => {
            for report in reports {
                match (&report.status, &report.first_mismatch) {
                    (Status::Verified, _) => println!(
                        "{}: verified to order {} ({} ms)",
                        report.id,
                        report.order,
                        report.elapsed.as_millis()
                    ),
                    (Status::Mismatch, Some(m)) => println!(
                        "{}: MISMATCH at q^{}: lhs {}, rhs {} (order {}, {} ms)",
                        report.id,
                        m.exponent,
                        m.lhs,
                        m.rhs,
                        report.order,
                        report.elapsed.as_millis()
                    ),
                    _ => println!(
                        "{}: error (order {}, {} ms)",
                        report.id,
                        report.order,
                        report.elapsed.as_millis()
                    ),
                }
            }
        }
    }
}

/// 0 when every report verified, 1 otherwise; diagnostics to stderr.
fn report_code(reports: &[VerificationReport]) -> u8 {
    let verified = reports
        .iter()
        .filter(|r| r.status == Status::Verified)
        .count();
    let mismatched: Vec<&str> = reports
        .iter()
        .filter(|r| r.status == Status::Mismatch)
        .map(|r| r.id.as_str())
        .collect();
    for report in reports {
        if let Some(message) = &report.error {
            eprintln!("error: {message}");
        }
    }
    if mismatched.is_empty() && verified == reports.len() {
        eprintln!("{verified} case(s) verified");
        0
    } else {
        eprintln!(
            "{} of {} case(s) verified; mismatches: {}",
            verified,
            reports.len(),
            mismatched.join(", ")
        );
        1
    }
}

fn cmd_verify(case: &str, order: Option<i64>, format: Format) -> ExitCode {
    if let Some(order) = order {
        if order < 1 {
            return usage_error("--order must be at least 1");
        }
    }
    let cases = find_cases(case);
    if cases.is_empty() {
        eprintln!("error: no registry case matches '{case}'");
        eprintln!("known ids:");
        for known in registry() {
            eprintln!("  {}", known.id);
        }
        return ExitCode::from(2);
    }
    let reports = Verifier::new().verify_selected(&cases, order);
    emit_reports(&reports, format);
    ExitCode::from(report_code(&reports))
}

fn cmd_verify_all(order: Option<i64>, format: Format) -> ExitCode {
    if let Some(order) = order {
        if order < 1 {
            return usage_error("--order must be at least 1");
        }
    }
    let reports = Verifier::new().verify_all(order);
    emit_reports(&reports, format);
    ExitCode::from(report_code(&reports))
}

// ---------------------------------------------------------------------------
// table

#[derive(Serialize)]
struct JsonRow {
    n: u64,
    sum: String,
    values: Vec<String>,
}

fn cmd_table(k: u32, m: u32, n_max: u64, self_check: bool, format: Format) -> ExitCode {
    if k < 2 {
        return usage_error("--k must be at least 2: the crank needs two designated colors");
    }
    if m < 2 {
        return usage_error("--m must be at least 2: residues are taken mod m");
    }
    let table = NbTable::build(k, m, n_max);
    match format {
        Format::Json => {
            for n in 0..=n_max {
                let row = JsonRow {
                    n,
                    sum: table.row_sum(n).to_string(),
                    values: table.row(n).iter().map(|v| v.to_string()).collect(),
                };
                let line =
                    serde_json::to_string(&row).expect("row serialization cannot fail");
                println!("{line}");
            }
        }
        Format::Csv => {
            let headers: Vec<String> = (0..m).map(|r| format!("r{r}")).collect();
            println!("n,{},sum", headers.join(","));
            for n in 0..=n_max {
                let values: Vec<String> =
                    table.row(n).iter().map(|v| v.to_string()).collect();
                println!("{},{},{}", n, values.join(","), table.row_sum(n));
            }
        }
        Format::Plain => {
            let headers: Vec<String> = (0..m).map(|r| format!("r={r}")).collect();
            println!("n\t{}\tsum", headers.join("\t"));
            for n in 0..=n_max {
                let values: Vec<String> =
                    table.row(n).iter().map(|v| v.to_string()).collect();
                println!("{}\t{}\t{}", n, values.join("\t"), table.row_sum(n));
            }
        }
    }
    if self_check {
        let limit = n_max.min(SELF_CHECK_LIMIT);
        for n in 0..=limit {
            let enumerated = match nb_enumerate(k, m, n) {
                Ok(values) => values,
                Err(e) => {
                    eprintln!("error: self-check unavailable: {e}");
                    return ExitCode::from(2);
                }
            };
            if enumerated.as_slice() != table.row(n) {
                eprintln!(
                    "error: self-check failed at n={n}: series row {:?} != enumerated {:?}",
                    table.row(n),
                    enumerated
                );
                return ExitCode::from(1);
            }
        }
        eprintln!("self-check passed: rows n <= {limit} match direct enumeration");
    }
    ExitCode::SUCCESS
}

// ---------------------------------------------------------------------------
// congruence

#[derive(Serialize)]
struct JsonViolation {
    argument: u64,
    n: u64,
    value: String,
}

#[derive(Serialize)]
struct JsonCongruence {
    elapsed_ms: u64,
    holds: bool,
    id: String,
    n_max: u64,
    violations: Vec<JsonViolation>,
}

fn cmd_congruence(case: &str, n_max: u64, format: Format) -> ExitCode {
    let Some(found) = find_congruence(case) else {
        eprintln!("error: unknown congruence id '{case}'");
        eprintln!("known ids:");
        for known in congruence_registry() {
            eprintln!("  {}", known.id);
        }
        return ExitCode::from(2);
    };
    let report = verify_congruence(found, n_max, &NbCache::new());
    emit_congruence(&report, format);
    if report.holds() {
        eprintln!("{}: holds for all n <= {}", report.id, report.n_max);
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "{}: {} violation(s), first at n={}",
            report.id,
            report.violations.len(),
            report.violations[0].n
        );
        ExitCode::from(1)
    }
}

fn emit_congruence(report: &CongruenceReport, format: Format) {
    match format {
        Format::Json => {
            let json = JsonCongruence {
                elapsed_ms: report.elapsed.as_millis() as u64,
                holds: report.holds(),
                id: report.id.clone(),
                n_max: report.n_max,
                violations: report
                    .violations
                    .iter()
                    .map(|v| JsonViolation {
                        argument: v.argument,
                        n: v.n,
                        value: v.value.to_string(),
                    })
                    .collect(),
            };
            let line = serde_json::to_string(&json).expect("serialization cannot fail");
            println!("{line}");
        }
        Format::Csv => {
            println!("n,argument,value");
            for v in &report.violations {
                println!("{},{},{}", v.n, v.argument, v.value);
            }
        }
        Format::Plain => {
            if report.holds() {
                println!(
                    "{}: congruence holds for all n <= {} ({} ms)",
                    report.id,
                    report.n_max,
                    report.elapsed.as_millis()
                );
            } else {
                for v in &report.violations {
                    println!(
                        "{}: violated at n={} (argument {}): weighted sum {}",
                        report.id, v.n, v.argument, v.value
                    );
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// series

#[derive(Serialize)]
struct JsonCoefficient {
    coefficient: String,
    exponent: i64,
}

fn cmd_series(text: &str, order: i64, format: Format) -> ExitCode {
    if order < 1 {
        return usage_error("--order must be at least 1");
    }
    let parsed = match expr::parse(text) {
        Ok(parsed) => parsed,
        Err(e) => return usage_error(&e.to_string()),
    };
    let series = match expr::eval(&parsed, order) {
        Ok(series) => series,
        Err(e) => return usage_error(&e.to_string()),
    };
    let start = series.valuation().min(0);
    let end = series.precision().min(order);
    if end < order {
        eprintln!(
            "note: window narrows to q^{end} after Laurent shifts; printed through q^{}",
            end - 1
        );
    }
    if format == Format::Csv {
        println!("exponent,coefficient");
    }
    for e in start..end {
        let c = series
            .coeff(e)
            .expect("coefficients below precision are exact");
        match format {
            Format::Json => {
                let line = serde_json::to_string(&JsonCoefficient {
                    coefficient: c.to_string(),
                    exponent: e,
                })
                .expect("serialization cannot fail");
                println!("{line}");
            }
            Format::Csv => println!("{e},{c}"),
            Format::Plain => println!("q^{e}: {c}"),
        }
    }
    ExitCode::SUCCESS
}
