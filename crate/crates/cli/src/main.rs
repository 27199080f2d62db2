//! `pw`: command-line front end for the weighted set-partition engine.
//!
//! Exit codes: 0 on success (and all checks passing), 1 when a check or
//! table verification fails, 2 on usage errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pw_core::combinatorics::{partial_bell, WeightFamily, DEFAULT_BUDGET};
use pw_core::egf::{
    check_fibonacci, check_forest_gf, check_involution_gf, check_lemma21, check_permutation_gf,
    check_tree_identity, EgfReport,
};
use pw_core::identities::{check, run_suite, CheckReport, SuiteRanges};
use pw_core::partitions::{enumerate, weight, DEFAULT_ORACLE_CAP};
use pw_core::ring::{is_integer, rat_to_i64, Poly};
use pw_core::singleton::build_triangle;

#[derive(Parser)]
#[command(
    name = "pw",
    version,
    about = "Exact engine for largest-singleton statistics of weighted set partitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Symbolic,
    Permutation,
    Involution,
    Forest,
}

impl FamilyArg {
    fn family(self, budget: usize) -> WeightFamily {
        match self {
            FamilyArg::Symbolic => WeightFamily::symbolic_with_budget(budget),
            FamilyArg::Permutation => WeightFamily::Permutation,
            FamilyArg::Involution => WeightFamily::Involution,
            FamilyArg::Forest => WeightFamily::Forest,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GfWhich {
    Lemma21,
    Permutation,
    Involution,
    Forest,
    Tree,
    Fibonacci,
}

#[derive(Subcommand)]
enum Command {
    /// Print a specialization triangle row by row
    Tables {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Also write the output to this path
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Symbolic variable budget (symbolic family only)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Print a single triangle entry A(n, k)
    Value {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Symbolic variable budget (symbolic family only)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Stream every partition of {1..n} with its weight
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Symbolic)]
        family: FamilyArg,
    },
    /// Print a partial Bell polynomial (weight of partitions of an n-set
    /// into exactly r blocks)
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = FamilyArg::Symbolic)]
        family: FamilyArg,
    },
    /// Machine-check a generating-function identity
    EgfCheck {
        #[arg(long, value_enum)]
        which: GfWhich,
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Weight family for the lemma21 check
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
    },
    /// Check one identity at explicit parameters
    Check {
        #[arg(long)]
        id: String,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        k: Option<i64>,
    },
    /// Run the identity suite over parameter grids
    Suite {
        /// Override the default grid bound for n
        #[arg(long)]
        nmax: Option<i64>,
        /// Override the default grid bound for m
        #[arg(long)]
        mmax: Option<i64>,
        /// Override the default grid bound for k
        #[arg(long)]
        kmax: Option<i64>,
        #[arg(long, default_value_t = 4)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        /// Also write the report to this path
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

/// Failures that should exit 2 (bad request) vs 1 (checked and false).
enum CliError {
    Usage(String),
    CheckFailed,
}

impl From<pw_core::Error> for CliError {
    fn from(e: pw_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn oracle_cap() -> Result<usize, CliError> {
    match std::env::var("PW_ORACLE_CAP") {
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid PW_ORACLE_CAP value {s:?}"))),
        Err(_) => Ok(DEFAULT_ORACLE_CAP),
    }
}

fn emit(text: &str, out: &Option<std::path::PathBuf>) -> Result<(), CliError> {
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.write_all(b"\n"))
        .map_err(|e| CliError::Usage(format!("cannot write to stdout: {e}")))?;
    if let Some(path) = out {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// A triangle cell for JSON output: a plain number when it fits in 64 bits,
/// else its decimal (or canonical polynomial) text.
fn cell_json(p: &Poly) -> Value {
    if let Some(r) = p.as_rational() {
        if is_integer(&r) {
            if let Some(v) = rat_to_i64(&r) {
                return json!(v);
            }
        }
    }
    json!(p.to_string())
}

fn budget_for(family: FamilyArg, budget: Option<usize>) -> Result<usize, CliError> {
    if budget.is_some() && family != FamilyArg::Symbolic {
        return Err(CliError::Usage(
            "--budget only applies to the symbolic family".into(),
        ));
    }
    Ok(budget.unwrap_or(DEFAULT_BUDGET))
}

fn run_tables(
    family: FamilyArg,
    nmax: usize,
    format: TableFormat,
    out: &Option<std::path::PathBuf>,
    budget: Option<usize>,
) -> Result<(), CliError> {
    let budget = budget_for(family, budget)?.max(nmax + 1);
    let fam = family.family(budget);
    let tri = build_triangle(&fam, nmax)?;
    let text = match format {
        TableFormat::Csv => {
            let mut lines = Vec::with_capacity(nmax + 2);
            let header: Vec<String> = std::iter::once("n/k".to_string())
                .chain((0..=nmax).map(|k| k.to_string()))
                .collect();
            lines.push(header.join(","));
            for n in 0..=nmax {
                let mut cells = vec![n.to_string()];
                for k in 0..=nmax {
                    if k <= n {
                        cells.push(tri.entry(n, k).unwrap().to_string());
                    } else {
                        cells.push(String::new());
                    }
                }
                lines.push(cells.join(","));
            }
            lines.join("\n")
        }
        TableFormat::Json => {
            let rows: Vec<Value> = (0..=nmax)
                .map(|n| {
                    Value::Array(
                        (0..=n)
                            .map(|k| cell_json(tri.entry(n, k).unwrap()))
                            .collect(),
                    )
                })
                .collect();
            serde_json::to_string(&json!({
                "family": fam.label(),
                "nmax": nmax,
                "rows": rows,
            }))
            .expect("report serializes")
        }
    };
    emit(&text, out)
}

fn egf_report(which: GfWhich, order: usize, family: Option<FamilyArg>) -> Result<EgfReport, CliError> {
    if family.is_some() && which != GfWhich::Lemma21 {
        return Err(CliError::Usage(
            "--family only applies to the lemma21 check".into(),
        ));
    }
    let report = match which {
        GfWhich::Lemma21 => {
            let fam = family
                .unwrap_or(FamilyArg::Symbolic)
                .family(DEFAULT_BUDGET.max(order + 1));
            check_lemma21(order, &fam)?
        }
        GfWhich::Permutation => check_permutation_gf(order)?,
        GfWhich::Involution => check_involution_gf(order)?,
        GfWhich::Forest => check_forest_gf(order)?,
        GfWhich::Tree => check_tree_identity(order)?,
        GfWhich::Fibonacci => check_fibonacci(order)?,
    };
    Ok(report)
}

fn render_suite_text(reports: &[CheckReport]) -> String {
    let mut lines = Vec::with_capacity(reports.len());
    for r in reports {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let status = if r.passed() { "pass" } else { "fail" };
        lines.push(format!("{status} {} [{}]", r.id, params.join(", ")));
    }
    lines.join("\n")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Tables {
            family,
            nmax,
            format,
            out,
            budget,
        } => run_tables(family, nmax, format, &out, budget),
        Command::Value {
            family,
            n,
            k,
            budget,
        } => {
            let budget = budget_for(family, budget)?.max(n + 1);
            let fam = family.family(budget);
            let tri = build_triangle(&fam, n)?;
            emit(&tri.entry(n, k)?.to_string(), &None)
        }
        Command::Enumerate { n, family } => {
            let fam = family.family(n.max(1));
            let cap = oracle_cap()?;
            let mut lines = Vec::new();
            for p in enumerate(n, cap)? {
                let w = weight(&p, &fam)?;
                lines.push(format!("{p}\t{w}"));
            }
            emit(&lines.join("\n"), &None)
        }
        Command::Bell { n, r, family } => {
            let fam = family.family(DEFAULT_BUDGET.max(n.max(1)));
            emit(&partial_bell(n, r, &fam)?.to_string(), &None)
        }
        Command::EgfCheck {
            which,
            order,
            family,
        } => {
            let report = egf_report(which, order, family)?;
            emit(
                &serde_json::to_string(&report).expect("report serializes"),
                &None,
            )?;
            if report.pass {
                Ok(())
            } else {
                Err(CliError::CheckFailed)
            }
        }
        Command::Check { id, n, m, k } => {
            let mut bindings = BTreeMap::new();
            if let Some(v) = n {
                bindings.insert("n".to_string(), v);
            }
            if let Some(v) = m {
                bindings.insert("m".to_string(), v);
            }
            if let Some(v) = k {
                bindings.insert("k".to_string(), v);
            }
            let report = check(&id, &bindings)?;
            emit(
                &serde_json::to_string(&report).expect("report serializes"),
                &None,
            )?;
            if report.passed() {
                Ok(())
            } else {
                Err(CliError::CheckFailed)
            }
        }
        Command::Suite {
            nmax,
            mmax,
            kmax,
            workers,
            format,
            out,
        } => {
            let mut ranges = SuiteRanges::new();
            if let Some(v) = nmax {
                ranges.insert("n".to_string(), v);
            }
            if let Some(v) = mmax {
                ranges.insert("m".to_string(), v);
            }
            if let Some(v) = kmax {
                ranges.insert("k".to_string(), v);
            }
            let reports = run_suite(&ranges, workers)?;
            let text = match format {
                ReportFormat::Json => {
                    serde_json::to_string(&reports).expect("report serializes")
                }
                ReportFormat::Text => render_suite_text(&reports),
            };
            emit(&text, &out)?;
            if reports.iter().all(CheckReport::passed) {
                Ok(())
            } else {
                Err(CliError::CheckFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::CheckFailed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
