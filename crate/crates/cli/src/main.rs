//! `qcong`: verify q-supercongruences, their p-adic specializations, and
//! the series identities behind them, from the command line.
//!
//! Commands: `list` (print the claim catalog), `verify` (one claim at one
//! instance), `scan` (every claim over an instance grid, with JSON and
//! markdown reports), `gr` (the two series identities alone).
//!
//! Exit codes, never conflated: 0 = all checks passed, 1 = at least one
//! genuine failure, 2 = usage error or inapplicable instance.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use suite::{
    catalog, claim_info, run, scan, ClaimId, ClaimKind, Instance, Outcome, Report, RunConfig,
    ScanConfig, Verdict,
};

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "qcong",
    version,
    about = "Exact verification of q-supercongruences, p-adic supercongruences, \
             and basic hypergeometric summation identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the claim catalog: id, kind, and full statement of every claim
    List,
    /// Check one claim at one instance and print its verdict
    Verify(VerifyArgs),
    /// Check every claim over an instance grid and report the results
    Scan(ScanArgs),
    /// Check the two infinite-series summation identities coefficientwise
    Gr(GrArgs),
}

/// Sampling knobs shared by `verify` and `scan`.
#[derive(Args)]
struct Knobs {
    /// Seed for all deterministic parameter sampling
    #[arg(long, env = "QCONG_SEED", default_value_t = 42)]
    seed: u64,
    /// Truncation order for the series identities
    #[arg(long, env = "QCONG_SERIES_ORDER", default_value_t = 40)]
    series_order: usize,
    /// Number of sampled (a, b) specializations per parametric claim
    #[arg(long, default_value_t = 5)]
    specializations: usize,
}

impl Knobs {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            specializations: self.specializations,
            series_order: self.series_order,
            ..RunConfig::default()
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id, as printed by `qcong list` (for example `thm1` or `cor2`)
    #[arg(long)]
    claim: String,
    /// Instance for q-congruence claims: the odd integer n >= 3
    #[arg(long)]
    n: Option<u64>,
    /// Instance for p-adic claims: the prime p
    #[arg(long)]
    p: Option<u64>,
    /// Prime-power exponent r (the congruence is taken at p^r)
    #[arg(long, default_value_t = 1)]
    r: u32,
    #[command(flatten)]
    knobs: Knobs,
}

#[derive(Args)]
struct ScanArgs {
    /// Check q-congruence claims at every odd 3 <= n <= n-max (0 = none)
    #[arg(long, default_value_t = 0)]
    n_max: u64,
    /// Comma-separated primes for the p-adic claims
    #[arg(long, value_delimiter = ',')]
    primes: Vec<u64>,
    /// Check prime powers p^r for every 1 <= r <= r-max
    #[arg(long, default_value_t = 1)]
    r_max: u32,
    #[command(flatten)]
    knobs: Knobs,
    /// Write the report to this path as JSON
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the report to this path as markdown
    #[arg(long, value_name = "PATH")]
    md: Option<PathBuf>,
    /// What to print on standard output
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Args)]
struct GrArgs {
    /// Compare the coefficients of q^0 through q^order
    #[arg(long, env = "QCONG_SERIES_ORDER", default_value_t = 40)]
    order: usize,
    /// Number of sampled parameter specializations per identity
    #[arg(long, default_value_t = 3)]
    trials: usize,
    /// Seed for deterministic parameter sampling
    #[arg(long, env = "QCONG_SEED", default_value_t = 42)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Plain,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::List => cmd_list(),
        Command::Verify(args) => cmd_verify(&args),
        Command::Scan(args) => cmd_scan(&args),
        Command::Gr(args) => cmd_gr(&args),
    };
    ExitCode::from(code)
}

/// Print a line to stdout, ignoring write errors so that piping into
/// `head` (which closes the pipe early) does not crash the process.
fn out(line: std::fmt::Arguments<'_>) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout(), "{line}");
}

macro_rules! outln {
    () => { out(format_args!("")) };
    ($($arg:tt)*) => { out(format_args!($($arg)*)) };
}

fn cmd_list() -> u8 {
    for claim in catalog() {
        outln!("{}  [{}]", claim.id, claim.kind);
        outln!("    {}", claim.description);
        outln!("    {}", claim.statement);
        outln!();
    }
    EXIT_PASS
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let claim: ClaimId = match args.claim.parse() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let instance = match (args.n, args.p) {
        (Some(_), Some(_)) => {
            eprintln!("error: give either --n or --p, not both");
            return EXIT_USAGE;
        }
        (Some(n), None) => Instance::OddN(n),
        (None, Some(p)) => Instance::PrimePower { p, r: args.r },
        (None, None) if claim_info(claim).kind == ClaimKind::SeriesIdentity => {
            Instance::Order(args.knobs.series_order)
        }
        (None, None) => {
            eprintln!("error: claim `{claim}` needs --n or --p (see `qcong list`)");
            return EXIT_USAGE;
        }
    };
    match run(claim, instance, &args.knobs.run_config()) {
        Ok(verdict) => {
            print_verdict(&verdict);
            match verdict.outcome {
                Outcome::Pass => EXIT_PASS,
                Outcome::Fail => EXIT_FAIL,
                Outcome::Inapplicable(_) => EXIT_USAGE,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn cmd_scan(args: &ScanArgs) -> u8 {
    let config = ScanConfig {
        n_max: args.n_max,
        primes: args.primes.clone(),
        r_max: args.r_max,
        seed: args.knobs.seed,
        series_order: args.knobs.series_order,
        specializations: args.knobs.specializations,
    };
    let report = match scan(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    if let Some(path) = &args.json {
        if let Err(code) = write_report(path, &json_report(&report)) {
            return code;
        }
    }
    if let Some(path) = &args.md {
        if let Err(code) = write_report(path, &markdown_report(&report)) {
            return code;
        }
    }
    match args.format {
        Format::Json => outln!("{}", json_report(&report)),
        Format::Markdown => outln!("{}", markdown_report(&report).trim_end()),
        Format::Plain => outln!("{}", plain_report(&report).trim_end()),
    }
    if report.all_pass() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn cmd_gr(args: &GrArgs) -> u8 {
    let config = RunConfig {
        seed: args.seed,
        series_order: args.order,
        gr_trials: args.trials,
        ..RunConfig::default()
    };
    let mut all_pass = true;
    for claim in [ClaimId::Gr, ClaimId::GrA] {
        match run(claim, Instance::Order(args.order), &config) {
            Ok(verdict) => {
                all_pass &= verdict.passed();
                print_verdict(&verdict);
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if all_pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn print_verdict(verdict: &Verdict) {
    outln!("{verdict}");
    for check in &verdict.subchecks {
        let tag = if check.pass { "pass" } else { "FAIL" };
        outln!("  [{tag}] {}: {}", check.name, check.detail);
    }
}

fn write_report(path: &Path, contents: &str) -> Result<(), u8> {
    std::fs::write(path, contents).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_USAGE
    })
}

fn json_report(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serialization cannot fail")
}

fn plain_report(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for v in &report.verdicts {
        let state = if v.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{} {}: {} ({} subchecks, {} ms)",
            v.claim,
            v.instance,
            state,
            v.subchecks.len(),
            v.elapsed_ms
        )
        .unwrap();
    }
    writeln!(
        out,
        "summary: {} passed, {} failed, {} inapplicable",
        report.summary.pass, report.summary.fail, report.summary.inapplicable
    )
    .unwrap();
    out
}

fn family_label(kind: ClaimKind) -> &'static str {
    match kind {
        ClaimKind::QCongruence => "q-congruences",
        ClaimKind::ParametricQCongruence => "Parametric q-congruences",
        ClaimKind::PAdic => "p-adic congruences",
        ClaimKind::SeriesIdentity => "Series identities",
    }
}

fn markdown_report(report: &Report) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "# Claim verification report").unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "version {}, seed {}, series order {}, {} specializations",
        report.version, report.seed, report.config.series_order, report.config.specializations
    )
    .unwrap();
    for kind in [
        ClaimKind::QCongruence,
        ClaimKind::ParametricQCongruence,
        ClaimKind::PAdic,
        ClaimKind::SeriesIdentity,
    ] {
        let rows: Vec<_> = report
            .verdicts
            .iter()
            .filter(|v| claim_info(v.claim).kind == kind)
            .collect();
        if rows.is_empty() {
            continue;
        }
        writeln!(out).unwrap();
        writeln!(out, "## {}", family_label(kind)).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "| claim | instance | result | subchecks | time (ms) |").unwrap();
        writeln!(out, "|-------|----------|--------|-----------|-----------|").unwrap();
        for v in rows {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                v.claim,
                v.instance,
                if v.pass { "PASS" } else { "FAIL" },
                v.subchecks.len(),
                v.elapsed_ms
            )
            .unwrap();
        }
    }
    writeln!(out).unwrap();
    writeln!(out, "## Summary").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "| passed | failed | inapplicable |").unwrap();
    writeln!(out, "|--------|--------|--------------|").unwrap();
    writeln!(
        out,
        "| {} | {} | {} |",
        report.summary.pass, report.summary.fail, report.summary.inapplicable
    )
    .unwrap();
    out
}
