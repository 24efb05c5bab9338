//! Command-line front end: table commands, single evaluations, and the
//! verification suites. Every subcommand renders either a human-readable text
//! block or the JSON report schema; rationals always serialize as `p/q`
//! strings, floats with 17 significant digits. Exit codes: 0 success,
//! 1 any failed check, 2 usage error. Pole and quadrature errors become
//! failed reports rather than crashes.

use crate::altsum;
use crate::bell;
use crate::bernoulli;
use crate::harmonic::harmonic_shifted;
use crate::rational::parse_rational;
use crate::report::{fmt_f64, p, IdentityReport, SuiteReport};
use crate::stirling;
use crate::verify::{self, Suite, VerifyBudget};
use crate::zeta_even;
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use std::ffi::OsString;
use std::fmt::Write as _;

#[derive(Debug, Parser)]
#[command(
    name = "bellforge",
    version,
    about = "Exact complete Bell polynomials, the numbers built from them, and verification suites for their identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Complete Bell polynomial values Y_0..Y_r at rational arguments.
    Bell {
        /// Comma-separated rational arguments x_1,...,x_r (e.g. "1,1/2,-3").
        #[arg(long, allow_hyphen_values = true)]
        args: String,
    },
    /// Signed Stirling-number row s(n, 0..n) via three independent routes.
    Stirling {
        #[arg(long)]
        n: u64,
    },
    /// Table of generalized harmonic numbers H_n^(m)(x) for m = 1..max-m.
    Harmonic {
        #[arg(long)]
        n: u64,
        /// Largest order m in the table.
        #[arg(long = "max-m", default_value_t = 5)]
        max_m: u32,
        /// Rational shift x.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: String,
    },
    /// Alternating binomial sum next to its two Bell-polynomial closed forms.
    Altsum {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u32,
        /// Rational shift x.
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x: String,
    },
    /// Bernoulli numbers B_0..B_N, cross-checked against the series oracle.
    Bernoulli {
        #[arg(long = "N")]
        n: usize,
    },
    /// Rationals q_n with zeta(2n) = q_n pi^(2n), plus their float values.
    ZetaEven {
        #[arg(long = "N", default_value_t = 8)]
        n: usize,
    },
    /// zeta(r) from the alternating-sum series at t = 1/2.
    ZetaApprox {
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 60)]
        terms: u64,
    },
    /// Run a verification suite and list every identity checked.
    Verify {
        /// One of: bell, stirling, section2, section3, section4, section5,
        /// section6, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Cap the table/grid sizes (defaults are acceptance grade).
        #[arg(long = "max-n")]
        max_n: Option<u64>,
        /// Cap the order/derivative parameters.
        #[arg(long = "max-r")]
        max_r: Option<u32>,
    },
}

/// Parse argv and execute; returns the process exit code. Printing goes to
/// stdout (results) and stderr (usage errors), matching the exit-code
/// contract: 0 success, 1 failed check, 2 usage error.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version arrive here with exit code 0.
            let _ = err.print();
            return err.exit_code();
        }
    };
    match run_command(&cli.command) {
        Ok((report, text)) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{text}"),
            }
            i32::from(!report.passed)
        }
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

/// Execute a parsed command. `Err` is a usage problem (exit 2); the returned
/// report's `passed` flag decides between exit 0 and 1.
pub fn run_command(command: &Command) -> Result<(SuiteReport, String), String> {
    match command {
        Command::Bell { args } => run_bell(args),
        Command::Stirling { n } => Ok(run_stirling(*n)),
        Command::Harmonic { n, max_m, x } => {
            let x = parse_flag_rational("--x", x)?;
            Ok(run_harmonic(*n, *max_m, &x))
        }
        Command::Altsum { n, r, x } => {
            let x = parse_flag_rational("--x", x)?;
            Ok(run_altsum(*n, *r, &x))
        }
        Command::Bernoulli { n } => Ok(run_bernoulli(*n)),
        Command::ZetaEven { n } => Ok(run_zeta_even(*n)),
        Command::ZetaApprox { r, terms } => {
            if *r < 2 {
                return Err("--r must be at least 2 (the series normalization vanishes at r = 1)"
                    .to_string());
            }
            Ok(run_zeta_approx(*r, *terms))
        }
        Command::Verify {
            suite,
            max_n,
            max_r,
        } => {
            let suite = Suite::parse(suite).ok_or_else(|| {
                format!(
                    "unknown value for --suite: {suite} (expected bell, stirling, \
                     section2..section6, or all)"
                )
            })?;
            let budget = VerifyBudget {
                max_n: *max_n,
                max_r: *max_r,
            };
            Ok(run_verify(suite, budget))
        }
    }
}

fn parse_flag_rational(flag: &str, raw: &str) -> Result<BigRational, String> {
    parse_rational(raw).map_err(|e| format!("invalid value for {flag}: {e}"))
}

fn run_bell(args: &str) -> Result<(SuiteReport, String), String> {
    let mut xs = Vec::new();
    for piece in args.split(',') {
        xs.push(parse_rational(piece).map_err(|e| format!("invalid value for --args: {e}"))?);
    }
    let r = xs.len();
    let recurrence = bell::sequence(r, &xs);
    let partition: Vec<BigRational> = (0..=r).map(|k| bell::partition_sum(k, &xs)).collect();
    let agree = recurrence == partition;
    let mut text = String::new();
    for (k, y) in recurrence.iter().enumerate() {
        let _ = writeln!(text, "Y_{k} = {y}");
    }
    let _ = writeln!(text, "agreement: {agree}");
    let report = IdentityReport::exact_rendered(
        "bell-values",
        &[("args", args.to_string())],
        bell::render_values(&recurrence),
        bell::render_values(&partition),
        agree,
    );
    Ok((SuiteReport::new("bell", vec![report]), text))
}

fn run_stirling(n: u64) -> (SuiteReport, String) {
    let row = stirling::row_oracle(n);
    let report = stirling::three_route_report(n);
    let rendered = row
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    let text = format!("row: {rendered}\nagreement: {}\n", report.passed);
    (SuiteReport::new("stirling", vec![report]), text)
}

fn run_harmonic(n: u64, max_m: u32, x: &BigRational) -> (SuiteReport, String) {
    let mut lines = Vec::new();
    for m in 1..=max_m.max(1) {
        match harmonic_shifted(n, m, x) {
            Ok(value) => lines.push(format!("H_{n}^({m})({x}) = {value}")),
            Err(err) => {
                let report = IdentityReport::exact_rendered(
                    "harmonic-table",
                    &[("n", p(n)), ("max-m", p(max_m)), ("x", p(x))],
                    err.to_string(),
                    "a pole-free shift".to_string(),
                    false,
                );
                let text = format!("{err}\n");
                return (SuiteReport::new("harmonic", vec![report]), text);
            }
        }
    }
    let rendered = lines.join("; ");
    let report = IdentityReport::exact_rendered(
        "harmonic-table",
        &[("n", p(n)), ("max-m", p(max_m)), ("x", p(x))],
        rendered,
        "finite table".to_string(),
        true,
    );
    let text = lines.join("\n") + "\n";
    (SuiteReport::new("harmonic", vec![report]), text)
}

fn run_altsum(n: u64, r: u32, x: &BigRational) -> (SuiteReport, String) {
    let params = [("n", p(n)), ("r", p(r)), ("x", p(x))];
    let pole_report = |err: String| {
        IdentityReport::exact_rendered(
            "shifted-sum-values",
            &params,
            err,
            "a pole-free shift".to_string(),
            false,
        )
    };
    let brute = match altsum::brute(n, r, x) {
        Ok(v) => v,
        Err(e) => {
            let text = format!("{e}\n");
            return (SuiteReport::new("altsum", vec![pole_report(e.to_string())]), text);
        }
    };
    let direct = altsum::coppo_bell(n, r, x).expect("brute succeeded, same pole set");
    let reflected = altsum::coppo_bell_reflected(n, r, x).expect("brute succeeded, same pole set");
    let direct_report = IdentityReport::exact("shifted-sum-bell-form", &params, &direct, &brute);
    let reflected_report =
        IdentityReport::exact("shifted-sum-reflected-bell-form", &params, &reflected, &brute);
    let agree = direct_report.passed && reflected_report.passed;
    let text = format!(
        "brute force = {brute}\nbell form = {direct}\nreflected bell form = {reflected}\nagreement: {agree}\n"
    );
    (
        SuiteReport::new("altsum", vec![direct_report, reflected_report]),
        text,
    )
}

fn run_bernoulli(n: usize) -> (SuiteReport, String) {
    let table = bernoulli::bernoulli(n);
    let oracle = bernoulli::bernoulli_egf_oracle(n);
    let report = IdentityReport::exact_rendered(
        "bernoulli-table",
        &[("max-index", p(n))],
        bell::render_values(&table),
        bell::render_values(&oracle),
        table == oracle,
    );
    let text = table
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
        + "\n";
    (SuiteReport::new("bernoulli", vec![report]), text)
}

fn run_zeta_even(n: usize) -> (SuiteReport, String) {
    let n = n.max(1);
    let table = zeta_even::zeta_even_table(n);
    let mut text = String::new();
    for (k, q, f) in &table {
        let _ = writeln!(text, "q_{k} = {q}    zeta({}) ~ {}", 2 * k, fmt_f64(*f));
    }
    let rationals: Vec<BigRational> = table.iter().map(|(_, q, _)| q.clone()).collect();
    let floats: Vec<String> = table.iter().map(|(_, _, f)| fmt_f64(*f)).collect();
    let table_report = IdentityReport::exact_rendered(
        "zeta-even-table",
        &[("max-n", p(n))],
        bell::render_values(&rationals),
        bell::render_values(&floats),
        true,
    );
    let monotone = zeta_even::monotone_report(n);
    (
        SuiteReport::new("zeta-even", vec![table_report, monotone]),
        text,
    )
}

fn run_zeta_approx(r: u32, terms: u64) -> (SuiteReport, String) {
    let value = altsum::zeta_via_half(r, terms);
    let rendered = fmt_f64(value);
    let report = IdentityReport::exact_rendered(
        "zeta-from-alternating-series",
        &[("r", p(r)), ("terms", p(terms))],
        rendered.clone(),
        "a finite series value".to_string(),
        value.is_finite(),
    );
    let text = format!("zeta({r}) ~ {rendered} ({terms} terms)\n");
    (SuiteReport::new("zeta-approx", vec![report]), text)
}

fn run_verify(suite: Suite, budget: VerifyBudget) -> (SuiteReport, String) {
    let report = verify::run_suite(suite, budget);
    let mut text = String::new();
    for result in &report.results {
        let _ = writeln!(text, "{}", result.line());
    }
    let _ = writeln!(
        text,
        "suite {}: {} ({} checks)",
        report.suite,
        if report.passed { "PASS" } else { "FAIL" },
        report.results.len()
    );
    (report, text)
}
