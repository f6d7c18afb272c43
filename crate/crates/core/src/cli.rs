//! The `powersums` command line.
//!
//! [`run`] takes the arguments after the program name and writes to the
//! given streams, so the binary is a one-line wrapper and tests can drive
//! it directly. Exit status: 0 on success (including findings that are
//! only expected errata), 1 when an implementation disagrees with the
//! brute-force oracle or an identity check fails, 2 on usage and domain
//! errors.

use std::io::Write;
use std::str::FromStr;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bernoulli::BernoulliCache;
use crate::bernstein::{bernstein_polynomial, bernstein_value, BernsteinIndex};
use crate::error::Error;
use crate::numeric::{binomial_uncached, int, pascal_row, rat, Rational};
use crate::powersum::{
    cross_validate, faulhaber_polynomial, powersum_bernstein_as_printed, powersum_bernstein_with,
    powersum_bruteforce, powersum_faulhaber_with, PowerSumMethod, PowerSumReport, Status, Tally,
};
use crate::series::{check_eq6, verify_eq1, verify_eq3, Eq6Prefactor, IdentityCheck};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "powersums",
    about = "Exact sums of integer powers and generating-function checks",
    version
)]
struct Cli {
    /// Emit one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Omit timings (elapsed times print as zero in JSON).
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute S_m(n) = 1^m + ... + n^m.
    Sum {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = MethodArg::Brute)]
        method: MethodArg,
        /// Bernstein parameter, only for `bernstein` and `as-printed`.
        #[arg(long)]
        k: Option<u32>,
    },
    /// Print the closed-form polynomial P_m(n) = S_m(n).
    Poly {
        #[arg(long)]
        m: u32,
    },
    /// Print B_0..=B_max.
    Bernoulli {
        #[arg(long)]
        max: usize,
    },
    /// Print B_{k,n}(x) expanded, or its value at a rational point.
    Bernstein {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        n: u64,
        /// Evaluation point, `P/Q` or an integer.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
        at: Option<Rational>,
    },
    /// Check a generating-function identity coefficientwise.
    VerifyGf {
        #[arg(long, value_enum)]
        which: Which,
        /// Upper end of the n sweep (eq6).
        #[arg(long)]
        n: Option<u64>,
        /// Upper end of the k sweep (eq3, eq6).
        #[arg(long)]
        k: Option<usize>,
        /// Truncation order.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Compare every method against the brute-force oracle over a grid.
    Validate {
        #[arg(long)]
        m_max: u32,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        k_max: u32,
    },
    /// Time the corrected methods with warm and cold caches.
    Bench {
        #[arg(long)]
        m_max: u32,
        #[arg(long)]
        n_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Faulhaber,
    Bernstein,
    AsPrinted,
}

impl From<MethodArg> for PowerSumMethod {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Brute => PowerSumMethod::BruteForce,
            MethodArg::Faulhaber => PowerSumMethod::FaulhaberIntegral,
            MethodArg::Bernstein => PowerSumMethod::BernsteinCorrected,
            MethodArg::AsPrinted => PowerSumMethod::BernsteinAsPrinted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Eq1,
    Eq3,
    Eq6,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    Rational::from_str(s.trim()).map_err(|e| format!("not a rational `{s}`: {e}"))
}

/// Sample points for the Bernstein generating-function sweep.
pub fn eq3_sample_points() -> Vec<Rational> {
    vec![int(0), int(1), rat(1, 2), int(-1), int(-3), rat(2, 5)]
}

#[derive(Serialize)]
struct RationalJson {
    num: String,
    den: String,
}

impl From<&Rational> for RationalJson {
    fn from(r: &Rational) -> Self {
        RationalJson {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

#[derive(Serialize)]
struct ReportJson {
    method: &'static str,
    m: u32,
    n: u64,
    k: u32,
    value: RationalJson,
    elapsed_ns: u64,
    status: &'static str,
}

impl ReportJson {
    fn new(r: &PowerSumReport, timing: bool) -> Self {
        ReportJson {
            method: r.method.name(),
            m: r.m,
            n: r.n,
            k: r.k,
            value: (&r.value).into(),
            elapsed_ns: if timing { nanos(r.elapsed) } else { 0 },
            status: r.status.as_str(),
        }
    }
}

#[derive(Serialize)]
struct CheckJson {
    which: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<RationalJson>,
    order: usize,
    status: &'static str,
    first_mismatch: Option<usize>,
}

fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

enum Failure {
    Usage(String),
    Hard(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::ZeroDenominator | Error::ZeroToNegativePower => {
                Failure::Usage(e.to_string())
            }
            Error::NotIntegral { .. } | Error::NotDivisible { .. } => Failure::Hard(e.to_string()),
        }
    }
}

type Outcome = Result<i32, Failure>;

/// Runs the CLI on `argv` (without the program name). Returns the exit status.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("powersums"))
        .chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Hard(msg)) => {
            let _ = writeln!(err, "failure: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let timing = !cli.no_timing;
    match &cli.command {
        Command::Sum { m, n, method, k } => sum(cli.json, timing, *m, *n, *method, *k, out, err),
        Command::Poly { m } => {
            let p = faulhaber_polynomial(*m)?;
            if cli.json {
                let coeffs: Vec<RationalJson> = p.coeffs().iter().map(Into::into).collect();
                let line = serde_json::json!({
                    "m": m,
                    "polynomial": p.display_in("n").to_string(),
                    "coefficients": coeffs,
                });
                writeln!(out, "{line}")?;
            } else {
                writeln!(out, "{}", p.display_in("n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Bernoulli { max } => {
            let numbers = BernoulliCache::global().numbers(*max);
            for (n, b) in numbers.iter().enumerate() {
                if cli.json {
                    let line = serde_json::json!({ "n": n, "value": RationalJson::from(b) });
                    writeln!(out, "{line}")?;
                } else {
                    writeln!(out, "{n} {b}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Bernstein { k, n, at } => {
            let idx = BernsteinIndex::new(*k, *n);
            match (at, cli.json) {
                (Some(x), false) => writeln!(out, "{}", bernstein_value(idx, x))?,
                (Some(x), true) => {
                    let line = serde_json::json!({
                        "k": k, "n": n,
                        "at": RationalJson::from(x),
                        "value": RationalJson::from(&bernstein_value(idx, x)),
                    });
                    writeln!(out, "{line}")?;
                }
                (None, false) => writeln!(out, "{}", bernstein_polynomial(idx))?,
                (None, true) => {
                    let p = bernstein_polynomial(idx);
                    let coeffs: Vec<RationalJson> = p.coeffs().iter().map(Into::into).collect();
                    let line = serde_json::json!({
                        "k": k, "n": n,
                        "polynomial": p.to_string(),
                        "coefficients": coeffs,
                    });
                    writeln!(out, "{line}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::VerifyGf { which, n, k, order } => {
            verify_gf(cli.json, *which, *n, *k, *order, out)
        }
        Command::Validate {
            m_max,
            n_max,
            k_max,
        } => validate(cli.json, timing, *m_max, *n_max, *k_max, out),
        Command::Bench { m_max, n_max } => bench(timing, *m_max, *n_max, out),
    }
}

#[allow(clippy::too_many_arguments)]
fn sum(
    json: bool,
    timing: bool,
    m: u32,
    n: u64,
    method: MethodArg,
    k: Option<u32>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let method = PowerSumMethod::from(method);
    if k.is_some() && !method.uses_k() {
        return Err(Failure::Usage(format!("--k does not apply to {method}")));
    }
    let k = if method.uses_k() { k.unwrap_or(1) } else { 0 };
    let cache = BernoulliCache::global();
    let start = Instant::now();
    let value = match method {
        PowerSumMethod::BruteForce => Rational::from_integer(powersum_bruteforce(m, n)?),
        PowerSumMethod::FaulhaberIntegral => {
            Rational::from_integer(powersum_faulhaber_with(cache, m, n)?)
        }
        PowerSumMethod::BernsteinCorrected => {
            Rational::from_integer(powersum_bernstein_with(cache, m, n, k)?)
        }
        PowerSumMethod::BernsteinAsPrinted => powersum_bernstein_as_printed(m, n, k)?,
    };
    let elapsed = start.elapsed();

    if json {
        let oracle = Rational::from_integer(powersum_bruteforce(m, n)?);
        let status = match (value == oracle, method) {
            (true, _) => Status::Ok,
            (false, PowerSumMethod::BernsteinAsPrinted) if (m, k) != (1, 1) => {
                Status::ExpectedErratum
            }
            (false, _) => Status::Fail,
        };
        let report = PowerSumReport {
            method,
            m,
            n,
            k,
            value,
            elapsed,
            status,
        };
        writeln!(
            out,
            "{}",
            serde_json::to_string(&ReportJson::new(&report, timing))?
        )?;
        return Ok(if status == Status::Fail {
            EXIT_FAILURE
        } else {
            EXIT_OK
        });
    }
    writeln!(out, "{value}")?;
    if timing {
        writeln!(err, "elapsed_ns: {}", nanos(elapsed))?;
    }
    Ok(EXIT_OK)
}

/// One grid point of a `verify-gf` sweep.
struct GridPoint<'a> {
    which: &'static str,
    n: Option<u64>,
    k: Option<usize>,
    x: Option<&'a Rational>,
    order: usize,
}

fn write_check(
    json: bool,
    out: &mut dyn Write,
    point: GridPoint<'_>,
    check: &IdentityCheck,
) -> Result<(), Failure> {
    let GridPoint {
        which,
        n,
        k,
        x,
        order,
    } = point;
    if json {
        let first_mismatch = match check {
            IdentityCheck::Holds => None,
            IdentityCheck::Mismatch { index } | IdentityCheck::NotDivisible { index } => {
                Some(*index)
            }
        };
        let line = CheckJson {
            which,
            n,
            k,
            x: x.map(Into::into),
            order,
            status: if check.holds() { "PASS" } else { "FAIL" },
            first_mismatch,
        };
        writeln!(out, "{}", serde_json::to_string(&line)?)?;
        return Ok(());
    }
    write!(out, "{which}")?;
    if let Some(n) = n {
        write!(out, " n={n}")?;
    }
    if let Some(k) = k {
        write!(out, " k={k}")?;
    }
    if let Some(x) = x {
        write!(out, " x={x}")?;
    }
    writeln!(out, " order={order} {check}")?;
    Ok(())
}

fn verify_gf(
    json: bool,
    which: Which,
    n_max: Option<u64>,
    k_max: Option<usize>,
    order: Option<usize>,
    out: &mut dyn Write,
) -> Outcome {
    let mut all_hold = true;
    match which {
        Which::Eq1 => {
            if n_max.is_some() || k_max.is_some() {
                return Err(Failure::Usage("eq1 takes only --order".into()));
            }
            let order = order.unwrap_or(32);
            let check = verify_eq1(order);
            all_hold &= check.holds();
            let point = GridPoint {
                which: "eq1",
                n: None,
                k: None,
                x: None,
                order,
            };
            write_check(json, out, point, &check)?;
        }
        Which::Eq3 => {
            if n_max.is_some() {
                return Err(Failure::Usage("eq3 takes --k and --order, not --n".into()));
            }
            let order = order.unwrap_or(24);
            let k_max = k_max.unwrap_or(6);
            if k_max > order {
                return Err(Failure::Usage(format!(
                    "--k {k_max} exceeds --order {order}"
                )));
            }
            for k in 0..=k_max {
                for x in eq3_sample_points() {
                    let check = verify_eq3(k, &x, order)?;
                    all_hold &= check.holds();
                    let point = GridPoint {
                        which: "eq3",
                        n: None,
                        k: Some(k),
                        x: Some(&x),
                        order,
                    };
                    write_check(json, out, point, &check)?;
                }
            }
        }
        Which::Eq6 => {
            let order = order.unwrap_or(20);
            let n_max = n_max.unwrap_or(10);
            let k_max = k_max.unwrap_or(4);
            if n_max < 2 || k_max < 1 {
                return Err(Failure::Usage("eq6 needs --n >= 2 and --k >= 1".into()));
            }
            if order < k_max + 2 {
                return Err(Failure::Usage(format!(
                    "eq6 needs --order >= k + 2 = {}",
                    k_max + 2
                )));
            }
            for n in 2..=n_max {
                for k in 1..=k_max {
                    let check = check_eq6(n, k, order, Eq6Prefactor::Full)?;
                    all_hold &= check.holds();
                    let point = GridPoint {
                        which: "eq6",
                        n: Some(n),
                        k: Some(k),
                        x: None,
                        order,
                    };
                    write_check(json, out, point, &check)?;
                }
            }
        }
    }
    Ok(if all_hold { EXIT_OK } else { EXIT_FAILURE })
}

fn validate(
    json: bool,
    timing: bool,
    m_max: u32,
    n_max: u64,
    k_max: u32,
    out: &mut dyn Write,
) -> Outcome {
    let reports = cross_validate(m_max, n_max, k_max)?;
    let tally = Tally::of(&reports);
    if json {
        for r in &reports {
            writeln!(
                out,
                "{}",
                serde_json::to_string(&ReportJson::new(r, timing))?
            )?;
        }
    } else {
        write!(
            out,
            "{:<20} {:>4} {:>6} {:>3} {:>24} {:<16}",
            "method", "m", "n", "k", "value", "status"
        )?;
        if timing {
            write!(out, " {:>12}", "elapsed_ns")?;
        }
        writeln!(out)?;
        for r in &reports {
            write!(
                out,
                "{:<20} {:>4} {:>6} {:>3} {:>24} {:<16}",
                r.method.name(),
                r.m,
                r.n,
                r.k,
                r.value.to_string(),
                r.status.as_str()
            )?;
            if timing {
                write!(out, " {:>12}", nanos(r.elapsed))?;
            }
            writeln!(out)?;
        }
        writeln!(
            out,
            "OK: {}  EXPECTED_ERRATUM: {}  FAIL: {}",
            tally.ok, tally.expected_erratum, tally.fail
        )?;
    }
    Ok(if tally.fail > 0 {
        EXIT_FAILURE
    } else {
        EXIT_OK
    })
}

fn bench(timing: bool, m_max: u32, n_max: u64, out: &mut dyn Write) -> Outcome {
    if m_max == 0 || n_max == 0 {
        return Err(Failure::Usage("bench bounds must be at least 1".into()));
    }
    let cells: Vec<(u32, u64)> = (1..=m_max)
        .flat_map(|m| (1..=n_max).map(move |n| (m, n)))
        .collect();
    let warm = BernoulliCache::global();
    warm.number(m_max as usize + 2);

    let time_grid = |f: &dyn Fn(&BernoulliCache, u32, u64) -> crate::Result<()>,
                     cold: bool|
     -> Result<Duration, Failure> {
        let start = Instant::now();
        for &(m, n) in &cells {
            if cold {
                f(&BernoulliCache::new(), m, n)?;
            } else {
                f(warm, m, n)?;
            }
        }
        Ok(start.elapsed())
    };

    type Case<'a> = (
        &'a str,
        &'a dyn Fn(&BernoulliCache, u32, u64) -> crate::Result<()>,
    );
    let cases: [Case; 3] = [
        ("BruteForce", &|_, m, n| powersum_bruteforce(m, n).map(drop)),
        ("FaulhaberIntegral", &|c, m, n| {
            powersum_faulhaber_with(c, m, n).map(drop)
        }),
        ("BernsteinCorrected", &|c, m, n| {
            powersum_bernstein_with(c, m, n, 1).map(drop)
        }),
    ];

    let fmt_time = |d: Duration| {
        if timing {
            nanos(d).to_string()
        } else {
            "-".to_string()
        }
    };
    writeln!(
        out,
        "{:<28} {:>14} {:>14}",
        "case", "memoized_ns", "cold_ns"
    )?;
    for (name, f) in cases {
        let memo = time_grid(f, false)?;
        let cold = time_grid(f, true)?;
        writeln!(
            out,
            "{:<28} {:>14} {:>14}",
            name,
            fmt_time(memo),
            fmt_time(cold)
        )?;
    }

    let top = (m_max as usize + 2) * 4;
    warm.numbers(top);
    let start = Instant::now();
    warm.numbers(top);
    let memo = start.elapsed();
    let start = Instant::now();
    BernoulliCache::new().numbers(top);
    let cold = start.elapsed();
    writeln!(
        out,
        "{:<28} {:>14} {:>14}",
        format!("bernoulli B_0..B_{top}"),
        fmt_time(memo),
        fmt_time(cold)
    )?;

    pascal_row(top as u64);
    let start = Instant::now();
    for row in 0..=top as u64 {
        pascal_row(row);
    }
    let memo = start.elapsed();
    let start = Instant::now();
    for row in 0..=top as u64 {
        for k in 0..=row as i64 {
            binomial_uncached(row, k);
        }
    }
    let cold = start.elapsed();
    writeln!(
        out,
        "{:<28} {:>14} {:>14}",
        format!("binomial rows 0..{top}"),
        fmt_time(memo),
        fmt_time(cold)
    )?;
    Ok(EXIT_OK)
}
