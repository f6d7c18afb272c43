//! Sums of powers `S_m(n) = 1^m + 2^m + ... + n^m`.
//!
//! Four routes to the same number:
//!
//! * [`powersum_bruteforce`] adds the terms directly. It is the oracle.
//! * [`powersum_faulhaber`] integrates the Bernoulli polynomial:
//!   `S_m(n) = ∫_1^{n+1} B_m(x) dx`.
//! * [`powersum_bernstein`] uses Bernstein polynomials evaluated at `-n`:
//!
//!   ```text
//!   S_m(n) = (-1/n)^k k! m! / (m+k+1)! · Σ_{l=k}^{m+k+1} C(m+k+1, l) B_{m+k+1-l} B_{k,l}(-n)
//!          - 1/(m+1) · Σ_{l=0}^{m+1} C(m+1, l) 2^{m+1-l} B_l
//!          + 1
//!   ```
//!
//!   for any `k ≥ 1`; the value does not depend on `k`. These constants come
//!   from reading off the coefficient of `t^m / m!` in the generating-function
//!   identity checked by [`crate::series::check_eq6`].
//! * [`powersum_bernstein_as_printed`] is the same sum with `1/(m+k+1)!` in
//!   the first term and `1/(m+1)!` in the second. That is the form the
//!   formula is commonly quoted in. It agrees with `S_m(n)` on `m = k = 1`
//!   and is wrong in general; it is kept so the discrepancy can be shown.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::bernoulli::BernoulliCache;
use crate::bernstein::bernstein_at_negative_n;
use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial, int, rational_powu, to_integer, Integer, Rational};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PowerSumMethod {
    BruteForce,
    FaulhaberIntegral,
    BernsteinCorrected,
    BernsteinAsPrinted,
}

impl PowerSumMethod {
    pub const ALL: [PowerSumMethod; 4] = [
        PowerSumMethod::BruteForce,
        PowerSumMethod::FaulhaberIntegral,
        PowerSumMethod::BernsteinCorrected,
        PowerSumMethod::BernsteinAsPrinted,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PowerSumMethod::BruteForce => "BruteForce",
            PowerSumMethod::FaulhaberIntegral => "FaulhaberIntegral",
            PowerSumMethod::BernsteinCorrected => "BernsteinCorrected",
            PowerSumMethod::BernsteinAsPrinted => "BernsteinAsPrinted",
        }
    }

    /// Whether the method takes the Bernstein parameter `k`.
    pub fn uses_k(self) -> bool {
        matches!(
            self,
            PowerSumMethod::BernsteinCorrected | PowerSumMethod::BernsteinAsPrinted
        )
    }
}

impl fmt::Display for PowerSumMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Ok,
    /// The as-printed formula disagrees with the oracle where it is expected to.
    ExpectedErratum,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::ExpectedErratum => "EXPECTED_ERRATUM",
            Status::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

/// One computed cell of a cross-validation sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumReport {
    pub method: PowerSumMethod,
    pub m: u32,
    pub n: u64,
    /// Zero for methods that do not use it.
    pub k: u32,
    pub value: Rational,
    pub elapsed: Duration,
    pub status: Status,
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    Ok(())
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    Ok(())
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::domain("k must be at least 1"));
    }
    Ok(())
}

fn integral(method: &'static str, value: Rational) -> Result<Integer> {
    to_integer(&value).ok_or(Error::NotIntegral { method, value })
}

fn ratio(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}

pub fn powersum_bruteforce(m: u32, n: u64) -> Result<Integer> {
    check_n(n)?;
    Ok((1..=n).map(|l| Integer::from(l).pow(m)).sum())
}

pub fn powersum_faulhaber(m: u32, n: u64) -> Result<Integer> {
    powersum_faulhaber_with(BernoulliCache::global(), m, n)
}

pub fn powersum_faulhaber_with(cache: &BernoulliCache, m: u32, n: u64) -> Result<Integer> {
    integral("FaulhaberIntegral", faulhaber_exact(cache, m, n)?)
}

fn faulhaber_exact(cache: &BernoulliCache, m: u32, n: u64) -> Result<Rational> {
    check_m(m)?;
    check_n(n)?;
    let b = cache.polynomial(m as usize);
    Ok(b.integrate(&int(1), &Rational::from_integer(Integer::from(n) + 1)))
}

/// `Σ_{l=k}^{m+k+1} C(m+k+1, l) B_{m+k+1-l} B_{k,l}(-n)`.
fn bernstein_sum(cache: &BernoulliCache, m: u32, n: u64, k: u32) -> Rational {
    let top = (m + k + 1) as u64;
    let numbers = cache.numbers(top as usize);
    (k as u64..=top)
        .map(|l| {
            let b = &numbers[(top - l) as usize];
            if b.is_zero() {
                return Rational::zero();
            }
            Rational::from_integer(binomial(top, l as i64))
                * b
                * bernstein_at_negative_n(k as u64, l, n)
        })
        .sum()
}

/// `Σ_{l=0}^{m+1} C(m+1, l) 2^{m+1-l} B_l`.
fn doubling_sum(cache: &BernoulliCache, m: u32) -> Rational {
    let top = (m + 1) as u64;
    let numbers = cache.numbers(top as usize);
    (0..=top)
        .map(|l| {
            let weight = binomial(top, l as i64) * Integer::from(2).pow((top - l) as u32);
            Rational::from_integer(weight) * &numbers[l as usize]
        })
        .sum()
}

fn minus_inverse_n_pow(n: u64, k: u32) -> Rational {
    rational_powu(&ratio(Integer::from(-1), Integer::from(n)), k as u64)
}

pub fn powersum_bernstein(m: u32, n: u64, k: u32) -> Result<Integer> {
    powersum_bernstein_with(BernoulliCache::global(), m, n, k)
}

pub fn powersum_bernstein_with(cache: &BernoulliCache, m: u32, n: u64, k: u32) -> Result<Integer> {
    integral("BernsteinCorrected", bernstein_exact(cache, m, n, k)?)
}

fn bernstein_exact(cache: &BernoulliCache, m: u32, n: u64, k: u32) -> Result<Rational> {
    check_m(m)?;
    check_n(n)?;
    check_k(k)?;
    let norm = ratio(
        factorial(k as u64) * factorial(m as u64),
        factorial((m + k + 1) as u64),
    );
    let first = minus_inverse_n_pow(n, k) * norm * bernstein_sum(cache, m, n, k);
    let second = doubling_sum(cache, m) / int(m as i64 + 1);
    Ok(first - second + Rational::one())
}

/// The Bernstein formula with its commonly quoted constants. Not a power sum
/// in general; see the module docs.
pub fn powersum_bernstein_as_printed(m: u32, n: u64, k: u32) -> Result<Rational> {
    powersum_bernstein_as_printed_with(BernoulliCache::global(), m, n, k)
}

pub fn powersum_bernstein_as_printed_with(
    cache: &BernoulliCache,
    m: u32,
    n: u64,
    k: u32,
) -> Result<Rational> {
    check_m(m)?;
    check_n(n)?;
    check_k(k)?;
    let first = minus_inverse_n_pow(n, k) * bernstein_sum(cache, m, n, k)
        / Rational::from_integer(factorial((m + k + 1) as u64));
    let second = doubling_sum(cache, m) / Rational::from_integer(factorial((m + 1) as u64));
    Ok(first - second + Rational::one())
}

/// `P_m` with `P_m(n) = S_m(n)`, i.e. `∫_1^{n+1} B_m(x) dx` expanded in `n`.
pub fn faulhaber_polynomial(m: u32) -> Result<Polynomial> {
    check_m(m)?;
    let anti = BernoulliCache::global()
        .polynomial(m as usize)
        .antiderivative();
    let at_one = anti.eval(&int(1));
    let shifted = anti.compose(&Polynomial::linear(int(1), int(1)));
    Ok(&shifted - &Polynomial::constant(at_one))
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn oracle_status(
    method: PowerSumMethod,
    m: u32,
    k: u32,
    value: &Rational,
    oracle: &Integer,
) -> Status {
    let agrees = value.is_integer() && value.numer() == oracle;
    match (agrees, method) {
        (true, _) => Status::Ok,
        (false, PowerSumMethod::BernsteinAsPrinted) if (m, k) != (1, 1) => Status::ExpectedErratum,
        (false, _) => Status::Fail,
    }
}

/// Every method at one `(m, n)`, with the Bernstein variants for `k = 1..=k_max`.
pub fn evaluate_cell(
    cache: &BernoulliCache,
    m: u32,
    n: u64,
    k_max: u32,
) -> Result<Vec<PowerSumReport>> {
    check_m(m)?;
    check_n(n)?;
    check_k(k_max)?;
    let (oracle, elapsed) = timed(|| powersum_bruteforce(m, n));
    let oracle = oracle?;
    let mut out = Vec::with_capacity(2 + 2 * k_max as usize);
    let mut push = |method, k, value: Rational, elapsed| {
        let status = oracle_status(method, m, k, &value, &oracle);
        out.push(PowerSumReport {
            method,
            m,
            n,
            k,
            value,
            elapsed,
            status,
        });
    };
    push(
        PowerSumMethod::BruteForce,
        0,
        Rational::from_integer(oracle.clone()),
        elapsed,
    );
    let (v, elapsed) = timed(|| faulhaber_exact(cache, m, n));
    push(PowerSumMethod::FaulhaberIntegral, 0, v?, elapsed);
    for k in 1..=k_max {
        let (v, elapsed) = timed(|| bernstein_exact(cache, m, n, k));
        push(PowerSumMethod::BernsteinCorrected, k, v?, elapsed);
        let (v, elapsed) = timed(|| powersum_bernstein_as_printed_with(cache, m, n, k));
        push(PowerSumMethod::BernsteinAsPrinted, k, v?, elapsed);
    }
    Ok(out)
}

/// Runs every method over `1..=m_max × 1..=n_max`, comparing each against
/// the brute-force oracle. Cells are evaluated in parallel; the result is
/// ordered by `(m, n, k, method)`.
pub fn cross_validate(m_max: u32, n_max: u64, k_max: u32) -> Result<Vec<PowerSumReport>> {
    if m_max == 0 || n_max == 0 || k_max == 0 {
        return Err(Error::domain(
            "cross_validate bounds must all be at least 1",
        ));
    }
    let cells: Vec<(u32, u64)> = (1..=m_max)
        .flat_map(|m| (1..=n_max).map(move |n| (m, n)))
        .collect();
    let cache = BernoulliCache::global();
    // warm the shared table once so workers only read it
    cache.number((m_max + k_max + 1) as usize);
    let per_cell: Vec<Vec<PowerSumReport>> = cells
        .par_iter()
        .map(|&(m, n)| evaluate_cell(cache, m, n, k_max))
        .collect::<Result<_>>()?;
    let mut reports: Vec<PowerSumReport> = per_cell.into_iter().flatten().collect();
    reports.sort_by_key(|r| (r.m, r.n, r.k, r.method));
    Ok(reports)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub ok: usize,
    pub expected_erratum: usize,
    pub fail: usize,
}

impl Tally {
    pub fn of(reports: &[PowerSumReport]) -> Self {
        reports.iter().fold(Tally::default(), |mut t, r| {
            match r.status {
                Status::Ok => t.ok += 1,
                Status::ExpectedErratum => t.expected_erratum += 1,
                Status::Fail => t.fail += 1,
            }
            t
        })
    }
}
