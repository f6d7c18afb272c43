//! Acceptance suite. Every comparison is exact equality of normalized
//! rationals; the only thresholds are the wall-clock budgets.
//!
//! Prints one PASS/FAIL line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use powersums::bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliCache};
use powersums::bernstein::{bernstein_polynomial, bernstein_value, BernsteinIndex};
use powersums::numeric::{binomial, int, rat};
use powersums::powersum::{
    faulhaber_polynomial, powersum_bernstein, powersum_bernstein_as_printed,
};
use powersums::series::{check_eq6, verify_eq1, verify_eq3, verify_eq6, Eq6Prefactor};
use powersums::{Polynomial, Rational};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(budget: Duration, start: Instant, what: &str) -> Outcome {
    let took = start.elapsed();
    ensure(took < budget, || {
        format!("{what} took {took:?}, budget {budget:?}")
    })
}

fn brute(m: u32, upto: i64) -> Rational {
    let s: BigInt = (1..=upto).map(|l| BigInt::from(l).pow(m)).sum();
    Rational::from_integer(s)
}

fn closed_forms() -> [Polynomial; 3] {
    [
        Polynomial::new(vec![int(0), rat(1, 2), rat(1, 2)]),
        Polynomial::new(vec![int(0), rat(1, 6), rat(1, 2), rat(1, 3)]),
        Polynomial::new(vec![int(0), int(0), rat(1, 4), rat(1, 2), rat(1, 4)]),
    ]
}

fn criterion_1() -> Outcome {
    for (m, want) in (1..=3).zip(closed_forms()) {
        let got = faulhaber_polynomial(m).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("P_{m} = {got}, want {want}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for k in 1..=10usize {
        let b = bernoulli_polynomial(k);
        for n in 2..=30i64 {
            let got = b.integrate(&int(1), &int(n));
            let want = brute(k as u32, n - 1);
            ensure(got == want, || {
                format!("k={k} n={n}: integral {got}, brute {want}")
            })?;
        }
    }
    within(Duration::from_secs(1), start, "Bernoulli integral sweep")
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for m in 1..=8u32 {
        for n in 1..=20u64 {
            let want = brute(m, n as i64);
            let values: Vec<Rational> = (1..=6)
                .map(|k| powersum_bernstein(m, n, k).map(Rational::from_integer))
                .collect::<Result<_, _>>()
                .map_err(|e| format!("m={m} n={n}: {e}"))?;
            for (k, v) in (1..).zip(&values) {
                ensure(*v == want, || {
                    format!("m={m} n={n} k={k}: {v}, brute {want}")
                })?;
            }
            ensure(values.windows(2).all(|w| w[0] == w[1]), || {
                format!("m={m} n={n}: k-dependent")
            })?;
        }
    }
    within(Duration::from_secs(10), start, "Bernstein sweep")
}

/// Newton forward differences on the samples f(1), f(2), ...; returns the
/// interpolating polynomial of degree ≤ `max_degree` if all higher
/// differences vanish.
fn fit(samples: &[Rational], max_degree: usize) -> Option<Polynomial> {
    let mut diffs = Vec::new();
    let mut row = samples.to_vec();
    while !row.is_empty() {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    if diffs.iter().skip(max_degree + 1).any(|d| !d.is_zero()) {
        return None;
    }
    // Σ Δ^j f(1) · C(n-1, j), with C(n-1, j) = Π_{i<j} (n-1-i) / j!
    let mut total = Polynomial::zero();
    for (j, d) in diffs.iter().enumerate().take(max_degree + 1) {
        let mut basis = Polynomial::one();
        for i in 0..j {
            basis = &basis * &Polynomial::linear(int(-1 - i as i64), int(1));
        }
        let fact: i64 = (1..=j as i64).product();
        total = &total + &basis.scale(&(d / int(fact)));
    }
    Some(total)
}

fn criterion_4() -> Outcome {
    let [s1, s2, _] = closed_forms();
    for (k, want) in [(1u32, s1), (2u32, s2)] {
        let samples: Vec<Rational> = (1..=20u64)
            .map(|n| powersum_bernstein(k, n, k).map(Rational::from_integer))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let fitted = fit(&samples, 3).ok_or_else(|| format!("k={k}: samples are not cubic"))?;
        ensure(fitted == want, || {
            format!("k={k}: fitted {fitted}, want {want}")
        })?;
        let symbolic = faulhaber_polynomial(k).map_err(|e| e.to_string())?;
        ensure(fitted == symbolic, || {
            format!("k={k}: fitted {fitted} vs {symbolic}")
        })?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for n in 1..=2u64 {
        let printed = powersum_bernstein_as_printed(2, n, 2).map_err(|e| e.to_string())?;
        let corrected = powersum_bernstein(2, n, 2).map_err(|e| e.to_string())?;
        let want = brute(2, n as i64);
        ensure(printed != want, || {
            format!("n={n}: as-printed unexpectedly equals {want}")
        })?;
        ensure(Rational::from_integer(corrected.clone()) == want, || {
            format!("n={n}: corrected {corrected}, brute {want}")
        })?;
    }
    for n in 1..=20u64 {
        let printed = powersum_bernstein_as_printed(1, n, 1).map_err(|e| e.to_string())?;
        let want = brute(1, n as i64);
        ensure(printed == want, || {
            format!("m=k=1 n={n}: {printed}, brute {want}")
        })?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    ensure(verify_eq1(32).holds(), || {
        "Bernoulli product check failed at order 32".into()
    })?;

    let points = [int(0), int(1), rat(1, 2), int(-1), int(-3), rat(2, 5)];
    ensure(points.iter().any(|x| x < &int(0) || x > &int(1)), || {
        "no point outside [0,1]".into()
    })?;
    for k in 0..=6 {
        for x in &points {
            let c = verify_eq3(k, x, 24).map_err(|e| e.to_string())?;
            ensure(c.holds(), || format!("Bernstein GF k={k} x={x}: {c}"))?;
        }
    }

    for n in 2..=10 {
        for k in 1..=4 {
            let ok = verify_eq6(n, k, 20).map_err(|e| e.to_string())?;
            ensure(ok, || format!("power-sum identity n={n} k={k} failed"))?;
        }
    }
    for n in 2..=10 {
        for k in 2..=4 {
            let c =
                check_eq6(n, k, 20, Eq6Prefactor::WithoutFactorial).map_err(|e| e.to_string())?;
            ensure(!c.holds(), || format!("mutation survived at n={n} k={k}"))?;
        }
    }
    within(Duration::from_secs(10), start, "generating-function suites")
}

fn criterion_7() -> Outcome {
    // positivity on a grid of rationals in [0, 1]
    for q in 1..=12i64 {
        for p in 0..=q {
            let x = rat(p, q);
            for n in 0..=20 {
                for k in 0..=n {
                    let v = bernstein_value(BernsteinIndex::new(k, n), &x);
                    ensure(!v.is_negative(), || format!("B_{{{k},{n}}}({x}) = {v}"))?;
                }
            }
        }
    }
    let reflect = Polynomial::linear(int(1), int(-1));
    let one_minus_x = reflect.clone();
    let basis = |k: i64, n: u64| {
        if k < 0 {
            Polynomial::zero()
        } else {
            bernstein_polynomial(BernsteinIndex::new(k as u64, n))
        }
    };
    for n in 0..=12u64 {
        for k in 0..=n as i64 {
            let lhs = basis(k, n);
            let sym = basis(n as i64 - k, n).compose(&reflect);
            ensure(lhs == sym, || format!("symmetry fails for ({k},{n})"))?;
            if n >= 1 {
                let rec =
                    &(&one_minus_x * &basis(k, n - 1)) + &(&Polynomial::x() * &basis(k - 1, n - 1));
                ensure(lhs == rec, || format!("recursion fails for ({k},{n})"))?;
            }
        }
    }
    for n in 0..=15u64 {
        let total: Polynomial = (0..=n as i64).map(|k| basis(k, n)).sum();
        ensure(total == Polynomial::one(), || {
            format!("partition of unity fails at n={n}")
        })?;
    }
    Ok(())
}

fn akiyama_tanigawa(n: usize) -> Rational {
    let mut a: Vec<Rational> = Vec::new();
    for m in 0..=n {
        a.push(rat(1, m as i64 + 1));
        for j in (1..=m).rev() {
            a[j - 1] = int(j as i64) * (&a[j - 1] - &a[j]);
        }
    }
    a[0].clone()
}

fn criterion_8() -> Outcome {
    let fixtures = [(0, int(1)), (1, rat(-1, 2)), (2, rat(1, 6)), (3, int(0))];
    for (n, want) in fixtures {
        let got = bernoulli_number(n);
        ensure(got == want, || format!("B_{n} = {got}, want {want}"))?;
    }
    for n in (3..=60).step_by(2) {
        ensure(bernoulli_number(n).is_zero(), || format!("B_{n} nonzero"))?;
    }
    let oracle = akiyama_tanigawa(12);
    ensure(bernoulli_number(12) == oracle, || {
        format!("B_12 {} vs tableau {oracle}", bernoulli_number(12))
    })?;

    let start = Instant::now();
    let table = BernoulliCache::new().numbers(200);
    within(Duration::from_secs(5), start, "B_0..B_200")?;
    // spot check the tail against the defining recurrence Σ_{j<n} C(n,j) B_j = 0
    let n = 201u64;
    let s: Rational = (0..n as usize)
        .map(|j| Rational::from_integer(binomial(n, j as i64)) * &table[j])
        .sum();
    ensure(s.is_zero(), || "B_0..B_200 violate the recurrence".into())
}

fn run_cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_powersums"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    ))
}

fn is_decimal(v: &serde_json::Value) -> bool {
    v.as_str().is_some_and(|s| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    })
}

fn criterion_9() -> Outcome {
    let goldens: [(&[&str], i32, &str); 3] = [
        (
            &[
                "sum",
                "--m",
                "2",
                "--n",
                "3",
                "--method",
                "brute",
                "--no-timing",
            ],
            0,
            "14\n",
        ),
        (&["poly", "--m", "1", "--no-timing"], 0, "1/2 n^2 + 1/2 n\n"),
        (
            &[
                "sum",
                "--m",
                "0",
                "--n",
                "5",
                "--method",
                "bernstein",
                "--no-timing",
            ],
            2,
            "",
        ),
    ];
    for (args, code, stdout) in goldens {
        let (got_code, got_out) = run_cli(args)?;
        ensure(got_code == code && got_out == stdout, || {
            format!(
                "{args:?}: exit {got_code} stdout {got_out:?}, want exit {code} stdout {stdout:?}"
            )
        })?;
    }

    let (code, out) = run_cli(&[
        "validate", "--m-max", "3", "--n-max", "10", "--k-max", "2", "--json",
    ])?;
    ensure(code == 0, || format!("validate exit {code}"))?;
    let lines: Vec<&str> = out.lines().collect();
    ensure(lines.len() == 3 * 10 * 6, || {
        format!("validate emitted {} lines", lines.len())
    })?;
    let methods = [
        "BruteForce",
        "FaulhaberIntegral",
        "BernsteinCorrected",
        "BernsteinAsPrinted",
    ];
    for line in lines {
        let v: serde_json::Value =
            serde_json::from_str(line).map_err(|e| format!("{e}: {line}"))?;
        let obj = v
            .as_object()
            .ok_or_else(|| format!("not an object: {line}"))?;
        let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        keys.sort_unstable();
        ensure(
            keys == ["elapsed_ns", "k", "m", "method", "n", "status", "value"],
            || format!("keys {keys:?}"),
        )?;
        ensure(
            obj["method"].as_str().is_some_and(|m| methods.contains(&m)),
            || format!("method in {line}"),
        )?;
        for f in ["m", "n", "k", "elapsed_ns"] {
            ensure(obj[f].is_u64(), || format!("{f} not an integer in {line}"))?;
        }
        let value = obj["value"]
            .as_object()
            .ok_or_else(|| format!("value in {line}"))?;
        ensure(
            value.len() == 2 && is_decimal(&value["num"]) && is_decimal(&value["den"]),
            || format!("value encoding in {line}"),
        )?;
        ensure(
            obj["status"]
                .as_str()
                .is_some_and(|s| ["OK", "EXPECTED_ERRATUM", "FAIL"].contains(&s)),
            || format!("status in {line}"),
        )?;
        ensure(obj["status"] != "FAIL", || format!("hard failure: {line}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "closed-form Faulhaber polynomials for m = 1, 2, 3",
            criterion_1,
        ),
        (
            "integral of B_k over [1, n] equals the power sum",
            criterion_2,
        ),
        (
            "corrected Bernstein formula matches brute force, independent of k",
            criterion_3,
        ),
        (
            "k = 1 and k = 2 diagonals fit n(n+1)/2 and n(n+1)(2n+1)/6",
            criterion_4,
        ),
        (
            "as-printed formula wrong at m = k = 2, right on m = k = 1",
            criterion_5,
        ),
        (
            "generating-function identity suites and k! mutation",
            criterion_6,
        ),
        (
            "Bernstein positivity, symmetry, recursion, partition of unity",
            criterion_7,
        ),
        (
            "Bernoulli fixtures, odd zeros, tableau oracle, B_0..B_200 budget",
            criterion_8,
        ),
        ("CLI goldens and JSON-lines schema", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("[PASS] {}. {name} ({:?})", i + 1, start.elapsed()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
