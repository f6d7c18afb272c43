//! Exact integers, rationals and the combinatorial helpers built on them.
//!
//! [`Integer`] and [`Rational`] are `num`'s arbitrary-precision types.
//! `Ratio` keeps every value reduced with a positive denominator, so
//! derived equality is equality of the normalized fraction, and its
//! `Display` is already the `p/q` form (with `/1` omitted) used by the CLI.
//!
//! Factorials and binomial coefficients are memoized per process. The
//! `*_uncached` variants recompute from scratch and exist so the two
//! paths can be compared.

use std::sync::{Arc, LazyLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// Rows above this index are computed on demand and not stored.
const PASCAL_MEMO_ROWS: u64 = 512;
const FACTORIAL_MEMO_LEN: u64 = 2048;

static PASCAL: LazyLock<RwLock<Vec<Arc<[Integer]>>>> =
    LazyLock::new(|| RwLock::new(vec![Arc::from(vec![Integer::one()])]));

static FACTORIALS: LazyLock<RwLock<Vec<Integer>>> =
    LazyLock::new(|| RwLock::new(vec![Integer::one()]));

/// Small-integer rational, for fixtures and constants.
///
/// Panics if `den` is zero; use [`rational_normalize`] for checked construction.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

/// The reduced fraction `p/q` with positive denominator.
pub fn rational_normalize(p: Integer, q: Integer) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(p, q))
}

/// `x^e` for any signed exponent.
pub fn rational_pow(x: &Rational, e: i64) -> Result<Rational> {
    if e < 0 && x.is_zero() {
        return Err(Error::ZeroToNegativePower);
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut exp = e.unsigned_abs();
    let mut acc = Rational::one();
    let mut sq = base;
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &sq;
        }
        exp >>= 1;
        if exp > 0 {
            sq = &sq * &sq;
        }
    }
    Ok(acc)
}

/// `x^e` for a nonnegative exponent.
pub fn rational_powu(x: &Rational, e: u64) -> Rational {
    // a nonnegative exponent never hits the zero-base error
    rational_pow(x, e as i64).expect("nonnegative exponent")
}

pub fn factorial(n: u64) -> Integer {
    if n >= FACTORIAL_MEMO_LEN {
        return factorial_uncached(n);
    }
    let idx = n as usize;
    {
        let table = FACTORIALS.read().unwrap();
        if let Some(v) = table.get(idx) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap();
    // another writer may have filled it while we waited for the lock
    while table.len() <= idx {
        let next = table.len();
        let v = &table[next - 1] * Integer::from(next);
        table.push(v);
    }
    table[idx].clone()
}

pub fn factorial_uncached(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * Integer::from(i))
}

/// `n choose k`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    if n > PASCAL_MEMO_ROWS {
        return binomial_uncached(n, k);
    }
    pascal_row(n)[k as usize].clone()
}

/// Row `n` of Pascal's triangle, `binomial(n, 0..=n)`.
pub fn pascal_row(n: u64) -> Arc<[Integer]> {
    if n > PASCAL_MEMO_ROWS {
        return (0..=n as i64).map(|k| binomial_uncached(n, k)).collect();
    }
    let idx = n as usize;
    {
        let rows = PASCAL.read().unwrap();
        if let Some(row) = rows.get(idx) {
            return Arc::clone(row);
        }
    }
    let mut rows = PASCAL.write().unwrap();
    while rows.len() <= idx {
        let prev = Arc::clone(rows.last().unwrap());
        let mut next = Vec::with_capacity(prev.len() + 1);
        next.push(Integer::one());
        for w in prev.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(Integer::one());
        rows.push(Arc::from(next));
    }
    Arc::clone(&rows[idx])
}

/// Multiplicative formula, no memo.
pub fn binomial_uncached(n: u64, k: i64) -> Integer {
    if k < 0 || k as u64 > n {
        return Integer::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Integer::one();
    for i in 0..k {
        // each partial product is itself a binomial coefficient, so the division is exact
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// The numerator of `x` if its denominator is one.
pub fn to_integer(x: &Rational) -> Option<Integer> {
    x.is_integer().then(|| x.numer().clone())
}
