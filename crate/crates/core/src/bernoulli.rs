//! Bernoulli numbers and polynomials, with `B_1 = -1/2` as fixed by the
//! generating function `t / (e^t - 1)`.
//!
//! The numbers come from the umbral relation `(B + 1)^n - B_n = δ_{1,n}`,
//! which for `n ≥ 2` reads `Σ_{j<n} C(n, j) B_j = 0` and is solved for
//! `B_{n-1}`.

use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::numeric::{binomial, pascal_row, Integer, Rational};
use crate::poly::Polynomial;

static GLOBAL: LazyLock<BernoulliCache> = LazyLock::new(BernoulliCache::new);

/// Memo table of `B_0, B_1, ...`.
///
/// Readers share the table; a miss takes the write lock and fills every
/// missing slot up to the requested index in one pass. Slots are never
/// rewritten.
#[derive(Debug)]
pub struct BernoulliCache {
    table: RwLock<Vec<Rational>>,
}

impl Default for BernoulliCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliCache {
    /// An empty cache. Most callers want [`BernoulliCache::global`].
    pub fn new() -> Self {
        BernoulliCache {
            table: RwLock::new(vec![Rational::one()]),
        }
    }

    /// The process-wide cache behind [`bernoulli_number`].
    pub fn global() -> &'static BernoulliCache {
        &GLOBAL
    }

    /// Number of slots currently filled.
    pub fn len(&self) -> usize {
        self.table.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn number(&self, n: usize) -> Rational {
        {
            let table = self.table.read().unwrap();
            if let Some(b) = table.get(n) {
                return b.clone();
            }
        }
        let mut table = self.table.write().unwrap();
        fill_to(&mut table, n);
        table[n].clone()
    }

    /// `B_0..=B_n` as one snapshot.
    pub fn numbers(&self, n: usize) -> Vec<Rational> {
        self.number(n);
        self.table.read().unwrap()[..=n].to_vec()
    }

    /// `B_n(x) = Σ_k C(n, k) B_k x^{n-k}`.
    pub fn polynomial(&self, n: usize) -> Polynomial {
        let numbers = self.numbers(n);
        // coefficient of x^i is C(n, n-i) B_{n-i}
        let coeffs = (0..=n)
            .map(|i| {
                let k = n - i;
                Rational::from_integer(binomial(n as u64, k as i64)) * &numbers[k]
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

fn fill_to(table: &mut Vec<Rational>, n: usize) {
    while table.len() <= n {
        let idx = table.len();
        let value = if idx >= 3 && idx % 2 == 1 {
            Rational::zero()
        } else {
            solve_next(table)
        };
        table.push(value);
    }
}

/// Solves `Σ_{j=0}^{idx} C(idx+1, j) B_j = 0` for `B_idx`, idx = table.len().
fn solve_next(table: &[Rational]) -> Rational {
    let idx = table.len();
    let row = pascal_row(idx as u64 + 1);
    let sum = table
        .iter()
        .zip(row.iter())
        .filter(|(b, _)| !b.is_zero())
        .fold(Rational::zero(), |acc, (b, c)| acc + b * c);
    -sum / Rational::from_integer(Integer::from(idx + 1))
}

/// `B_n` from the process-wide cache.
pub fn bernoulli_number(n: usize) -> Rational {
    GLOBAL.number(n)
}

/// `B_n(x)` from the process-wide cache.
pub fn bernoulli_polynomial(n: usize) -> Polynomial {
    GLOBAL.polynomial(n)
}
