//! Bernstein basis polynomials `B_{k,n}(x) = C(n, k) x^k (1 - x)^{n-k}`.
//!
//! Arguments are not restricted to `[0, 1]`: the power-sum formula needs
//! `B_{k,l}(-n)`. An index with `k > n` is the zero polynomial.

use num_traits::{One, Zero};

use crate::numeric::{binomial, int, rational_powu, Rational};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BernsteinIndex {
    pub k: u64,
    pub n: u64,
}

impl BernsteinIndex {
    pub fn new(k: u64, n: u64) -> Self {
        BernsteinIndex { k, n }
    }

    /// True when `k > n`, i.e. the basis element is identically zero.
    pub fn is_vanishing(&self) -> bool {
        self.k > self.n
    }
}

pub fn bernstein_value(idx: BernsteinIndex, x: &Rational) -> Rational {
    if idx.is_vanishing() {
        return Rational::zero();
    }
    let c = Rational::from_integer(binomial(idx.n, idx.k as i64));
    let one_minus_x = Rational::one() - x;
    c * rational_powu(x, idx.k) * rational_powu(&one_minus_x, idx.n - idx.k)
}

pub fn bernstein_polynomial(idx: BernsteinIndex) -> Polynomial {
    if idx.is_vanishing() {
        return Polynomial::zero();
    }
    let c = Rational::from_integer(binomial(idx.n, idx.k as i64));
    let one_minus_x = Polynomial::linear(Rational::one(), int(-1));
    let x_k = Polynomial::monomial(c, idx.k as usize);
    &x_k * &one_minus_x.pow((idx.n - idx.k) as u32)
}

/// `B_{k,l}(-n)`, the shape consumed by the Bernstein power-sum formula.
/// For `l ≥ k` this is `C(l, k) (-n)^k (1 + n)^{l-k}`.
pub fn bernstein_at_negative_n(k: u64, l: u64, n: u64) -> Rational {
    bernstein_value(
        BernsteinIndex::new(k, l),
        &-Rational::from_integer(n.into()),
    )
}
