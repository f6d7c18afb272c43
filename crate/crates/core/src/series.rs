//! Truncated formal power series over the rationals, and the identity
//! checks built on them.
//!
//! Coefficients are stored in plain powers: slot `j` holds the coefficient
//! of `t^j`. Generating functions written as `Σ a_j t^j / j!` are read back
//! with [`TruncatedSeries::egf_coeff`], which returns `a_j = coeff(j) · j!`.
//!
//! Binary operations between series of different orders truncate to the
//! smaller order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_number;
use crate::bernstein::{bernstein_value, BernsteinIndex};
use crate::error::{Error, Result};
use crate::numeric::{factorial, int, rational_pow, rational_powu, Integer, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    /// Always `order + 1` entries.
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Coefficients `c_0..=c_N`. Panics on an empty vector, which has no order.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c t^power`, truncated at `order`.
    pub fn monomial(c: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// Builds `Σ a_j t^j / j!` from the factorial-normalized coefficients `a_j`.
    pub fn from_egf(egf: Vec<Rational>) -> Self {
        let coeffs = egf
            .into_iter()
            .enumerate()
            .map(|(j, a)| a / Rational::from_integer(factorial(j as u64)))
            .collect();
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    /// `coeff(j) · j!`.
    pub fn egf_coeff(&self, j: usize) -> Rational {
        &self.coeffs[j] * Rational::from_integer(factorial(j as u64))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|j| {
                (0..=j).fold(Rational::zero(), |acc, i| {
                    if self.coeffs[i].is_zero() || rhs.coeffs[j - i].is_zero() {
                        acc
                    } else {
                        acc + &self.coeffs[i] * &rhs.coeffs[j - i]
                    }
                })
            })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Divides by `t^power`. The low coefficients must vanish; the order drops by `power`.
    pub fn shift_down(&self, power: usize) -> Result<Self> {
        if power > self.order() {
            return Err(Error::domain(format!(
                "cannot divide a series of order {} by t^{power}",
                self.order()
            )));
        }
        if let Some((index, value)) = self.coeffs[..power]
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
        {
            return Err(Error::NotDivisible {
                power,
                index,
                value: value.clone(),
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[power..].to_vec(),
        })
    }

    /// First index where `self` and `other` differ, over the common order.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.scale(&int(-1))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

pub fn series_mul(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
    a.mul(b)
}

/// `e^{c t}`: `coeff(j) = c^j / j!`.
pub fn exp_series(c: &Rational, order: usize) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut term = Rational::one();
    coeffs.push(term.clone());
    for j in 1..=order {
        term = term * c / Rational::from_integer(Integer::from(j));
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(coeffs)
}

/// `t / (e^t - 1)`: `coeff(j) = B_j / j!`.
pub fn bernoulli_gf(order: usize) -> TruncatedSeries {
    TruncatedSeries::from_egf((0..=order).map(bernoulli_number).collect())
}

/// `(e^t - 1) / t`: `coeff(j) = 1 / (j + 1)!`.
pub fn exp_minus_one_over_t(order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|j| Rational::new(Integer::one(), factorial(j as u64 + 1)))
        .collect();
    TruncatedSeries::new(coeffs)
}

/// `(t x)^k / k! · e^{t (1 - x)}`, the generating function of `B_{k,n}(x)` over `n`.
pub fn bernstein_gf(k: usize, x: &Rational, order: usize) -> Result<TruncatedSeries> {
    if k > order {
        return Err(Error::domain(format!(
            "bernstein_gf needs k <= order, got k = {k}, order = {order}"
        )));
    }
    let lead = rational_powu(x, k as u64) / Rational::from_integer(factorial(k as u64));
    let head = TruncatedSeries::monomial(lead, k, order);
    Ok(head.mul(&exp_series(&(Rational::one() - x), order)))
}

/// `Σ_{j=a}^{b} e^{j t}`; the zero series when `a > b`.
pub fn geometric_exp_sum(a: i64, b: i64, order: usize) -> TruncatedSeries {
    (a..=b).fold(TruncatedSeries::zero(order), |acc, j| {
        &acc + &exp_series(&int(j), order)
    })
}

/// Outcome of a coefficientwise identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityCheck {
    Holds,
    /// Both sides were built but differ first at this coefficient.
    Mismatch {
        index: usize,
    },
    /// A division by `t^j` found a nonzero coefficient at `index`. This
    /// points at the construction of one side, not at the identity.
    NotDivisible {
        index: usize,
    },
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdentityCheck::Holds)
    }

    fn compare(lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        match lhs.first_mismatch(rhs) {
            None => IdentityCheck::Holds,
            Some(index) => IdentityCheck::Mismatch { index },
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityCheck::Holds => f.write_str("PASS"),
            IdentityCheck::Mismatch { index } => {
                write!(f, "FAIL (first mismatch at coefficient {index})")
            }
            IdentityCheck::NotDivisible { index } => {
                write!(f, "FAIL (coefficient {index} must vanish before shifting)")
            }
        }
    }
}

/// `t / (e^t - 1) · (e^t - 1) / t = 1` through `order`.
pub fn verify_eq1(order: usize) -> IdentityCheck {
    let product = bernoulli_gf(order).mul(&exp_minus_one_over_t(order));
    IdentityCheck::compare(&product, &TruncatedSeries::one(order))
}

/// `n! · [t^n] bernstein_gf(k, x) = B_{k,n}(x)` for every `n ≤ order`.
pub fn verify_eq3(k: usize, x: &Rational, order: usize) -> Result<IdentityCheck> {
    let gf = bernstein_gf(k, x, order)?;
    let direct = TruncatedSeries::from_egf(
        (0..=order as u64)
            .map(|n| bernstein_value(BernsteinIndex::new(k as u64, n), x))
            .collect(),
    );
    Ok(IdentityCheck::compare(&gf, &direct))
}

/// How the `t^{-k}` Bernstein term in the power-sum identity is normalized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eq6Prefactor {
    /// `(-n)^{-k} k!`, which makes the identity true.
    Full,
    /// `(-n)^{-k}` alone, the normalization the quoted closed form implies.
    WithoutFactorial,
}

/// Checks
///
/// `e^{2t} + ... + e^{nt} = (1/t) · t/(e^t-1) · [ P t^{-k} Σ_m B_{k,m}(-n) t^m/m! - e^{2t} ]`
///
/// with prefactor `P` chosen by `prefactor`. Both divisions by powers of `t`
/// first confirm the low coefficients vanish, then shift. The comparison
/// covers every coefficient that survives the shifts, `t^0..=t^{order-k-1}`.
pub fn check_eq6(n: u64, k: usize, order: usize, prefactor: Eq6Prefactor) -> Result<IdentityCheck> {
    if n < 2 || k < 1 {
        return Err(Error::domain(format!(
            "eq6 needs n >= 2 and k >= 1, got n = {n}, k = {k}"
        )));
    }
    if order < k + 2 {
        return Err(Error::domain(format!(
            "eq6 needs order >= k + 2, got order = {order}, k = {k}"
        )));
    }
    let minus_n = -Rational::from_integer(n.into());
    let mut scale = rational_pow(&minus_n, -(k as i64))?;
    if prefactor == Eq6Prefactor::Full {
        scale *= Rational::from_integer(factorial(k as u64));
    }

    let bern = bernstein_gf(k, &minus_n, order)?.scale(&scale);
    let bern = match bern.shift_down(k) {
        Ok(s) => s,
        Err(Error::NotDivisible { index, .. }) => return Ok(IdentityCheck::NotDivisible { index }),
        Err(e) => return Err(e),
    };
    let reduced = order - k;
    let bracket = &bern - &exp_series(&int(2), reduced);
    let product = bernoulli_gf(reduced).mul(&bracket);
    let rhs = match product.shift_down(1) {
        Ok(s) => s,
        Err(Error::NotDivisible { index, .. }) => return Ok(IdentityCheck::NotDivisible { index }),
        Err(e) => return Err(e),
    };
    let lhs = geometric_exp_sum(2, n as i64, rhs.order());
    Ok(IdentityCheck::compare(&lhs, &rhs))
}

pub fn verify_eq6(n: u64, k: usize, order: usize) -> Result<bool> {
    check_eq6(n, k, order, Eq6Prefactor::Full).map(|c| c.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rat;

    fn series(coeffs: &[Rational]) -> TruncatedSeries {
        TruncatedSeries::new(coeffs.to_vec())
    }

    #[test]
    fn mul_examples() {
        let one_plus_t = series(&[int(1), int(1), int(0), int(0)]);
        assert_eq!(
            series_mul(&one_plus_t, &one_plus_t),
            series(&[int(1), int(2), int(1), int(0)])
        );
        let a = series(&[rat(1, 3), int(-2), rat(5, 7)]);
        assert_eq!(series_mul(&a, &TruncatedSeries::one(2)), a);
        assert_eq!(
            series_mul(&exp_series(&int(1), 4), &exp_series(&int(1), 4)),
            exp_series(&int(2), 4)
        );
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = exp_series(&int(1), 5);
        let b = exp_series(&int(1), 3);
        assert_eq!(series_mul(&a, &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!((&a - &b).order(), 3);
    }

    #[test]
    fn exp_examples() {
        assert_eq!(
            exp_series(&int(0), 3),
            series(&[int(1), int(0), int(0), int(0)])
        );
        assert_eq!(
            exp_series(&int(2), 3),
            series(&[int(1), int(2), int(2), rat(4, 3)])
        );
        assert_eq!(
            exp_series(&int(-1), 2),
            series(&[int(1), int(-1), rat(1, 2)])
        );
    }

    #[test]
    fn bernoulli_gf_examples() {
        assert_eq!(bernoulli_gf(1), series(&[int(1), rat(-1, 2)]));
        assert_eq!(bernoulli_gf(2), series(&[int(1), rat(-1, 2), rat(1, 12)]));
        assert!(bernoulli_gf(4).coeff(3).is_zero());
        assert_eq!(bernoulli_gf(6).egf_coeff(6), bernoulli_number(6));
    }

    #[test]
    fn bernstein_gf_examples() {
        assert_eq!(bernstein_gf(0, &int(0), 7).unwrap(), exp_series(&int(1), 7));
        let s = bernstein_gf(1, &rat(1, 2), 3).unwrap();
        assert_eq!(s.egf_coeff(2), rat(1, 2));
        let s = bernstein_gf(2, &rat(3, 5), 6).unwrap();
        assert!(s.coeff(0).is_zero() && s.coeff(1).is_zero());
        assert!(matches!(bernstein_gf(4, &int(1), 3), Err(Error::Domain(_))));
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_exp_sum(2, 2, 5), exp_series(&int(2), 5));
        assert_eq!(geometric_exp_sum(1, 0, 4), TruncatedSeries::zero(4));
        assert_eq!(
            geometric_exp_sum(1, 3, 2),
            series(&[int(3), int(6), int(7)])
        );
    }

    #[test]
    fn shift_down_checks_low_coefficients() {
        let s = series(&[int(0), int(0), int(3), int(4)]);
        assert_eq!(s.shift_down(2).unwrap(), series(&[int(3), int(4)]));
        assert_eq!(
            s.shift_down(3),
            Err(Error::NotDivisible {
                power: 3,
                index: 2,
                value: int(3)
            })
        );
        assert!(matches!(s.shift_down(4), Err(Error::Domain(_))));
    }

    #[test]
    fn egf_roundtrip() {
        let a = vec![int(1), rat(-1, 2), rat(1, 6), int(0), rat(-1, 30)];
        let s = TruncatedSeries::from_egf(a.clone());
        let back: Vec<_> = (0..=s.order()).map(|j| s.egf_coeff(j)).collect();
        assert_eq!(back, a);
    }

    #[test]
    fn eq1_holds() {
        for order in [0, 1, 5, 32] {
            assert_eq!(verify_eq1(order), IdentityCheck::Holds);
        }
    }

    #[test]
    fn eq3_holds_at_sample_points() {
        let points = [int(0), int(1), rat(1, 2), int(-1), int(-3), rat(2, 5)];
        for k in 0..=6 {
            for x in &points {
                assert_eq!(
                    verify_eq3(k, x, 24).unwrap(),
                    IdentityCheck::Holds,
                    "k={k} x={x}"
                );
            }
        }
    }

    #[test]
    fn eq6_examples() {
        assert!(verify_eq6(2, 1, 12).unwrap());
        assert!(verify_eq6(5, 3, 16).unwrap());
        assert!(verify_eq6(3, 2, 4).unwrap());
        assert!(matches!(verify_eq6(3, 3, 4), Err(Error::Domain(_))));
        assert!(matches!(verify_eq6(1, 1, 10), Err(Error::Domain(_))));
    }

    #[test]
    fn eq6_without_factorial_fails() {
        for n in 2..=6 {
            for k in 2..=4 {
                let check = check_eq6(n, k, 20, Eq6Prefactor::WithoutFactorial).unwrap();
                assert_eq!(
                    check,
                    IdentityCheck::NotDivisible { index: 0 },
                    "n={n} k={k}"
                );
            }
        }
        // with k = 1 the factorial is 1, so dropping it changes nothing
        assert!(check_eq6(4, 1, 20, Eq6Prefactor::WithoutFactorial)
            .unwrap()
            .holds());
    }
}
