//! Exact sums of integer powers.
//!
//! `S_m(n) = 1^m + 2^m + ... + n^m` is computed four ways: by direct
//! summation, by integrating a Bernoulli polynomial, by a Bernstein-basis
//! formula, and by the same Bernstein formula with the constants it is
//! usually quoted with (kept as a diagnostic, since those constants are
//! wrong for most `(m, k)`). Everything is exact: values are
//! arbitrary-precision rationals and every comparison is structural
//! equality.
//!
//! The [`series`] module carries a small truncated power series engine that
//! checks the generating functions behind the Bernoulli and Bernstein
//! polynomials coefficient by coefficient.
//!
//! ```
//! use powersums::powersum::{powersum_bernstein, powersum_bruteforce};
//!
//! let direct = powersum_bruteforce(3, 10).unwrap();
//! for k in 1..=4 {
//!     assert_eq!(powersum_bernstein(3, 10, k).unwrap(), direct);
//! }
//! ```

pub mod bernoulli;
pub mod bernstein;
pub mod cli;
mod error;
pub mod numeric;
pub mod poly;
pub mod powersum;
pub mod series;

pub use error::{Error, Result};
pub use numeric::{Integer, Rational};
pub use poly::Polynomial;
pub use series::TruncatedSeries;
