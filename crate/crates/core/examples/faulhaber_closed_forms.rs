//! Closed-form polynomials `P_m(n) = 1^m + ... + n^m`.
//!
//! ```text
//! cargo run --example faulhaber_closed_forms
//! ```

use powersums::numeric::int;
use powersums::powersum::{faulhaber_polynomial, powersum_bruteforce};
use powersums::Rational;

fn main() -> powersums::Result<()> {
    for m in 1..=8 {
        let p = faulhaber_polynomial(m)?;
        println!("S_{m}(n) = {}", p.display_in("n"));
        for n in 1..=25u64 {
            let want = Rational::from_integer(powersum_bruteforce(m, n)?);
            assert_eq!(p.eval(&int(n as i64)), want);
        }
    }
    Ok(())
}
