//! The Bernstein power-sum formula with its commonly quoted constants next
//! to the corrected ones.
//!
//! ```text
//! cargo run --example quoted_constants
//! ```

use powersums::powersum::{powersum_bernstein, powersum_bernstein_as_printed, powersum_bruteforce};
use powersums::Rational;

fn main() -> powersums::Result<()> {
    println!(
        "{:>3} {:>3} {:>3} {:>12} {:>12} {:>12}",
        "m", "k", "n", "S_m(n)", "corrected", "as printed"
    );
    for (m, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 3)] {
        for n in 1..=4 {
            let oracle = powersum_bruteforce(m, n)?;
            let corrected = powersum_bernstein(m, n, k)?;
            let printed = powersum_bernstein_as_printed(m, n, k)?;
            let mark = if printed == Rational::from_integer(oracle.clone()) {
                ""
            } else {
                "  <-"
            };
            println!(
                "{m:>3} {k:>3} {n:>3} {oracle:>12} {corrected:>12} {:>12}{mark}",
                printed.to_string()
            );
        }
    }
    Ok(())
}
