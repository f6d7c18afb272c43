//! Bernoulli numbers and polynomials.
//!
//! ```text
//! cargo run --example bernoulli_table
//! ```

use powersums::bernoulli::{bernoulli_number, bernoulli_polynomial};
use powersums::numeric::int;

fn main() {
    println!("Bernoulli numbers (B_1 = -1/2):");
    for n in 0..=20 {
        println!("  B_{n:<2} = {}", bernoulli_number(n));
    }

    println!("\nBernoulli polynomials:");
    for n in 0..=6 {
        println!("  B_{n}(x) = {}", bernoulli_polynomial(n));
    }

    // B_n(1) = B_n once n >= 2
    for n in 2..=6 {
        assert_eq!(bernoulli_polynomial(n).eval(&int(1)), bernoulli_number(n));
    }
}
