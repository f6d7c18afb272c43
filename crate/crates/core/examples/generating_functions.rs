//! Coefficientwise checks of the Bernoulli and Bernstein generating
//! functions and of the identity the Bernstein power-sum formula comes from.
//!
//! ```text
//! cargo run --example generating_functions
//! ```

use powersums::numeric::{int, rat};
use powersums::series::{
    bernoulli_gf, bernstein_gf, check_eq6, verify_eq1, verify_eq3, Eq6Prefactor,
};

fn main() -> powersums::Result<()> {
    println!("t/(e^t - 1) = {}", bernoulli_gf(8));
    println!(
        "(tx)^2/2! e^(t(1-x)) at x = 1/2: {}",
        bernstein_gf(2, &rat(1, 2), 6)?
    );

    println!("\nBernoulli product check, order 32: {}", verify_eq1(32));
    for x in [rat(1, 2), int(-3), rat(2, 5)] {
        println!(
            "Bernstein check, k = 3, x = {x}: {}",
            verify_eq3(3, &x, 24)?
        );
    }

    println!();
    for (n, k) in [(2, 1), (5, 3), (10, 4)] {
        let full = check_eq6(n, k, 20, Eq6Prefactor::Full)?;
        let mutated = check_eq6(n, k, 20, Eq6Prefactor::WithoutFactorial)?;
        println!("power-sum identity n = {n}, k = {k}: {full}; without k!: {mutated}");
    }
    Ok(())
}
