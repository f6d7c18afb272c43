//! The Bernstein basis of degree 3, its properties, and values at negative
//! arguments.
//!
//! ```text
//! cargo run --example bernstein_basis
//! ```

use powersums::bernstein::{
    bernstein_at_negative_n, bernstein_polynomial, bernstein_value, BernsteinIndex,
};
use powersums::numeric::{int, rat};
use powersums::Polynomial;

fn main() {
    let n = 3;
    for k in 0..=n {
        let p = bernstein_polynomial(BernsteinIndex::new(k, n));
        println!("B_{{{k},{n}}}(x) = {p}");
    }

    let total: Polynomial = (0..=n)
        .map(|k| bernstein_polynomial(BernsteinIndex::new(k, n)))
        .sum();
    println!("sum over k = {total}");

    let x = rat(2, 7);
    let reflected = &int(1) - &x;
    for k in 0..=n {
        let a = bernstein_value(BernsteinIndex::new(k, n), &x);
        let b = bernstein_value(BernsteinIndex::new(n - k, n), &reflected);
        println!(
            "B_{{{k},{n}}}({x}) = {a} = B_{{{},{n}}}({reflected})",
            n - k
        );
        assert_eq!(a, b);
    }

    println!("\nvalues at x = -n, as used by the power-sum formula:");
    for l in 0..=5 {
        let row: Vec<String> = (0..=l)
            .map(|k| bernstein_at_negative_n(k, l, 4).to_string())
            .collect();
        println!("  l = {l}: {}", row.join(" "));
    }
}
