//! Computes `S_m(n)` by every method and shows they agree.
//!
//! ```text
//! cargo run --example power_sums -- 7 1000
//! ```

use powersums::powersum::{powersum_bernstein, powersum_bruteforce, powersum_faulhaber};

fn main() -> powersums::Result<()> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().map_or(7, |s| s.parse().expect("m"));
    let n: u64 = args.next().map_or(1000, |s| s.parse().expect("n"));

    let brute = powersum_bruteforce(m, n)?;
    let integral = powersum_faulhaber(m, n)?;
    println!("S_{m}({n})");
    println!("  brute force        {brute}");
    println!("  Bernoulli integral {integral}");
    for k in 1..=4 {
        let v = powersum_bernstein(m, n, k)?;
        println!("  Bernstein, k = {k}   {v}");
        assert_eq!(v, brute);
    }
    assert_eq!(integral, brute);

    // the closed forms do not care how large n is
    let huge = 10_u64.pow(18);
    println!("\nS_{m}(10^18) = {}", powersum_faulhaber(m, huge)?);
    assert_eq!(
        powersum_faulhaber(m, huge)?,
        powersum_bernstein(m, huge, 2)?
    );
    Ok(())
}
