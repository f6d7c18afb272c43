//! Sweeps a grid and compares every method against the brute-force oracle.
//!
//! ```text
//! cargo run --release --example cross_validation -- 8 20 6
//! ```

use powersums::powersum::{cross_validate, PowerSumMethod, Status, Tally};

fn main() -> powersums::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<u64>().expect("integer bound"));
    let m_max = args.next().unwrap_or(8) as u32;
    let n_max = args.next().unwrap_or(20);
    let k_max = args.next().unwrap_or(6) as u32;

    let reports = cross_validate(m_max, n_max, k_max)?;
    let tally = Tally::of(&reports);
    println!(
        "{} reports: {} OK, {} expected errata, {} failures",
        reports.len(),
        tally.ok,
        tally.expected_erratum,
        tally.fail
    );

    for method in PowerSumMethod::ALL {
        let total: std::time::Duration = reports
            .iter()
            .filter(|r| r.method == method)
            .map(|r| r.elapsed)
            .sum();
        println!("  {method:<20} {total:?}");
    }

    let coincidences: Vec<_> = reports
        .iter()
        .filter(|r| r.method == PowerSumMethod::BernsteinAsPrinted && r.status == Status::Ok)
        .map(|r| (r.m, r.n, r.k))
        .collect();
    println!("as-printed cells that happen to agree: {coincidences:?}");
    assert_eq!(tally.fail, 0);
    Ok(())
}
