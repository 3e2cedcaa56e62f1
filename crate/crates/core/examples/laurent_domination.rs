//! Fitting the lamination whose valuation bounds the `t`-degrees of a
//! representation over Laurent polynomials.

use skeinlab::lamination::{dominate, shipped_fixtures};
use skeinlab::sample;

fn main() -> skeinlab::Result<()> {
    let mut g = sample::rng(3);
    for (name, rep) in shipped_fixtures() {
        let (lam, report) = dominate(&rep, 3, 100, &mut g)?;
        println!(
            "{name:9} -> {lam:8} {} slopes, {} samples, max gap {:?}",
            report.slopes_tested,
            report.samples,
            report.max_gap.map(|v| v.to_string())
        );
    }
    Ok(())
}
