//! Comparing ln|ζ| along the critical line with ln|ζ| along the real axis.
//!
//! ```text
//! cargo run --release --example line_vs_axis
//! ```

use zeta_criteria::criteria::{eq14_lhs, eq14_rhs, zero_contribution, CriterionSpec, HypotheticalZero};
use zeta_criteria::zeros::find_zeros_up_to;

fn main() -> zeta_criteria::Result<()> {
    let zeros = find_zeros_up_to(5000.0, 1e-10)?;
    let lhs = eq14_lhs(5000.0, 1e-12, &zeros)?;
    let rhs = eq14_rhs(1e-12)?;
    println!("line side  {:.13} (±{:.1e})", lhs.value, lhs.error_estimate);
    println!("axis side  {:.13} (±{:.1e})", rhs.value, rhs.error_estimate);
    println!("difference {:+.3e}", lhs.value - rhs.value);

    // what a single zero off the line would do to the difference
    let spec = CriterionSpec::line_vs_axis();
    for (sigma, t) in [(0.6, 20.0), (0.9, 20.0), (0.6, 1000.0)] {
        let z = HypotheticalZero::new(sigma, t, 1)?;
        println!("zero at {sigma}+{t}i shifts it by {:+.3e}", zero_contribution(&spec, &z)?);
    }
    Ok(())
}
