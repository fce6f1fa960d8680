//! Numerical checks of the integral identities at their headline parameters.
//!
//! ```text
//! cargo run --release --example verify_criteria
//! ```

use zeta_criteria::criteria::{evaluate, CriterionSpec};
use zeta_criteria::zeros::find_zeros_up_to;

fn main() -> zeta_criteria::Result<()> {
    let zeros = find_zeros_up_to(1000.0, 1e-10)?;
    let specs = [
        CriterionSpec::two_pole(0.5, 1.5, 3.5),
        CriterionSpec::two_pole_limit(0.5, 1.5),
        CriterionSpec::double_pole(0.5, 1.5),
        CriterionSpec::double_pole_limit(0.5),
        CriterionSpec::volchkov(),
        CriterionSpec::two_pole(0.7, 1.0, 2.0),
        CriterionSpec::double_pole(0.6, 3f64.sqrt() * 14.0),
    ];
    for spec in specs {
        let r = evaluate(&spec, &zeros)?;
        println!(
            "{:<10} b={:<4} lhs={:+.15} rhs={:+.15} residual={:+.3e} bound={:.3e} {}",
            spec.kind.cli_name(),
            spec.b,
            r.lhs,
            r.rhs,
            r.residual,
            r.bound(),
            if r.passes() { "ok" } else { "EXCEEDED" }
        );
    }
    Ok(())
}
