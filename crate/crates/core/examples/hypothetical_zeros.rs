//! How far a zero off the critical line would push each identity.
//!
//! ```text
//! cargo run --release --example hypothetical_zeros
//! ```

use zeta_criteria::criteria::{evaluate, full_equality_from, zero_contribution, CriterionSpec, HypotheticalZero};
use zeta_criteria::zeros::find_zeros_up_to;

fn main() -> zeta_criteria::Result<()> {
    let zeros = find_zeros_up_to(1000.0, 1e-10)?;
    let spec = CriterionSpec::double_pole(0.5, 1.5);
    let base = evaluate(&spec, &zeros)?;
    println!("residual with every zero on the line: {:+.3e}", base.residual);

    for t in [14.0, 100.0, 1000.0, 1e4, 1e5] {
        let z = HypotheticalZero::new(0.75, t, 1)?;
        println!("zero at 0.75+{t}i contributes {:.3e}", zero_contribution(&spec, &z)?);
    }

    // a zero is only detectable while its contribution exceeds the bound
    let pair = [HypotheticalZero::new(0.9, 200.0, 1)?, HypotheticalZero::new(0.55, 40.0, 2)?];
    let r = full_equality_from(&base, &pair)?;
    println!(
        "with two injected zeros: residual {:+.3e}, injected {:.3e}, adjusted {:+.3e}, bound {:.3e}",
        r.residual,
        r.injected,
        r.adjusted_residual,
        r.bound()
    );

    // zeros left of the line of integration do not enter
    let off = CriterionSpec::double_pole(0.7, 1.5);
    println!("{:?}", zero_contribution(&off, &HypotheticalZero::new(0.6, 30.0, 1)?));
    Ok(())
}
