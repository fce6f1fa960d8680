//! The identity that integrates ln|ζ| over a half strip.
//! Slow in debug builds.
//!
//! ```text
//! cargo run --release --example double_integral
//! ```

use zeta_criteria::criteria::{evaluate, inner_log_integral, CriterionSpec};
use zeta_criteria::zeros::find_zeros_up_to;

fn main() -> zeta_criteria::Result<()> {
    for t in [0.0, 14.134_725, 100.0, 1000.0] {
        let f = inner_log_integral(t, 1e-12)?;
        println!("∫ ln|ζ(σ+{t}i)| dσ over [1/2, 60] = {:+.12}", f.value);
    }
    let zeros = find_zeros_up_to(1000.0, 1e-10)?;
    let r = evaluate(&CriterionSpec::double_integral(), &zeros)?;
    println!("lhs {:+.15}\nrhs {:+.15}\nresidual {:+.3e} (bound {:.3e})", r.lhs, r.rhs, r.residual, r.bound());
    Ok(())
}
