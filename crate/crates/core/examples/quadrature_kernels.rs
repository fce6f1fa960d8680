//! Adaptive quadrature, a principal value and tail bounds for the rational
//! kernels that appear in the criteria.
//!
//! ```text
//! cargo run --example quadrature_kernels
//! ```

use zeta_criteria::quad::{improper_tail_bound, integrate_adaptive, integrate_principal_value, KernelSpec};

fn main() -> zeta_criteria::Result<()> {
    let (c, d) = (1.5f64, 3.5f64);
    let r = integrate_adaptive(|t| t / ((c * c + t * t) * (d * d + t * t)), 0.0, 1000.0, &[], 1e-13)?;
    let exact = |t: f64| ((c * c + t * t) / (d * d + t * t)).ln() / (2.0 * (d * d - c * c));
    println!(
        "two-pole kernel on [0, 1000]: {:.15} (est. error {:.1e}, {} evaluations), exact {:.15}",
        r.value,
        r.error_estimate,
        r.evaluations,
        exact(1000.0) - exact(0.0)
    );

    let pv = integrate_principal_value(|x| 1.0 / (x - 1.0), 0.5, 3.0, 1.0, 1e-12)?;
    println!("PV ∫ dx/(x-1) on [0.5, 3] = {:.14}, exact {:.14}", pv.value, 4f64.ln());

    for t in [500.0, 1000.0, 5000.0] {
        let two = improper_tail_bound(KernelSpec::TwoPole { c, d }, t)?;
        let dbl = improper_tail_bound(KernelSpec::DoublePole { a: 0.5 }, t)?;
        println!("tail beyond {t}: two-pole {:.3e}, double-pole {:.3e}", two.bound, dbl.bound);
    }
    Ok(())
}
