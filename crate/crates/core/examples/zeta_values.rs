//! Values of ζ, its logarithmic derivative and Hardy's Z at a few points.
//!
//! ```text
//! cargo run --example zeta_values
//! ```

use zeta_criteria::zeta::{hardy_z, log_abs_zeta, log_deriv_zeta, riemann_siegel_theta, zeta, zeta_real, ComplexPoint};

fn main() -> zeta_criteria::Result<()> {
    println!("ζ(2) = {:.16}", zeta_real(2.0)?);
    println!("ζ(3) = {:.16}", zeta_real(3.0)?);
    println!("ζ(-1) = {:.16}", zeta_real(-1.0)?);

    for (s, t) in [(0.5, 14.0), (0.5, 100.0), (0.75, 1000.0), (2.0, 50.0)] {
        let p = ComplexPoint::new(s, t)?;
        let v = zeta(p, 1e-10)?;
        let ld = log_deriv_zeta(p, 1e-10)?;
        println!(
            "s = {s}+{t}i  ζ = {:.12} {:+.12}i  (±{:.1e})  ln|ζ| = {:.12}  ζ'/ζ = {:.10} {:+.10}i",
            v.value.re,
            v.value.im,
            v.abs_error_bound,
            log_abs_zeta(p, 1e-10)?,
            ld.value.re,
            ld.value.im
        );
    }

    // Z changes sign across the first zero near 14.1347
    for t in [14.0, 14.1, 14.2] {
        println!("θ({t}) = {:.12}  Z({t}) = {:+.12}", riemann_siegel_theta(t)?, hardy_z(t, 1e-12)?);
    }

    match zeta(ComplexPoint::real(1.0)?, 1e-12) {
        Err(e) => println!("ζ(1): {e}"),
        Ok(v) => println!("ζ(1) = {:?}", v.value),
    }
    Ok(())
}
