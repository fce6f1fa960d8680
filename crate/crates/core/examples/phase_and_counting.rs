//! Continuous argument of ζ and the zero counting function.
//!
//! ```text
//! cargo run --example phase_and_counting
//! ```

use zeta_criteria::arg::{arg_zeta, counting_n, counting_n_integer, phase_path, VerticalTrack};

fn main() -> zeta_criteria::Result<()> {
    let path = phase_path(0.5, 100.0)?;
    println!(
        "polyline {:?} → {:?} → {:?} with {} samples, arg = {:.12}",
        path.anchor.to_complex(),
        path.corner.to_complex(),
        path.endpoint.to_complex(),
        path.samples.len(),
        path.final_arg
    );

    for x in [10.0, 14.2, 50.0, 100.0, 1000.0, 10_000.0] {
        println!("N({x}) = {:.9}  ≈ {}", counting_n(x)?, counting_n_integer(x)?);
    }

    // the same argument tracked continuously up a vertical line
    let track = VerticalTrack::for_zeta(0.6, 500.0)?;
    for t in [25.0, 250.0, 499.0] {
        println!("arg ζ(0.6+{t}i): track {:.12}  polyline {:.12}", track.arg(t)?, arg_zeta(0.6, t, 1e-10)?);
    }
    Ok(())
}
