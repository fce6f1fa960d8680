//! Estimating Euler's constant from the one-parameter family of identities.
//!
//! ```text
//! cargo run --release --example alpha_sweep
//! ```

use zeta_criteria::criteria::{default_alpha_grid, gamma_alpha_sweep, DEFAULT_TOL};
use zeta_criteria::zeros::find_zeros_up_to;
use zeta_criteria::zeta::EULER_GAMMA;

fn main() -> zeta_criteria::Result<()> {
    let zeros = find_zeros_up_to(1000.0, 1e-10)?;
    println!("γ = {EULER_GAMMA:.15}");
    for row in gamma_alpha_sweep(&default_alpha_grid(), 1000.0, DEFAULT_TOL, &zeros)? {
        println!("α = {:.2}  γ(α) = {:.15}  |γ(α) - γ| = {:.2e}", row.alpha, row.gamma_alpha, row.abs_error_vs_gamma);
    }
    Ok(())
}
