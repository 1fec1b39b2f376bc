//! The discrete subsidy next to its Gaussian-market sibling.
//!
//! In a one-period Gaussian market with additive observation noise on the
//! order flow, the maker's per-period loss is
//! `sigma_v * sigma_eps^2 / (2 * sqrt(sigma_u^2 + sigma_eps^2))`. The
//! two-state flip-channel analog is `mu * eta * delta`. Both vanish with
//! the observation noise and both are borne entirely by the quoting
//! mechanism. Run with `cargo run --example kyle_comparison`.

use gm_privacy::{KyleParams, ModelParams, ParamError};

fn main() -> Result<(), ParamError> {
    println!("discrete flip channel (mu 0.5, unit range):");
    println!("{:>6} {:>12}", "eta", "subsidy");
    for eta in [0.0, 0.1, 0.25, 0.4, 0.5] {
        let params = ModelParams::new(0.5, eta, 0.0, 1.0)?;
        println!("{:>6} {:>12.4}", eta, params.welfare().subsidy);
    }

    println!();
    println!("Gaussian market (sigma_v 1, sigma_u 1):");
    println!("{:>10} {:>12}", "sigma_eps", "subsidy");
    for sigma_eps in [0.0, 0.25, 0.5, 1.0, 2.0] {
        let params = KyleParams::new(1.0, 1.0, sigma_eps)?;
        println!("{:>10} {:>12.4}", sigma_eps, params.subsidy());
    }

    println!();
    println!("spot values: (2, 3, 4) -> {}", KyleParams::new(2.0, 3.0, 4.0)?.subsidy());
    Ok(())
}
