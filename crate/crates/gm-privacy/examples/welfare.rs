//! Per-trade welfare decomposition and the privacy subsidy.
//!
//! Splits each trade's expected P&L across the informed trader, the noise
//! trader, and the maker, checks the zero-sum identity, and shows that the
//! maker's loss is the break-even fee floor. Run with
//! `cargo run --example welfare`.

use gm_privacy::{ModelParams, ParamError, Trader};

fn main() -> Result<(), ParamError> {
    let params = ModelParams::new(0.5, 0.25, 0.0, 1.0)?;
    let welfare = params.welfare();

    println!(
        "mu {}, eta {}, delta {}",
        params.mu(),
        params.eta(),
        params.delta()
    );
    println!("pi_informed (per arrival)  {:+.6}", welfare.pi_informed);
    println!("pi_noise    (per arrival)  {:+.6}", welfare.pi_noise);
    println!("pi_maker    (per trade)    {:+.6}", welfare.pi_maker);
    println!("privacy subsidy            {:.6}", welfare.subsidy);
    println!("break-even fee floor       {:.6}", params.break_even_fee());

    let zero_sum = params.mu() * welfare.pi_informed
        + (1.0 - params.mu()) * welfare.pi_noise
        + welfare.pi_maker;
    println!("zero-sum residual          {zero_sum:+.2e}");

    // Both trader classes gain the same amount from the noise, and that
    // common gain is exactly the fee floor.
    println!();
    for agent in [Trader::Informed, Trader::Noise] {
        println!(
            "gross privacy gain for {agent}: {:.6}",
            params.gross_privacy_gain(agent)
        );
    }

    println!();
    println!("slopes in eta: spread {:+}, noise P&L {:+}",
        params.spread_slope_eta(),
        params.noise_pnl_slope_eta()
    );
    Ok(())
}
