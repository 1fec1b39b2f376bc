//! The break-even fee makes privacy welfare-neutral.
//!
//! Gross of fees, both trader classes gain `mu * eta * delta` per trade
//! from the noise, all of it paid by the maker. Charging that amount as a
//! flat fee hands every class its no-noise expectation back, at any noise
//! level. Verified here in closed form and with a fee-mode simulation.
//! Run with `cargo run --release --example fee_neutrality`.

use gm_privacy::{simulate, ModelParams, SimConfig};

fn main() -> anyhow::Result<()> {
    let mu = 0.5;

    println!("closed form, mu {mu}, unit range: net-of-fee values across eta");
    println!(
        "{:>6} {:>10} {:>14} {:>14} {:>14}",
        "eta", "fee", "net informed", "net noise", "maker + fee"
    );
    for eta in [0.0, 0.1, 0.25, 0.4, 0.5] {
        let params = ModelParams::new(mu, eta, 0.0, 1.0)?;
        let welfare = params.welfare();
        let fee = params.break_even_fee();
        println!(
            "{:>6} {:>10.4} {:>14.6} {:>14.6} {:>14.6}",
            eta,
            fee,
            welfare.pi_informed - fee,
            welfare.pi_noise - fee,
            welfare.pi_maker + fee,
        );
    }
    let net = ModelParams::new(mu, 0.25, 0.0, 1.0)?.net_of_fees();
    println!(
        "every row matches the no-noise values ({}, {})",
        net.informed, net.noise
    );

    // The same neutrality out of the simulator.
    println!();
    let params = ModelParams::new(mu, 0.25, 0.0, 1.0)?;
    let fee = params.break_even_fee();
    let result = simulate(&SimConfig::new(params, 1_000_000, 7).with_fee(fee))?;
    println!(
        "simulated at eta 0.25 with fee {fee}: net informed {:.6}, net noise {:.6}, \
         maker plus fees {:+.6}",
        result.mean_pnl_informed - fee,
        result.mean_pnl_noise - fee,
        result.mean_pnl_maker + result.fee_revenue_per_trade,
    );
    Ok(())
}
