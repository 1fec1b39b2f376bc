//! From a local-DP disclosure budget to market quantities.
//!
//! Randomized response on the direction label flips it with probability
//! `1 / (1 + e^epsilon)`; the table prices a range of budgets: a tight
//! budget means a noisy channel, a thin spread, and a large per-trade
//! subsidy owed by the protocol. Run with `cargo run --example dp_budget`.

use gm_privacy::{dp_flip_probability, ModelParams, ParamError};

fn main() -> Result<(), ParamError> {
    let mu = 0.5;
    println!("informed fraction {mu}, unit value range");
    println!(
        "{:>8} {:>10} {:>10} {:>12} {:>14}",
        "epsilon", "eta", "spread", "subsidy", "fee floor"
    );
    for epsilon in [0.0, 0.25, 0.5, 1.0, 3f64.ln(), 2.0, 3.0, 5.0, 8.0] {
        let eta = dp_flip_probability(epsilon)?;
        let params = ModelParams::new(mu, eta, 0.0, 1.0)?;
        let welfare = params.welfare();
        println!(
            "{:>8.4} {:>10.6} {:>10.6} {:>12.6} {:>14.6}",
            epsilon,
            eta,
            params.quotes().spread,
            welfare.subsidy,
            welfare.break_even_fee
        );
    }

    println!();
    println!("epsilon = 0 is a fair coin: spread 0, subsidy mu/2.");
    println!("epsilon = ln 3 flips a quarter of directions.");
    Ok(())
}
