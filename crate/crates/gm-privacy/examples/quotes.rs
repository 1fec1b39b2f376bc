//! Committed Bayesian quotes across the privacy ladder.
//!
//! Shows how the two-sided quote tightens toward the prior mid as the
//! direction channel gets noisier, and that the spread is linear in the
//! flip probability. Run with `cargo run --example quotes`.

use gm_privacy::{Direction, ModelParams, ParamError};

fn main() -> Result<(), ParamError> {
    let mu = 0.5;
    let (v_low, v_high) = (90.0, 110.0);

    println!("informed fraction {mu}, values {v_low}/{v_high}");
    println!(
        "{:>6} {:>8} {:>9} {:>9} {:>9} {:>15}",
        "eta", "signal", "bid", "ask", "spread", "posterior(buy)"
    );
    for eta in [0.0, 0.1, 0.2, 0.3, 0.4, 0.5] {
        let params = ModelParams::new(mu, eta, v_low, v_high)?;
        let quotes = params.quotes();
        println!(
            "{:>6} {:>8.3} {:>9.3} {:>9.3} {:>9.3} {:>15.4}",
            eta,
            params.signal_strength(),
            quotes.bid,
            quotes.ask,
            quotes.spread,
            params.posterior_high(Direction::Buy),
        );
    }

    let textbook = ModelParams::new(mu, 0.0, v_low, v_high)?;
    let blind = ModelParams::new(mu, 0.5, v_low, v_high)?;
    println!();
    println!(
        "no-noise spread mu*delta = {}, fair-coin spread = {}",
        textbook.quotes().spread,
        blind.quotes().spread
    );
    println!(
        "a maker seeing the true direction would quote ask {} at any eta",
        textbook.competitive_ask()
    );
    Ok(())
}
