//! Brute-force verification by exhaustive enumeration.
//!
//! Builds the 16-atom outcome tree, prints it, and compares the summation
//! oracle against the closed forms under both quote rules: the committed
//! maker loses exactly the subsidy, while a maker conditioning on the true
//! direction breaks even. Run with `cargo run --example outcome_tree`.

use gm_privacy::{enumerate, subsidy_gap, ModelParams, ParamError, QuoteRule};

fn main() -> Result<(), ParamError> {
    let params = ModelParams::new(0.5, 0.25, 0.0, 1.0)?;

    let tree = enumerate(params, QuoteRule::CommittedBayesian);
    println!("{}", tree.to_csv());
    println!(
        "positive atoms {}, total probability {}",
        tree.positive_atom_count(),
        tree.total_probability()
    );
    println!(
        "tree quotes: bid {} / ask {} (spread {})",
        tree.bid(),
        tree.ask(),
        tree.spread()
    );

    let oracle = tree.welfare();
    let closed = params.welfare();
    println!();
    println!("{:>14} {:>14} {:>14} {:>12}", "quantity", "oracle", "closed form", "gap");
    for (name, a, b) in [
        ("pi_informed", oracle.pi_informed, closed.pi_informed),
        ("pi_noise", oracle.pi_noise, closed.pi_noise),
        ("pi_maker", oracle.pi_maker, closed.pi_maker),
        ("spread", tree.spread(), params.quotes().spread),
    ] {
        println!("{name:>14} {a:>14.9} {b:>14.9} {:>12.2e}", a - b);
    }
    println!("subsidy gap (maker loss + mu*eta*delta): {:.2e}", subsidy_gap(params));

    // The same tree priced on the unflipped direction: maker break-even.
    let benchmark = enumerate(params, QuoteRule::TrueDirection);
    println!();
    println!(
        "true-direction rule: spread {} (vs committed {}), maker P&L {:+.2e}",
        benchmark.spread(),
        tree.spread(),
        benchmark.welfare().pi_maker
    );
    Ok(())
}
