//! Closed-form likelihoods, posteriors, and the committed Bayesian quote.
//!
//! The maker observes the trade direction through a flip channel and commits
//! to pricing at the posterior expectation given that noisy observation:
//! `ask = E[v | observed buy]`, `bid = E[v | observed sell]`. With signal
//! strength `s = mu * (1 - 2 * eta)` the posterior on the high value is
//! `(1 + s) / 2` after an observed buy and `(1 - s) / 2` after an observed
//! sell, so both quotes sit `s * delta / 2` away from the prior mean and the
//! spread is `s * delta`.

use serde::{Deserialize, Serialize};

use crate::params::{Direction, ModelParams, Value};

/// The committed two-sided quote.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuoteSet {
    pub ask: f64,
    pub bid: f64,
    /// Prior mean; ask and bid are symmetric about it.
    pub mid: f64,
    /// `ask - bid = mu * (1 - 2 * eta) * delta`.
    pub spread: f64,
}

impl ModelParams {
    /// Probability that the maker observes a buy given the realized value.
    ///
    /// Returns `(1 + s) / 2` for the high value and `(1 - s) / 2` for the
    /// low one: the informed flow pushes the observation toward the
    /// profitable direction, attenuated by the flip channel.
    pub fn likelihood_buy(&self, value: Value) -> f64 {
        let s = self.signal_strength();
        match value {
            Value::High => 0.5 * (1.0 + s),
            Value::Low => 0.5 * (1.0 - s),
        }
    }

    /// Posterior probability of the high value given the observed direction.
    ///
    /// Under the symmetric prior the observed-buy marginal is exactly 1/2,
    /// so Bayes reduces to `(1 + s) / 2` on a buy and `(1 - s) / 2` on a
    /// sell. The two posteriors average back to the prior.
    pub fn posterior_high(&self, observed: Direction) -> f64 {
        let s = self.signal_strength();
        match observed {
            Direction::Buy => 0.5 * (1.0 + s),
            Direction::Sell => 0.5 * (1.0 - s),
        }
    }

    /// The committed Bayesian quote implied by the noisy direction signal.
    ///
    /// At `eta = 0` this is the textbook quote with spread `mu * delta`; at
    /// `eta = 0.5` the observation carries no information and both sides
    /// collapse to the prior mean.
    pub fn quotes(&self) -> QuoteSet {
        let mid = self.mid();
        let spread = self.signal_strength() * self.delta();
        let half_spread = 0.5 * spread;
        QuoteSet {
            ask: mid + half_spread,
            bid: mid - half_spread,
            mid,
            spread,
        }
    }

    /// The ask a maker could post if it observed the *true* direction:
    /// `mid + mu * delta / 2`, independent of `eta`.
    ///
    /// This is the coarse-signal benchmark: a maker conditioning on the
    /// unflipped direction breaks even, so the committed maker's expected
    /// loss is entirely the cost of pricing on the flipped signal.
    pub fn competitive_ask(&self) -> f64 {
        self.mid() + 0.5 * self.mu() * self.delta()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(mu: f64, eta: f64, v_low: f64, v_high: f64) -> ModelParams {
        ModelParams::new(mu, eta, v_low, v_high).unwrap()
    }

    #[test]
    fn likelihood_buy_examples() {
        assert_eq!(params(1.0, 0.0, 0.0, 1.0).likelihood_buy(Value::High), 1.0);
        assert_eq!(
            params(0.5, 0.25, 0.0, 1.0).likelihood_buy(Value::High),
            0.625
        );
        assert_eq!(params(0.5, 0.5, 0.0, 1.0).likelihood_buy(Value::Low), 0.5);
    }

    #[test]
    fn likelihoods_sum_with_sell_complements_to_one() {
        let p = params(0.37, 0.13, -2.0, 3.5);
        for value in [Value::High, Value::Low] {
            let buy = p.likelihood_buy(value);
            assert!((buy + (1.0 - buy) - 1.0).abs() < 1e-15);
            assert!((0.0..=1.0).contains(&buy));
        }
        // Complementary across values: P(buy|H) + P(buy|L) = 1.
        let total = p.likelihood_buy(Value::High) + p.likelihood_buy(Value::Low);
        assert!((total - 1.0).abs() < 1e-15);
    }

    #[test]
    fn posterior_examples() {
        assert_eq!(
            params(0.5, 0.0, 0.0, 1.0).posterior_high(Direction::Buy),
            0.75
        );
        assert_eq!(
            params(0.5, 0.25, 0.0, 1.0).posterior_high(Direction::Sell),
            0.375
        );
        assert_eq!(
            params(0.9, 0.5, 0.0, 1.0).posterior_high(Direction::Buy),
            0.5
        );
    }

    #[test]
    fn posteriors_average_to_prior() {
        let p = params(0.73, 0.21, 0.0, 1.0);
        let avg =
            0.5 * (p.posterior_high(Direction::Buy) + p.posterior_high(Direction::Sell));
        assert!((avg - 0.5).abs() < 1e-15);
    }

    #[test]
    fn quote_examples() {
        let q = params(0.5, 0.0, 0.0, 1.0).quotes();
        assert_eq!(q.ask, 0.75);
        assert_eq!(q.bid, 0.25);
        assert_eq!(q.spread, 0.5);

        let q = params(0.5, 0.25, 0.0, 1.0).quotes();
        assert_eq!(q.spread, 0.25);

        let q = params(0.8, 0.5, 10.0, 20.0).quotes();
        assert_eq!(q.ask, 15.0);
        assert_eq!(q.bid, 15.0);
        assert_eq!(q.spread, 0.0);
    }

    #[test]
    fn quotes_symmetric_about_mid() {
        let p = params(0.62, 0.17, 3.0, 7.5);
        let q = p.quotes();
        assert!(q.ask >= q.mid && q.mid >= q.bid);
        assert!((q.ask + q.bid - 2.0 * q.mid).abs() <= 1e-12 * p.delta());
        assert!((q.ask - q.bid - q.spread).abs() <= 1e-12 * p.delta());
    }

    #[test]
    fn competitive_ask_examples() {
        assert_eq!(params(0.5, 0.3, 0.0, 1.0).competitive_ask(), 0.75);
        assert_eq!(params(0.0, 0.2, 0.0, 1.0).competitive_ask(), 0.5);
        assert_eq!(params(0.4, 0.25, 0.0, 2.0).competitive_ask(), 1.4);
    }

    #[test]
    fn competitive_ask_is_the_no_noise_ask() {
        for (mu, eta) in [(0.5, 0.3), (0.9, 0.45), (0.1, 0.05)] {
            let p = params(mu, eta, -1.0, 2.0);
            let no_noise = p.with_eta(0.0).unwrap().quotes();
            assert_eq!(p.competitive_ask(), no_noise.ask);
        }
    }
}
