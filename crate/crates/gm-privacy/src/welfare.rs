//! Per-trade welfare decomposition and the privacy subsidy.
//!
//! Every trade is a bilateral transfer between the arriving trader and the
//! maker, so the three per-trade expectations are zero-sum:
//! `mu * pi_informed + (1 - mu) * pi_noise + pi_maker = 0`. The maker's
//! expected loss `mu * eta * delta` is the subsidy the quoting mechanism
//! pays for pricing on a flipped direction signal, and doubles as the flat
//! per-trade fee that restores maker break-even.

use serde::{Deserialize, Serialize};

use crate::params::{ModelParams, Trader};

/// Expected per-trade profit and loss by agent class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WelfareBreakdown {
    /// Informed trader, conditional on arrival: `(1 - s) * delta / 2`.
    pub pi_informed: f64,
    /// Noise trader, conditional on arrival: `-s * delta / 2` (half the
    /// spread, independent of the value realization).
    pub pi_noise: f64,
    /// Maker, unconditional: `-mu * eta * delta`.
    pub pi_maker: f64,
    /// Per-trade transfer from the maker to traders, `|pi_maker|`.
    pub subsidy: f64,
    /// Flat per-trade fee that restores maker break-even; equals the
    /// subsidy.
    pub break_even_fee: f64,
}

/// Per-trade expectations net of the flat break-even fee. Both are
/// independent of the flip probability: the fee exactly cancels each
/// class's incremental gain over the no-noise benchmark.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NetOfFees {
    /// `(1 - mu) * delta / 2`, the no-noise informed profit.
    pub informed: f64,
    /// `-mu * delta / 2`, the no-noise noise-trader loss.
    pub noise: f64,
}

impl ModelParams {
    /// Closed-form welfare decomposition at the committed Bayesian quote.
    pub fn welfare(&self) -> WelfareBreakdown {
        let s = self.signal_strength();
        let delta = self.delta();
        let subsidy = self.mu() * self.eta() * delta;
        WelfareBreakdown {
            pi_informed: 0.5 * (1.0 - s) * delta,
            pi_noise: -0.5 * s * delta,
            pi_maker: -subsidy,
            subsidy,
            break_even_fee: subsidy,
        }
    }

    /// The flat per-trade fee floor `mu * eta * delta` at which the maker
    /// breaks even. Zero exactly when `eta = 0`.
    pub fn break_even_fee(&self) -> f64 {
        self.mu() * self.eta() * self.delta()
    }

    /// Per-class expectations with the break-even fee charged flat on every
    /// trade. Computed directly from `(mu, delta)` so the `eta`-invariance
    /// is exact rather than a cancellation of rounded terms.
    pub fn net_of_fees(&self) -> NetOfFees {
        let delta = self.delta();
        NetOfFees {
            informed: 0.5 * (1.0 - self.mu()) * delta,
            noise: -0.5 * self.mu() * delta,
        }
    }

    /// Gross-of-fees gain of one trader class over the no-noise benchmark:
    /// `pi_class(eta) - pi_class(0)`. Equals `mu * eta * delta` for both
    /// classes, which is why the flat break-even fee is exactly
    /// welfare-neutral.
    pub fn gross_privacy_gain(&self, agent: Trader) -> f64 {
        let with_noise = self.welfare();
        let baseline = self.without_noise().welfare();
        match agent {
            Trader::Informed => with_noise.pi_informed - baseline.pi_informed,
            Trader::Noise => with_noise.pi_noise - baseline.pi_noise,
        }
    }

    /// Derivative of the spread in `eta`: `-2 * mu * delta`. The spread
    /// falls linearly from `mu * delta` at `eta = 0` to zero at `eta = 0.5`.
    pub fn spread_slope_eta(&self) -> f64 {
        -2.0 * self.mu() * self.delta()
    }

    /// Derivative of the noise trader's expected profit in `eta`:
    /// `+mu * delta`. Noise traders gain from privacy alongside informed
    /// ones; the maker bears the whole cost.
    pub fn noise_pnl_slope_eta(&self) -> f64 {
        self.mu() * self.delta()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(mu: f64, eta: f64, v_low: f64, v_high: f64) -> ModelParams {
        ModelParams::new(mu, eta, v_low, v_high).unwrap()
    }

    #[test]
    fn welfare_examples() {
        let w = params(0.5, 0.0, 0.0, 1.0).welfare();
        assert_eq!(w.pi_informed, 0.25);
        assert_eq!(w.pi_noise, -0.25);
        assert_eq!(w.pi_maker, 0.0);

        let w = params(0.5, 0.25, 0.0, 1.0).welfare();
        assert_eq!(w.pi_maker, -0.125);
        assert_eq!(w.subsidy, 0.125);

        let w = params(0.6, 0.1, 0.0, 2.0).welfare();
        assert!((w.pi_maker - (-0.12)).abs() < 1e-15);
    }

    #[test]
    fn zero_sum_identity_on_grid() {
        for i in 0..10 {
            for j in 0..10 {
                let mu = i as f64 / 9.0;
                let eta = 0.5 * j as f64 / 9.0;
                let p = params(mu, eta, -3.0, 4.0);
                let w = p.welfare();
                let total = mu * w.pi_informed + (1.0 - mu) * w.pi_noise + w.pi_maker;
                assert!(
                    total.abs() <= 1e-12 * p.delta(),
                    "zero-sum violated at mu={mu}, eta={eta}: {total}"
                );
            }
        }
    }

    #[test]
    fn subsidy_matches_fee_floor() {
        let p = params(0.5, 0.4, 0.0, 1.0);
        assert_eq!(p.break_even_fee(), 0.2);
        assert_eq!(p.welfare().subsidy, p.break_even_fee());

        assert_eq!(params(0.3, 0.2, 0.0, 10.0).break_even_fee(), 0.6);
        assert_eq!(params(0.9, 0.0, 0.0, 1.0).break_even_fee(), 0.0);
    }

    #[test]
    fn net_of_fees_is_eta_independent() {
        let base = params(0.5, 0.25, 0.0, 1.0).net_of_fees();
        assert_eq!(base.informed, 0.25);
        assert_eq!(base.noise, -0.25);
        for eta in [0.0, 0.1, 0.4, 0.5] {
            assert_eq!(params(0.5, eta, 0.0, 1.0).net_of_fees(), base);
        }

        let n = params(0.2, 0.1, 0.0, 2.0).net_of_fees();
        assert_eq!(n.informed, 0.8);
        assert_eq!(n.noise, -0.2);
    }

    #[test]
    fn gross_gain_examples() {
        let p = params(0.5, 0.0, 0.0, 1.0);
        assert_eq!(p.gross_privacy_gain(Trader::Informed), 0.0);
        assert_eq!(p.gross_privacy_gain(Trader::Noise), 0.0);

        let p = params(0.5, 0.25, 0.0, 1.0);
        assert!((p.gross_privacy_gain(Trader::Informed) - 0.125).abs() < 1e-15);
        assert!((p.gross_privacy_gain(Trader::Noise) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn gross_gain_equals_fee_floor_for_both_classes() {
        for (mu, eta) in [(0.3, 0.2), (0.8, 0.45), (1.0, 0.1), (0.05, 0.5)] {
            let p = params(mu, eta, -1.0, 3.0);
            let fee = p.break_even_fee();
            let tol = 1e-12 * p.delta();
            assert!((p.gross_privacy_gain(Trader::Informed) - fee).abs() <= tol);
            assert!((p.gross_privacy_gain(Trader::Noise) - fee).abs() <= tol);
        }
    }

    #[test]
    fn slope_examples() {
        let p = params(0.5, 0.2, 0.0, 1.0);
        assert_eq!(p.spread_slope_eta(), -1.0);
        assert_eq!(p.noise_pnl_slope_eta(), 0.5);

        let p = params(0.0, 0.2, 0.0, 1.0);
        assert_eq!(p.spread_slope_eta(), 0.0);
        assert_eq!(p.noise_pnl_slope_eta(), 0.0);

        assert_eq!(params(1.0, 0.2, 0.0, 2.0).spread_slope_eta(), -4.0);
    }

    #[test]
    fn slopes_match_central_differences() {
        let h = 1e-6;
        for (mu, eta) in [(0.5, 0.2), (1.0, 0.25), (0.3, 0.4)] {
            let p = params(mu, eta, 0.0, 1.0);
            let up = p.with_eta(eta + h).unwrap();
            let down = p.with_eta(eta - h).unwrap();

            let spread_fd = (up.quotes().spread - down.quotes().spread) / (2.0 * h);
            let rel = (spread_fd - p.spread_slope_eta()).abs() / p.spread_slope_eta().abs();
            assert!(rel <= 1e-6, "spread slope mismatch at mu={mu}, eta={eta}");

            let noise_fd = (up.welfare().pi_noise - down.welfare().pi_noise) / (2.0 * h);
            let rel = (noise_fd - p.noise_pnl_slope_eta()).abs() / p.noise_pnl_slope_eta().abs();
            assert!(rel <= 1e-6, "noise slope mismatch at mu={mu}, eta={eta}");
        }
    }

    #[test]
    fn limits_are_exact() {
        // No noise: maker breaks even and the spread is the textbook one.
        let p = params(0.7, 0.0, 0.0, 1.0);
        assert_eq!(p.welfare().pi_maker, 0.0);
        assert_eq!(p.quotes().spread, 0.7);

        // Perfect privacy: zero spread, subsidy mu * delta / 2.
        let p = params(0.7, 0.5, 0.0, 1.0);
        assert_eq!(p.quotes().spread, 0.0);
        assert_eq!(p.welfare().subsidy, 0.35);
    }
}
