//! Seeded Monte Carlo simulator of the sequential-trading game.
//!
//! Each round draws a value, a trader class, a direction, and a channel
//! flip, then executes at the committed Bayesian quotes, which are fixed
//! for the whole run. The flip is drawn even though execution uses the true
//! direction: it keeps the sampled stream aligned with the model and feeds
//! the observed-buy frequency.
//!
//! # Determinism
//!
//! Runs are reproducible bit for bit from `(config, seed)`. The generator
//! is ChaCha8 keyed from the 64-bit seed (`SeedableRng::seed_from_u64`);
//! each round consumes exactly four standard 53-bit uniforms in `[0, 1)`,
//! in a fixed order — value, trader type, noise direction, channel flip —
//! regardless of trader type or value mode, so the stream position never
//! depends on realized outcomes. Uniforms in `[0, 1)` also make the closed
//! parameter endpoints exact: `mu = 1` always draws informed, `eta = 0`
//! never flips.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::params::{Direction, ModelParams, Trader, Value};

/// How the value is drawn across rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ValueMode {
    /// Redraw the value each round, so sample means estimate the
    /// unconditional per-trade expectations.
    #[default]
    PerRound,
    /// Hold the value at `v_high` for conditional diagnostics.
    FixedHigh,
    /// Hold the value at `v_low`.
    FixedLow,
}

impl fmt::Display for ValueMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ValueMode::PerRound => "per-round",
            ValueMode::FixedHigh => "fixed-high",
            ValueMode::FixedLow => "fixed-low",
        })
    }
}

impl FromStr for ValueMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per-round" => Ok(ValueMode::PerRound),
            "fixed-high" => Ok(ValueMode::FixedHigh),
            "fixed-low" => Ok(ValueMode::FixedLow),
            other => Err(format!(
                "unknown value mode '{other}' (expected per-round, fixed-high, or fixed-low)"
            )),
        }
    }
}

/// Simulation failure.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SimError {
    #[error("rounds must be at least 1")]
    ZeroRounds,
    #[error("fee must be nonnegative and finite, got {0}")]
    InvalidFee(f64),
}

/// Run configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimConfig {
    pub params: ModelParams,
    pub rounds: u64,
    pub seed: u64,
    /// Flat per-trade fee deducted from the trader and credited to the
    /// maker's fee account.
    pub fee: f64,
    pub value_mode: ValueMode,
}

impl SimConfig {
    /// Config with no fee and per-round value draws.
    pub fn new(params: ModelParams, rounds: u64, seed: u64) -> Self {
        SimConfig {
            params,
            rounds,
            seed,
            fee: 0.0,
            value_mode: ValueMode::PerRound,
        }
    }

    pub fn with_fee(mut self, fee: f64) -> Self {
        self.fee = fee;
        self
    }

    pub fn with_value_mode(mut self, mode: ValueMode) -> Self {
        self.value_mode = mode;
        self
    }

    fn validate(&self) -> Result<(), SimError> {
        if self.rounds == 0 {
            return Err(SimError::ZeroRounds);
        }
        if !self.fee.is_finite() || self.fee < 0.0 {
            return Err(SimError::InvalidFee(self.fee));
        }
        Ok(())
    }
}

/// Aggregated run outcome.
///
/// P&L means and totals are gross of the flat fee, which every round
/// transfers unchanged from the trader to the maker's fee account and is
/// reported separately (`fee_revenue_per_trade`, `fee_revenue`). Net values
/// are the gross ones shifted by the fee. Class means and standard errors
/// are over the rounds in which that class arrived; a class that never
/// arrived reports mean and stderr 0 with count 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimResult {
    pub rounds: u64,
    pub seed: u64,
    pub fee: f64,
    pub value_mode: ValueMode,
    pub informed_count: u64,
    pub noise_count: u64,
    pub mean_pnl_informed: f64,
    pub mean_pnl_noise: f64,
    pub mean_pnl_maker: f64,
    pub stderr_informed: f64,
    pub stderr_noise: f64,
    pub stderr_maker: f64,
    /// Per-class gross P&L sums. The maker total is accumulated from the
    /// exact per-round negations of the trader P&L, so
    /// `(total_pnl_informed + total_pnl_noise) + total_pnl_maker` is zero
    /// bit for bit: transfers conserve.
    pub total_pnl_informed: f64,
    pub total_pnl_noise: f64,
    pub total_pnl_maker: f64,
    pub observed_buy_count: u64,
    pub observed_buy_frequency: f64,
    pub fee_revenue_per_trade: f64,
    pub fee_revenue: f64,
}

/// Welford accumulator: numerically stable mean and second moment, with the
/// plain sum kept alongside for the exact-conservation bookkeeping.
#[derive(Debug, Clone, Copy, Default)]
struct RunningStats {
    count: u64,
    mean: f64,
    m2: f64,
    sum: f64,
}

impl RunningStats {
    fn push(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Sample standard error of the mean; 0 when fewer than two samples.
    fn stderr(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        let variance = (self.m2 / (self.count - 1) as f64).max(0.0);
        (variance / self.count as f64).sqrt()
    }
}

/// Runs the game for `config.rounds` rounds at the committed Bayesian
/// quotes. Deterministic for a fixed config; see the module docs for the
/// exact draw procedure.
pub fn simulate(config: &SimConfig) -> Result<SimResult, SimError> {
    config.validate()?;
    let params = config.params;
    let quotes = params.quotes();
    let mu = params.mu();
    let eta = params.eta();

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut informed = RunningStats::default();
    let mut noise = RunningStats::default();
    let mut maker = RunningStats::default();
    // Maker sums split by counterparty class so each is the exact negation
    // of the matching trader sum.
    let mut maker_vs_informed_sum = 0.0f64;
    let mut maker_vs_noise_sum = 0.0f64;
    let mut observed_buy_count = 0u64;

    for _ in 0..config.rounds {
        let u_value = rng.random::<f64>();
        let u_type = rng.random::<f64>();
        let u_direction = rng.random::<f64>();
        let u_flip = rng.random::<f64>();

        let value = match config.value_mode {
            ValueMode::PerRound => {
                if u_value < 0.5 {
                    Value::High
                } else {
                    Value::Low
                }
            }
            ValueMode::FixedHigh => Value::High,
            ValueMode::FixedLow => Value::Low,
        };
        let trader = if u_type < mu {
            Trader::Informed
        } else {
            Trader::Noise
        };
        let direction = match trader {
            Trader::Informed => value.profitable_direction(),
            Trader::Noise => {
                if u_direction < 0.5 {
                    Direction::Buy
                } else {
                    Direction::Sell
                }
            }
        };
        let observed = if u_flip < eta {
            direction.flipped()
        } else {
            direction
        };
        if observed == Direction::Buy {
            observed_buy_count += 1;
        }

        // Execution is on the true direction; the channel only degrades
        // what the quotes were conditioned on.
        let gross = match direction {
            Direction::Buy => params.price_of(value) - quotes.ask,
            Direction::Sell => quotes.bid - params.price_of(value),
        };
        match trader {
            Trader::Informed => {
                informed.push(gross);
                maker_vs_informed_sum += -gross;
            }
            Trader::Noise => {
                noise.push(gross);
                maker_vs_noise_sum += -gross;
            }
        }
        maker.push(-gross);
    }

    let rounds_f = config.rounds as f64;
    Ok(SimResult {
        rounds: config.rounds,
        seed: config.seed,
        fee: config.fee,
        value_mode: config.value_mode,
        informed_count: informed.count,
        noise_count: noise.count,
        mean_pnl_informed: informed.mean,
        mean_pnl_noise: noise.mean,
        mean_pnl_maker: maker.mean,
        stderr_informed: informed.stderr(),
        stderr_noise: noise.stderr(),
        stderr_maker: maker.stderr(),
        total_pnl_informed: informed.sum,
        total_pnl_noise: noise.sum,
        total_pnl_maker: maker_vs_informed_sum + maker_vs_noise_sum,
        observed_buy_count,
        observed_buy_frequency: observed_buy_count as f64 / rounds_f,
        fee_revenue_per_trade: config.fee,
        fee_revenue: config.fee * rounds_f,
    })
}

/// One realized-vs-closed-form comparison inside a convergence report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceCheck {
    /// `informed`, `noise`, `maker_plus_fees`, or `observed_buy_frequency`.
    pub quantity: &'static str,
    pub realized: f64,
    pub target: f64,
    pub gap: f64,
    pub stderr: f64,
    pub z: f64,
    pub samples: u64,
}

/// A simulation run compared against the closed-form expectations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceReport {
    pub result: SimResult,
    pub checks: Vec<ConvergenceCheck>,
    pub max_abs_z: f64,
}

/// Gap over stderr, with a guard for degenerate classes. A class whose
/// per-round P&L is constant up to rounding (the informed class, whose two
/// branches are the same profit) has a standard error at floating-point
/// noise scale, where gap/stderr is meaningless; a gap below rounding dust
/// at the problem's scale counts as converged outright.
fn z_score(gap: f64, stderr: f64, scale: f64) -> f64 {
    if gap.abs() <= 1e-9 * scale {
        0.0
    } else if stderr > 0.0 {
        gap / stderr
    } else {
        f64::INFINITY.copysign(gap)
    }
}

/// Runs [`simulate`] and compares each class mean (net of the flat fee)
/// against the closed forms, plus the observed-buy frequency against its
/// channel marginal. Reports absolute gap, standard error, and z-score per
/// quantity.
pub fn convergence_report(config: &SimConfig) -> Result<ConvergenceReport, SimError> {
    let result = simulate(config)?;
    let params = config.params;
    let welfare = params.welfare();
    let fee = config.fee;
    let price_scale = params.delta() + params.mid().abs();

    let mut checks = Vec::with_capacity(4);
    let mut push = |quantity, realized: f64, target: f64, stderr: f64, scale: f64, samples| {
        let gap = realized - target;
        checks.push(ConvergenceCheck {
            quantity,
            realized,
            target,
            gap,
            stderr,
            z: if samples == 0 { 0.0 } else { z_score(gap, stderr, scale) },
            samples,
        });
    };

    push(
        "informed",
        result.mean_pnl_informed - fee,
        welfare.pi_informed - fee,
        result.stderr_informed,
        price_scale,
        result.informed_count,
    );
    push(
        "noise",
        result.mean_pnl_noise - fee,
        welfare.pi_noise - fee,
        result.stderr_noise,
        price_scale,
        result.noise_count,
    );
    push(
        "maker_plus_fees",
        result.mean_pnl_maker + result.fee_revenue_per_trade,
        welfare.pi_maker + fee,
        result.stderr_maker,
        price_scale,
        result.rounds,
    );

    // The buy-frequency target depends on the value mode: under per-round
    // draws the symmetric prior pins the marginal at 1/2; conditioning on a
    // fixed value shifts it to the channel likelihood.
    let frequency_target = match config.value_mode {
        ValueMode::PerRound => 0.5,
        ValueMode::FixedHigh => params.likelihood_buy(Value::High),
        ValueMode::FixedLow => params.likelihood_buy(Value::Low),
    };
    let binomial_stderr =
        (frequency_target * (1.0 - frequency_target) / result.rounds as f64).sqrt();
    push(
        "observed_buy_frequency",
        result.observed_buy_frequency,
        frequency_target,
        binomial_stderr,
        1.0,
        result.rounds,
    );

    let max_abs_z = checks.iter().map(|c| c.z.abs()).fold(0.0, f64::max);
    Ok(ConvergenceReport {
        result,
        checks,
        max_abs_z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(mu: f64, eta: f64) -> ModelParams {
        ModelParams::new(mu, eta, 0.0, 1.0).unwrap()
    }

    #[test]
    fn rejects_invalid_config() {
        let base = SimConfig::new(params(0.5, 0.25), 0, 42);
        assert_eq!(simulate(&base), Err(SimError::ZeroRounds));

        let negative_fee = SimConfig::new(params(0.5, 0.25), 10, 42).with_fee(-0.1);
        assert!(matches!(simulate(&negative_fee), Err(SimError::InvalidFee(_))));

        let nan_fee = SimConfig::new(params(0.5, 0.25), 10, 42).with_fee(f64::NAN);
        assert!(simulate(&nan_fee).is_err());
    }

    #[test]
    fn bit_identical_for_fixed_seed() {
        let config = SimConfig::new(params(0.5, 0.25), 50_000, 42).with_fee(0.125);
        let a = simulate(&config).unwrap();
        let b = simulate(&config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn different_seeds_differ() {
        let a = simulate(&SimConfig::new(params(0.5, 0.25), 10_000, 1)).unwrap();
        let b = simulate(&SimConfig::new(params(0.5, 0.25), 10_000, 2)).unwrap();
        assert_ne!(a.mean_pnl_maker, b.mean_pnl_maker);
    }

    #[test]
    fn counts_partition_rounds() {
        let r = simulate(&SimConfig::new(params(0.3, 0.1), 25_000, 7)).unwrap();
        assert_eq!(r.informed_count + r.noise_count, r.rounds);
    }

    #[test]
    fn transfers_conserve_exactly() {
        for seed in [1, 2, 3] {
            let config = SimConfig::new(params(0.4, 0.2), 10_000, seed).with_fee(0.05);
            let r = simulate(&config).unwrap();
            assert_eq!(
                (r.total_pnl_informed + r.total_pnl_noise) + r.total_pnl_maker,
                0.0,
                "gross transfers must cancel bit for bit"
            );
            assert_eq!(r.fee_revenue - r.fee * r.rounds as f64, 0.0);
        }
    }

    #[test]
    fn degenerate_mu_endpoints() {
        let all_informed = simulate(&SimConfig::new(params(1.0, 0.25), 1_000, 9)).unwrap();
        assert_eq!(all_informed.informed_count, 1_000);
        assert_eq!(all_informed.noise_count, 0);
        assert_eq!(all_informed.mean_pnl_noise, 0.0);

        let all_noise = simulate(&SimConfig::new(params(0.0, 0.25), 1_000, 9)).unwrap();
        assert_eq!(all_noise.informed_count, 0);
    }

    #[test]
    fn informed_pnl_is_constant_per_run() {
        // Both informed branches realize the same profit, so the class
        // stderr is exactly zero and the mean is the constant itself.
        let p = params(0.5, 0.25);
        let r = simulate(&SimConfig::new(p, 20_000, 11)).unwrap();
        assert_eq!(r.stderr_informed, 0.0);
        assert_eq!(r.mean_pnl_informed, p.v_high() - p.quotes().ask);
    }

    #[test]
    fn no_flips_at_eta_zero() {
        let p = params(1.0, 0.0);
        let r = simulate(&SimConfig::new(p, 5_000, 3).with_value_mode(ValueMode::FixedHigh))
            .unwrap();
        // Informed always buys on high and nothing flips.
        assert_eq!(r.observed_buy_count, 5_000);
    }

    #[test]
    fn zero_spread_noise_mean_is_statistically_zero() {
        // At eta = 0.5 the quotes collapse to mid, so the noise trader's
        // expected cost is zero; the realized mean still carries value risk
        // of +-delta/2 per round and is only zero within its stderr.
        let r = simulate(&SimConfig::new(params(0.5, 0.5), 200_000, 13)).unwrap();
        assert!(r.stderr_noise > 0.0);
        assert!(r.mean_pnl_noise.abs() <= 4.0 * r.stderr_noise);
    }

    #[test]
    fn convergence_report_hits_closed_forms() {
        let config = SimConfig::new(params(0.5, 0.25), 200_000, 7);
        let report = convergence_report(&config).unwrap();
        assert_eq!(report.checks.len(), 4);
        assert!(
            report.max_abs_z <= 4.0,
            "max |z| = {} too large",
            report.max_abs_z
        );
        for check in &report.checks {
            assert!(check.z.is_finite());
        }
    }

    #[test]
    fn convergence_report_small_run_has_wide_stderr() {
        let small = convergence_report(&SimConfig::new(params(0.3, 0.4), 10_000, 1)).unwrap();
        let large = convergence_report(&SimConfig::new(params(0.3, 0.4), 1_000_000, 1)).unwrap();
        let stderr_of = |r: &ConvergenceReport, q: &str| {
            r.checks.iter().find(|c| c.quantity == q).unwrap().stderr
        };
        assert!(stderr_of(&small, "noise") > 5.0 * stderr_of(&large, "noise"));
    }

    #[test]
    fn fee_mode_restores_maker_break_even() {
        let p = params(0.5, 0.25);
        let fee = p.break_even_fee();
        let report =
            convergence_report(&SimConfig::new(p, 500_000, 42).with_fee(fee)).unwrap();
        let maker = report
            .checks
            .iter()
            .find(|c| c.quantity == "maker_plus_fees")
            .unwrap();
        assert_eq!(maker.target, 0.0);
        assert!(maker.z.abs() <= 4.0);
    }

    #[test]
    fn fixed_value_mode_frequency_target() {
        let p = params(0.5, 0.25);
        let config = SimConfig::new(p, 200_000, 5).with_value_mode(ValueMode::FixedHigh);
        let report = convergence_report(&config).unwrap();
        let freq = report
            .checks
            .iter()
            .find(|c| c.quantity == "observed_buy_frequency")
            .unwrap();
        assert_eq!(freq.target, p.likelihood_buy(Value::High));
        assert!(freq.z.abs() <= 4.0);
    }

    #[test]
    fn value_mode_round_trips_from_str() {
        for mode in [ValueMode::PerRound, ValueMode::FixedHigh, ValueMode::FixedLow] {
            assert_eq!(mode.to_string().parse::<ValueMode>().unwrap(), mode);
        }
        assert!("sometimes".parse::<ValueMode>().is_err());
    }
}
