//! Model parameters and the discrete state space of a single trading round.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Validation failure for a model or channel parameter.
///
/// Each variant names the offending field and the violated bound so callers
/// (the CLI, sweep rows) can surface the failure without re-deriving it.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParamError {
    #[error("mu must lie in [0, 1], got {0}")]
    MuOutOfRange(f64),
    #[error("eta must lie in [0, 0.5], got {0}")]
    EtaOutOfRange(f64),
    #[error("v_high must exceed v_low, got v_low = {v_low} and v_high = {v_high}")]
    ValueRangeEmpty { v_low: f64, v_high: f64 },
    #[error("{field} must be finite, got {value}")]
    NonFinite { field: &'static str, value: f64 },
    #[error("epsilon must be nonnegative, got {0}")]
    NegativeEpsilon(f64),
    #[error("sigma_{0} must be nonnegative and finite")]
    NegativeSigma(&'static str),
    #[error("sigma_u and sigma_eps must not both be zero")]
    DegenerateKyleNoise,
}

/// The asset's realized value: two-point support `{v_low, v_high}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    High,
    Low,
}

impl Value {
    /// The direction an informed trader takes when the value is known.
    pub fn profitable_direction(self) -> Direction {
        match self {
            Value::High => Direction::Buy,
            Value::Low => Direction::Sell,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Value::High => "high",
            Value::Low => "low",
        })
    }
}

/// A trade direction, either the trader's true one or the maker's noisy
/// observation of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Buy,
    Sell,
}

impl Direction {
    pub fn flipped(self) -> Direction {
        match self {
            Direction::Buy => Direction::Sell,
            Direction::Sell => Direction::Buy,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Buy => "buy",
            Direction::Sell => "sell",
        })
    }
}

/// Trader class arriving in a round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Trader {
    /// Knows the realized value and trades the profitable direction.
    Informed,
    /// Uninformed; buys or sells with equal probability.
    Noise,
}

impl fmt::Display for Trader {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trader::Informed => "informed",
            Trader::Noise => "noise",
        })
    }
}

/// Parameters of the two-state sequential-trading model with a direction-flip
/// channel between the trader and the market maker.
///
/// The prior over the value is symmetric (1/2 on each state) and is not a
/// parameter: the asymmetric case has no closed form here and is deliberately
/// unrepresentable.
///
/// Fields are private; [`ModelParams::new`] enforces
/// `0 <= mu <= 1`, `0 <= eta <= 0.5`, and `v_high > v_low`, so every
/// constructed value is valid. The closed intervals are accepted on purpose:
/// all formulas are continuous there, and the endpoints are the most useful
/// degenerate cases (`mu = 0`: zero spread and subsidy; `mu = 1`: no noise
/// traders, their per-trade quantities are still reported but carry zero
/// weight; `eta = 0.5`: the observation is independent of the value and the
/// maker posts a single mid price).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawModelParams", into = "RawModelParams")]
pub struct ModelParams {
    mu: f64,
    eta: f64,
    v_low: f64,
    v_high: f64,
}

/// Serde mirror of [`ModelParams`]; deserialization revalidates.
#[derive(Serialize, Deserialize)]
struct RawModelParams {
    mu: f64,
    eta: f64,
    v_low: f64,
    v_high: f64,
}

impl TryFrom<RawModelParams> for ModelParams {
    type Error = ParamError;

    fn try_from(raw: RawModelParams) -> Result<Self, ParamError> {
        ModelParams::new(raw.mu, raw.eta, raw.v_low, raw.v_high)
    }
}

impl From<ModelParams> for RawModelParams {
    fn from(p: ModelParams) -> Self {
        RawModelParams {
            mu: p.mu,
            eta: p.eta,
            v_low: p.v_low,
            v_high: p.v_high,
        }
    }
}

impl ModelParams {
    /// Validates and builds a parameter set.
    ///
    /// `mu` is the informed-trader fraction, `eta` the flip probability of
    /// the observation channel, and `v_low < v_high` the two-point support
    /// of the asset value.
    pub fn new(mu: f64, eta: f64, v_low: f64, v_high: f64) -> Result<Self, ParamError> {
        if !mu.is_finite() {
            return Err(ParamError::NonFinite {
                field: "mu",
                value: mu,
            });
        }
        if !eta.is_finite() {
            return Err(ParamError::NonFinite {
                field: "eta",
                value: eta,
            });
        }
        if !v_low.is_finite() {
            return Err(ParamError::NonFinite {
                field: "v_low",
                value: v_low,
            });
        }
        if !v_high.is_finite() {
            return Err(ParamError::NonFinite {
                field: "v_high",
                value: v_high,
            });
        }
        if !(0.0..=1.0).contains(&mu) {
            return Err(ParamError::MuOutOfRange(mu));
        }
        if !(0.0..=0.5).contains(&eta) {
            return Err(ParamError::EtaOutOfRange(eta));
        }
        if v_high <= v_low {
            return Err(ParamError::ValueRangeEmpty { v_low, v_high });
        }
        Ok(ModelParams {
            mu,
            eta,
            v_low,
            v_high,
        })
    }

    /// Informed-trader fraction.
    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// Flip probability of the observation channel.
    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn v_low(&self) -> f64 {
        self.v_low
    }

    pub fn v_high(&self) -> f64 {
        self.v_high
    }

    /// Value range `v_high - v_low`; strictly positive by construction.
    pub fn delta(&self) -> f64 {
        self.v_high - self.v_low
    }

    /// Prior mean `(v_high + v_low) / 2` under the symmetric prior.
    pub fn mid(&self) -> f64 {
        0.5 * (self.v_high + self.v_low)
    }

    /// Price of a realized value.
    pub fn price_of(&self, value: Value) -> f64 {
        match value {
            Value::High => self.v_high,
            Value::Low => self.v_low,
        }
    }

    /// Effective informativeness `s = mu * (1 - 2 * eta)` of the observed
    /// direction. Lies in `[0, 1]`: `1` means the observation reveals the
    /// value, `0` means it is independent of it.
    pub fn signal_strength(&self) -> f64 {
        self.mu * (1.0 - 2.0 * self.eta)
    }

    /// Same value support and informed fraction, different flip probability.
    pub fn with_eta(&self, eta: f64) -> Result<Self, ParamError> {
        ModelParams::new(self.mu, eta, self.v_low, self.v_high)
    }

    /// The no-noise benchmark with `eta = 0`.
    pub(crate) fn without_noise(&self) -> Self {
        ModelParams {
            eta: 0.0,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_closed_endpoints() {
        for (mu, eta) in [(0.0, 0.0), (1.0, 0.5), (0.0, 0.5), (1.0, 0.0)] {
            ModelParams::new(mu, eta, 0.0, 1.0).unwrap();
        }
    }

    #[test]
    fn rejects_out_of_range_mu() {
        let err = ModelParams::new(1.2, 0.1, 0.0, 1.0).unwrap_err();
        assert_eq!(err, ParamError::MuOutOfRange(1.2));
        assert!(err.to_string().contains("mu must lie in [0, 1]"));
    }

    #[test]
    fn rejects_out_of_range_eta() {
        let err = ModelParams::new(0.5, 0.6, 0.0, 1.0).unwrap_err();
        assert_eq!(err, ParamError::EtaOutOfRange(0.6));
        assert!(err.to_string().contains("eta must lie in [0, 0.5]"));
    }

    #[test]
    fn rejects_empty_value_range() {
        assert!(matches!(
            ModelParams::new(0.5, 0.1, 1.0, 1.0),
            Err(ParamError::ValueRangeEmpty { .. })
        ));
        assert!(matches!(
            ModelParams::new(0.5, 0.1, 2.0, 1.0),
            Err(ParamError::ValueRangeEmpty { .. })
        ));
    }

    #[test]
    fn rejects_non_finite_fields() {
        assert!(matches!(
            ModelParams::new(f64::NAN, 0.1, 0.0, 1.0),
            Err(ParamError::NonFinite { field: "mu", .. })
        ));
        assert!(matches!(
            ModelParams::new(0.5, 0.1, 0.0, f64::INFINITY),
            Err(ParamError::NonFinite { field: "v_high", .. })
        ));
    }

    #[test]
    fn signal_strength_examples() {
        let s = |mu, eta| {
            ModelParams::new(mu, eta, 0.0, 1.0)
                .unwrap()
                .signal_strength()
        };
        assert_eq!(s(0.5, 0.0), 0.5);
        assert_eq!(s(0.5, 0.25), 0.25);
        assert_eq!(s(0.7, 0.5), 0.0);
    }

    #[test]
    fn delta_and_mid() {
        let p = ModelParams::new(0.5, 0.1, 10.0, 20.0).unwrap();
        assert_eq!(p.delta(), 10.0);
        assert_eq!(p.mid(), 15.0);
        assert_eq!(p.price_of(Value::High), 20.0);
        assert_eq!(p.price_of(Value::Low), 10.0);
    }

    #[test]
    fn serde_round_trip_revalidates() {
        let p = ModelParams::new(0.5, 0.25, 0.0, 1.0).unwrap();
        let json = serde_json::to_string(&p).unwrap();
        let back: ModelParams = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);

        let bad = r#"{"mu":0.5,"eta":0.7,"v_low":0.0,"v_high":1.0}"#;
        assert!(serde_json::from_str::<ModelParams>(bad).is_err());
    }
}
