//! Gaussian-market analog of the subsidy, for cross-model comparison.
//!
//! In a one-period Kyle market where the maker observes order flow through
//! additive Gaussian noise, the maker's expected per-period loss has the
//! closed form `sigma_v * sigma_eps^2 / (2 * sqrt(sigma_u^2 + sigma_eps^2))`.
//! This module evaluates that single value so the discrete-channel subsidy
//! can be placed next to its continuous sibling; it does not simulate the
//! Kyle model.

use serde::{Deserialize, Serialize};

use crate::params::ParamError;

/// Parameters of the Gaussian comparison market.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawKyleParams", into = "RawKyleParams")]
pub struct KyleParams {
    sigma_v: f64,
    sigma_u: f64,
    sigma_eps: f64,
}

#[derive(Serialize, Deserialize)]
struct RawKyleParams {
    sigma_v: f64,
    sigma_u: f64,
    sigma_eps: f64,
}

impl TryFrom<RawKyleParams> for KyleParams {
    type Error = ParamError;

    fn try_from(raw: RawKyleParams) -> Result<Self, ParamError> {
        KyleParams::new(raw.sigma_v, raw.sigma_u, raw.sigma_eps)
    }
}

impl From<KyleParams> for RawKyleParams {
    fn from(p: KyleParams) -> Self {
        RawKyleParams {
            sigma_v: p.sigma_v,
            sigma_u: p.sigma_u,
            sigma_eps: p.sigma_eps,
        }
    }
}

impl KyleParams {
    /// Validates the three standard deviations: value (`sigma_v`), noise
    /// flow (`sigma_u`), and observation noise (`sigma_eps`). All must be
    /// nonnegative; `sigma_u` and `sigma_eps` must not both be zero, since
    /// the subsidy formula conditions on total flow noise.
    pub fn new(sigma_v: f64, sigma_u: f64, sigma_eps: f64) -> Result<Self, ParamError> {
        if !sigma_v.is_finite() || sigma_v < 0.0 {
            return Err(ParamError::NegativeSigma("v"));
        }
        if !sigma_u.is_finite() || sigma_u < 0.0 {
            return Err(ParamError::NegativeSigma("u"));
        }
        if !sigma_eps.is_finite() || sigma_eps < 0.0 {
            return Err(ParamError::NegativeSigma("eps"));
        }
        if sigma_u == 0.0 && sigma_eps == 0.0 {
            return Err(ParamError::DegenerateKyleNoise);
        }
        Ok(KyleParams {
            sigma_v,
            sigma_u,
            sigma_eps,
        })
    }

    pub fn sigma_v(&self) -> f64 {
        self.sigma_v
    }

    pub fn sigma_u(&self) -> f64 {
        self.sigma_u
    }

    pub fn sigma_eps(&self) -> f64 {
        self.sigma_eps
    }

    /// Maker's expected per-period loss
    /// `sigma_v * sigma_eps^2 / (2 * sqrt(sigma_u^2 + sigma_eps^2))`.
    pub fn subsidy(&self) -> f64 {
        let flow_noise = (self.sigma_u * self.sigma_u + self.sigma_eps * self.sigma_eps).sqrt();
        self.sigma_v * self.sigma_eps * self.sigma_eps / (2.0 * flow_noise)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsidy_examples() {
        assert_eq!(KyleParams::new(1.0, 1.0, 0.0).unwrap().subsidy(), 0.0);
        assert_eq!(KyleParams::new(1.0, 0.0, 1.0).unwrap().subsidy(), 0.5);
        assert_eq!(KyleParams::new(2.0, 3.0, 4.0).unwrap().subsidy(), 3.2);
    }

    #[test]
    fn subsidy_nonnegative() {
        for (v, u, e) in [(0.5, 2.0, 0.1), (3.0, 0.0, 0.7), (0.0, 1.0, 1.0)] {
            assert!(KyleParams::new(v, u, e).unwrap().subsidy() >= 0.0);
        }
    }

    #[test]
    fn rejects_degenerate_noise() {
        assert!(matches!(
            KyleParams::new(1.0, 0.0, 0.0),
            Err(ParamError::DegenerateKyleNoise)
        ));
    }

    #[test]
    fn rejects_negative_sigma() {
        assert!(KyleParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(KyleParams::new(1.0, -1.0, 1.0).is_err());
        assert!(KyleParams::new(1.0, 1.0, f64::NAN).is_err());
    }
}
