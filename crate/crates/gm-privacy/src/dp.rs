//! Differential-privacy budget translation.
//!
//! A symmetric randomized-response mechanism on a binary direction label
//! saturates the epsilon-local-DP bound with flip probability
//! `eta = 1 / (1 + e^epsilon)`, so a disclosure budget maps directly onto
//! the channel parameter: `epsilon = 0` is a fair coin (`eta = 0.5`), and
//! the flip probability decays to zero as the budget grows.

use crate::params::ParamError;

/// Flip probability of the randomized-response channel for a local-DP
/// budget `epsilon >= 0`. Monotone decreasing, with range `(0, 0.5]`.
pub fn dp_flip_probability(epsilon: f64) -> Result<f64, ParamError> {
    if !epsilon.is_finite() || epsilon < 0.0 {
        return Err(ParamError::NegativeEpsilon(epsilon));
    }
    Ok(1.0 / (1.0 + epsilon.exp()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_anchor_points() {
        assert_eq!(dp_flip_probability(0.0).unwrap(), 0.5);
        assert!((dp_flip_probability(3f64.ln()).unwrap() - 0.25).abs() <= 1e-12);
    }

    #[test]
    fn large_budget_drives_eta_to_zero() {
        let eta = dp_flip_probability(5.0).unwrap();
        assert!((eta - 0.00669).abs() < 1e-5);
        assert!(eta > 0.0);
    }

    #[test]
    fn monotone_decreasing() {
        let mut prev = dp_flip_probability(0.0).unwrap();
        for i in 1..=1000 {
            let eta = dp_flip_probability(10.0 * i as f64 / 1000.0).unwrap();
            assert!(eta < prev, "not strictly decreasing at step {i}");
            prev = eta;
        }
    }

    #[test]
    fn stays_in_channel_domain() {
        for epsilon in [0.0, 0.1, 1.0, 10.0, 50.0] {
            let eta = dp_flip_probability(epsilon).unwrap();
            assert!(eta > 0.0 && eta <= 0.5);
        }
    }

    #[test]
    fn rejects_negative_and_non_finite() {
        assert!(matches!(
            dp_flip_probability(-1.0),
            Err(ParamError::NegativeEpsilon(_))
        ));
        assert!(dp_flip_probability(f64::NAN).is_err());
        assert!(dp_flip_probability(f64::INFINITY).is_err());
    }
}
