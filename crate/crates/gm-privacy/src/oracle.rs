//! Exhaustive-enumeration oracle for the single-round trading game.
//!
//! The round has a finite outcome space: value (2) x trader class (2) x true
//! direction (2) x observed direction (2) = 16 atoms. This module enumerates
//! all of them, derives probabilities, quotes, posteriors, and expected P&L
//! by direct summation, and serves as the ground truth the closed forms are
//! checked against.
//!
//! Independence is the point: nothing here calls the closed-form quote,
//! posterior, or welfare paths. Likelihoods come from branch probabilities,
//! quotes from Bayes over the enumerated joint distribution, expectations
//! from weighted sums over atoms. The only shared code is parameter
//! validation, which happens before a [`ModelParams`] can exist.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::params::{Direction, ModelParams, Trader, Value};
use crate::sigfig::fmt12;
use crate::welfare::WelfareBreakdown;

/// How the maker's two-sided quote is conditioned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QuoteRule {
    /// Quotes from the posterior given the *observed* (possibly flipped)
    /// direction. This is the committed rule; the maker eats the expected
    /// loss against the true flow.
    CommittedBayesian,
    /// Quotes from the posterior given the *true* direction, as a maker
    /// outside the privacy channel could. Breaks even by construction;
    /// exists to show the subsidy is forced by the coarse signal alone.
    TrueDirection,
}

impl fmt::Display for QuoteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuoteRule::CommittedBayesian => "committed-bayesian",
            QuoteRule::TrueDirection => "true-direction",
        })
    }
}

impl FromStr for QuoteRule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "committed-bayesian" => Ok(QuoteRule::CommittedBayesian),
            "true-direction" => Ok(QuoteRule::TrueDirection),
            other => Err(format!(
                "unknown quote rule '{other}' (expected committed-bayesian or true-direction)"
            )),
        }
    }
}

/// One leaf of the outcome tree: a full assignment of value, trader class,
/// true direction, and observed direction, with its probability and the
/// bilateral P&L transfer it realizes.
///
/// Informed-suboptimal branches are kept at probability zero rather than
/// pruned, so every tree has exactly 16 atoms in a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OutcomeAtom {
    pub value: Value,
    pub trader: Trader,
    pub true_direction: Direction,
    pub observed_direction: Direction,
    pub probability: f64,
    pub trader_pnl: f64,
    pub maker_pnl: f64,
}

/// The enumerated outcome space for one parameter set and quote rule.
///
/// Atoms are ordered value-major (high first), then trader (informed
/// first), then true direction (buy first), then observed direction (buy
/// first), so serialized trees are byte-stable.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeTree {
    atoms: Vec<OutcomeAtom>,
    params: ModelParams,
    rule: QuoteRule,
    ask: f64,
    bid: f64,
}

/// Failure while conditioning on an enumerated event.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OracleError {
    #[error("observed direction '{0}' has zero marginal probability")]
    ZeroMarginal(Direction),
}

const VALUES: [Value; 2] = [Value::High, Value::Low];
const TRADERS: [Trader; 2] = [Trader::Informed, Trader::Noise];
const DIRECTIONS: [Direction; 2] = [Direction::Buy, Direction::Sell];

/// P(true direction | value, trader class), from first principles: the
/// informed trader deterministically takes the profitable direction (and
/// still trades when indifferent at `s = 1`); the noise trader flips a
/// fair coin.
fn direction_prob(trader: Trader, value: Value, direction: Direction) -> f64 {
    match trader {
        Trader::Informed => {
            if direction == value.profitable_direction() {
                1.0
            } else {
                0.0
            }
        }
        Trader::Noise => 0.5,
    }
}

/// P(observed | true) through the flip channel.
fn channel_prob(eta: f64, true_direction: Direction, observed: Direction) -> f64 {
    if observed == true_direction {
        1.0 - eta
    } else {
        eta
    }
}

fn value_index(value: Value) -> usize {
    match value {
        Value::High => 0,
        Value::Low => 1,
    }
}

fn direction_index(direction: Direction) -> usize {
    match direction {
        Direction::Buy => 0,
        Direction::Sell => 1,
    }
}

/// Builds the full 16-atom outcome tree for `params` under `rule`.
///
/// Quotes are derived internally: the joint distribution of (value,
/// conditioning direction) is accumulated over branches, and ask/bid are
/// the Bayes posterior means given an observed (or true) buy/sell. Trades
/// always execute on the trader's true direction; the rule only changes
/// which signal prices them.
pub fn enumerate(params: ModelParams, rule: QuoteRule) -> OutcomeTree {
    let mu = params.mu();
    let eta = params.eta();

    // Joint P(value, direction) for both candidate conditioning signals.
    let mut joint_observed = [[0.0f64; 2]; 2];
    let mut joint_true = [[0.0f64; 2]; 2];
    for value in VALUES {
        for trader in TRADERS {
            let class_prob = match trader {
                Trader::Informed => mu,
                Trader::Noise => 1.0 - mu,
            };
            for true_direction in DIRECTIONS {
                let branch =
                    0.5 * class_prob * direction_prob(trader, value, true_direction);
                joint_true[value_index(value)][direction_index(true_direction)] += branch;
                for observed in DIRECTIONS {
                    joint_observed[value_index(value)][direction_index(observed)] +=
                        branch * channel_prob(eta, true_direction, observed);
                }
            }
        }
    }

    let joint = match rule {
        QuoteRule::CommittedBayesian => &joint_observed,
        QuoteRule::TrueDirection => &joint_true,
    };
    // Posterior mean of v given the conditioning direction. The symmetric
    // prior makes both marginals 1/2, so the divisions are always defined.
    let posterior_mean = |direction: Direction| {
        let di = direction_index(direction);
        let joint_high = joint[0][di];
        let joint_low = joint[1][di];
        (params.v_high() * joint_high + params.v_low() * joint_low) / (joint_high + joint_low)
    };
    let ask = posterior_mean(Direction::Buy);
    let bid = posterior_mean(Direction::Sell);

    let mut atoms = Vec::with_capacity(16);
    for value in VALUES {
        for trader in TRADERS {
            let class_prob = match trader {
                Trader::Informed => mu,
                Trader::Noise => 1.0 - mu,
            };
            for true_direction in DIRECTIONS {
                for observed in DIRECTIONS {
                    let probability = 0.5
                        * class_prob
                        * direction_prob(trader, value, true_direction)
                        * channel_prob(eta, true_direction, observed);
                    let trader_pnl = match true_direction {
                        Direction::Buy => params.price_of(value) - ask,
                        Direction::Sell => bid - params.price_of(value),
                    };
                    atoms.push(OutcomeAtom {
                        value,
                        trader,
                        true_direction,
                        observed_direction: observed,
                        probability,
                        trader_pnl,
                        maker_pnl: -trader_pnl,
                    });
                }
            }
        }
    }

    OutcomeTree {
        atoms,
        params,
        rule,
        ask,
        bid,
    }
}

impl OutcomeTree {
    pub fn atoms(&self) -> &[OutcomeAtom] {
        &self.atoms
    }

    pub fn params(&self) -> ModelParams {
        self.params
    }

    pub fn rule(&self) -> QuoteRule {
        self.rule
    }

    /// Ask derived by Bayes over the enumerated joint distribution.
    pub fn ask(&self) -> f64 {
        self.ask
    }

    pub fn bid(&self) -> f64 {
        self.bid
    }

    /// Tree-implied spread.
    pub fn spread(&self) -> f64 {
        self.ask - self.bid
    }

    /// Sum of atom probabilities; 1 up to rounding.
    pub fn total_probability(&self) -> f64 {
        self.atoms.iter().map(|a| a.probability).sum()
    }

    /// Marginal probability of observing `direction`; 1/2 under the
    /// symmetric prior.
    pub fn observed_marginal(&self, direction: Direction) -> f64 {
        self.atoms
            .iter()
            .filter(|a| a.observed_direction == direction)
            .map(|a| a.probability)
            .sum()
    }

    /// Number of atoms with strictly positive probability.
    pub fn positive_atom_count(&self) -> usize {
        self.atoms.iter().filter(|a| a.probability > 0.0).count()
    }

    /// P(value = high | observed direction), by Bayes over atoms.
    pub fn posterior_high(&self, observed: Direction) -> Result<f64, OracleError> {
        let marginal = self.observed_marginal(observed);
        if marginal <= 0.0 {
            return Err(OracleError::ZeroMarginal(observed));
        }
        let joint_high: f64 = self
            .atoms
            .iter()
            .filter(|a| a.observed_direction == observed && a.value == Value::High)
            .map(|a| a.probability)
            .sum();
        Ok(joint_high / marginal)
    }

    /// Expected per-trade P&L by agent class, by weighted summation.
    ///
    /// Trader-class expectations condition on the class arriving, using the
    /// branch weights with the class-arrival factor removed. That keeps the
    /// class means defined at the `mu = 0` and `mu = 1` endpoints, where the
    /// unconditional class mass vanishes; the weights within a class sum to
    /// one by construction. The maker expectation is unconditional.
    pub fn welfare(&self) -> WelfareBreakdown {
        let eta = self.params.eta();
        let mut pi_informed = 0.0;
        let mut pi_noise = 0.0;
        let mut pi_maker = 0.0;
        for atom in &self.atoms {
            let class_weight = 0.5
                * direction_prob(atom.trader, atom.value, atom.true_direction)
                * channel_prob(eta, atom.true_direction, atom.observed_direction);
            match atom.trader {
                Trader::Informed => pi_informed += class_weight * atom.trader_pnl,
                Trader::Noise => pi_noise += class_weight * atom.trader_pnl,
            }
            pi_maker += atom.probability * atom.maker_pnl;
        }
        let subsidy = pi_maker.abs();
        WelfareBreakdown {
            pi_informed,
            pi_noise,
            pi_maker,
            subsidy,
            break_even_fee: subsidy,
        }
    }

    /// Comma-separated dump of the 16 atoms, header first, in enumeration
    /// order.
    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("value,trader,true_dir,obs_dir,probability,trader_pnl,maker_pnl\n");
        for atom in &self.atoms {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                atom.value,
                atom.trader,
                atom.true_direction,
                atom.observed_direction,
                fmt12(atom.probability),
                fmt12(atom.trader_pnl),
                fmt12(atom.maker_pnl),
            ));
        }
        out
    }
}

/// Enumerated maker loss under the committed rule plus the closed-form
/// per-trade subsidy `mu * eta * delta`; zero (to rounding) exactly when
/// the quoted subsidy is the full cost of pricing on the flipped signal.
pub fn subsidy_gap(params: ModelParams) -> f64 {
    let tree = enumerate(params, QuoteRule::CommittedBayesian);
    tree.welfare().pi_maker + params.mu() * params.eta() * params.delta()
}
