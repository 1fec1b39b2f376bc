//! Sequential trading with a privacy-noised direction signal.
//!
//! A market maker quotes a two-state asset against a mix of informed and
//! noise traders, but observes each trade's direction only through a binary
//! channel that flips it with probability `eta` — the standard model of a
//! privacy mechanism (e.g. randomized response under a local-DP budget)
//! acting on the direction label. The maker commits to pricing at the
//! Bayesian posterior given the noisy signal.
//!
//! Everything about the resulting equilibrium is closed-form. With signal
//! strength `s = mu * (1 - 2 * eta)` and value range `delta`:
//!
//! - spread: `s * delta`, falling linearly from the no-noise `mu * delta`
//!   to zero at a fair-coin channel;
//! - per-trade expectations: informed `(1 - s) * delta / 2`, noise
//!   `-s * delta / 2`, maker `-mu * eta * delta`, zero-sum across classes;
//! - the maker's loss `mu * eta * delta` is the *privacy subsidy* paid to
//!   traders, and the flat per-trade fee that restores break-even; charged,
//!   it makes the noise level exactly welfare-neutral for both classes.
//!
//! The crate pairs the closed forms with two independent verification
//! routes: [`oracle`] enumerates the full 16-atom outcome tree and
//! recomputes every quantity by summation, and [`sim`] is a seeded,
//! bit-reproducible Monte Carlo of the round-by-round game. [`dp`] maps a
//! local-DP budget onto the channel, and [`kyle`] evaluates the analogous
//! maker-loss formula for a Gaussian market for comparison.
//!
//! # Example
//!
//! ```
//! use gm_privacy::ModelParams;
//!
//! let params = ModelParams::new(0.5, 0.25, 0.0, 1.0)?;
//! let quotes = params.quotes();
//! assert_eq!(quotes.spread, 0.25);
//!
//! let welfare = params.welfare();
//! assert_eq!(welfare.subsidy, 0.125);
//! assert_eq!(welfare.break_even_fee, params.break_even_fee());
//! # Ok::<(), gm_privacy::ParamError>(())
//! ```
//!
//! The `examples/` directory has one runnable program per capability; the
//! `gm-privacy` binary exposes the same machinery as subcommands.

pub mod dp;
pub mod kyle;
pub mod oracle;
pub mod params;
pub mod quotes;
pub mod report;
pub mod sigfig;
pub mod sim;
pub mod welfare;

pub use dp::dp_flip_probability;
pub use kyle::KyleParams;
pub use oracle::{enumerate, subsidy_gap, OracleError, OutcomeAtom, OutcomeTree, QuoteRule};
pub use params::{Direction, ModelParams, ParamError, Trader, Value};
pub use quotes::QuoteSet;
pub use report::{
    sweep_csv, sweep_rows, table_csv, table_rows, ReportError, SweepRow, SweepSpec, TableRow,
};
pub use sim::{
    convergence_report, simulate, ConvergenceCheck, ConvergenceReport, SimConfig, SimError,
    SimResult, ValueMode,
};
pub use welfare::{NetOfFees, WelfareBreakdown};
