//! Tabulation and parameter-sweep support shared by the CLI and examples.
//!
//! Machine output is CSV with a header row, UTF-8, LF line endings, `.`
//! decimal separator, and all numbers printed at 12 significant digits via
//! [`crate::sigfig`]. Row order is deterministic, so repeated runs with the
//! same inputs are byte-identical.

use serde::Serialize;

use crate::dp::dp_flip_probability;
use crate::params::{ModelParams, ParamError};
use crate::sigfig::fmt12;

/// Grid or spec validation failure.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ReportError {
    #[error("empty grid: mu-list must contain at least one value")]
    EmptyMuGrid,
    #[error("empty grid: provide eta-list or epsilon-list")]
    EmptyChannelGrid,
    #[error("eta-list and epsilon-list are mutually exclusive")]
    ConflictingChannelGrids,
    #[error(transparent)]
    Param(#[from] ParamError),
}

/// Flip probabilities tabulated by the reference table: no noise, light,
/// quarter, heavy, and the perfect-privacy fair coin.
pub const TABLE_ETAS: [f64; 5] = [0.0, 0.1, 0.25, 0.4, 0.5];

/// One row of the eta table, in units of the value range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub eta: f64,
    /// `mu * (1 - 2 * eta)`.
    pub spread_over_delta: f64,
    /// `mu * eta`; also the break-even fee floor over delta.
    pub subsidy_over_delta: f64,
}

/// The five-row eta table. With `mu` given the entries are numeric; without
/// it they are the coefficients of `mu` (equivalently, the values at
/// `mu = 1`).
pub fn table_rows(mu: Option<f64>) -> Result<Vec<TableRow>, ParamError> {
    let mu = mu.unwrap_or(1.0);
    TABLE_ETAS
        .iter()
        .map(|&eta| {
            // Delta-normalized values are the absolute ones on a unit range.
            let params = ModelParams::new(mu, eta, 0.0, 1.0)?;
            Ok(TableRow {
                eta,
                spread_over_delta: params.quotes().spread,
                subsidy_over_delta: params.welfare().subsidy,
            })
        })
        .collect()
}

/// CSV rendering of the eta table.
pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("eta,spread_over_delta,subsidy_over_delta\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            fmt12(row.eta),
            fmt12(row.spread_over_delta),
            fmt12(row.subsidy_over_delta),
        ));
    }
    out
}

/// A rectangular sweep over `mu` and the channel parameter.
///
/// The channel axis is either a list of flip probabilities or a list of DP
/// budgets mapped through [`dp_flip_probability`] — exactly one of the two,
/// so every row has one well-defined channel.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub mu_values: Vec<f64>,
    pub eta_values: Vec<f64>,
    pub epsilon_values: Vec<f64>,
    pub v_low: f64,
    pub v_high: f64,
    /// Report price-unit columns divided by `delta`.
    pub normalize_by_delta: bool,
}

/// One sweep grid point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub mu: f64,
    pub eta: f64,
    /// The DP budget this row was derived from, when the sweep is
    /// epsilon-driven.
    pub epsilon: Option<f64>,
    pub spread: f64,
    pub subsidy: f64,
    pub fee_floor: f64,
    pub pi_informed: f64,
    pub pi_noise: f64,
    pub pi_maker: f64,
}

/// Evaluates the closed forms on the grid, row-major with `mu` outer and
/// the channel parameter inner.
pub fn sweep_rows(spec: &SweepSpec) -> Result<Vec<SweepRow>, ReportError> {
    if spec.mu_values.is_empty() {
        return Err(ReportError::EmptyMuGrid);
    }
    let channel: Vec<(f64, Option<f64>)> = match (
        spec.eta_values.is_empty(),
        spec.epsilon_values.is_empty(),
    ) {
        (true, true) => return Err(ReportError::EmptyChannelGrid),
        (false, false) => return Err(ReportError::ConflictingChannelGrids),
        (false, true) => spec.eta_values.iter().map(|&eta| (eta, None)).collect(),
        (true, false) => spec
            .epsilon_values
            .iter()
            .map(|&epsilon| Ok((dp_flip_probability(epsilon)?, Some(epsilon))))
            .collect::<Result<_, ParamError>>()?,
    };

    let mut rows = Vec::with_capacity(spec.mu_values.len() * channel.len());
    for &mu in &spec.mu_values {
        for &(eta, epsilon) in &channel {
            let params = ModelParams::new(mu, eta, spec.v_low, spec.v_high)?;
            let quotes = params.quotes();
            let welfare = params.welfare();
            let scale = if spec.normalize_by_delta {
                1.0 / params.delta()
            } else {
                1.0
            };
            rows.push(SweepRow {
                mu,
                eta,
                epsilon,
                spread: quotes.spread * scale,
                subsidy: welfare.subsidy * scale,
                fee_floor: welfare.break_even_fee * scale,
                pi_informed: welfare.pi_informed * scale,
                pi_noise: welfare.pi_noise * scale,
                pi_maker: welfare.pi_maker * scale,
            });
        }
    }
    Ok(rows)
}

/// CSV rendering of a sweep; the epsilon column is empty for eta-driven
/// sweeps.
pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(
        "mu,eta,epsilon,spread,subsidy,fee_floor,pi_informed,pi_noise,pi_maker\n",
    );
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            fmt12(row.mu),
            fmt12(row.eta),
            row.epsilon.map(fmt12).unwrap_or_default(),
            fmt12(row.spread),
            fmt12(row.subsidy),
            fmt12(row.fee_floor),
            fmt12(row.pi_informed),
            fmt12(row.pi_noise),
            fmt12(row.pi_maker),
        ));
    }
    out
}
