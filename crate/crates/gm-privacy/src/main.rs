//! Command-line front end: single-point queries, table and sweep emission,
//! Monte Carlo runs, DP budget translation, and oracle dumps.
//!
//! All computation lives in the library; this binary parses flags, merges
//! an optional `key = value` config file (command-line flags win), renders
//! one of the three output formats, and sets the exit code.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gm_privacy::sigfig::{fmt12, round_sig, MACHINE_DIGITS};
use gm_privacy::{
    convergence_report, dp_flip_probability, enumerate, sweep_csv, sweep_rows, table_csv,
    table_rows, ModelParams, OutcomeTree, QuoteRule, SimConfig, SweepSpec, ValueMode,
};

#[derive(Debug, Parser)]
#[command(
    name = "gm-privacy",
    version,
    about = "Quotes, welfare, and the privacy subsidy for sequential trading \
             under a direction-flip channel",
    after_help = "Any long flag may also be supplied as a `key = value` line in the \
                  --config file; explicit flags take precedence. Environment variables \
                  are not consulted."
)]
struct Cli {
    /// Config file with `key = value` lines supplying flag defaults.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Output format for machine-readable commands.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,

    /// Write output to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Informed-trader fraction in [0, 1].
    #[arg(long, global = true, allow_negative_numbers = true)]
    mu: Option<f64>,

    /// Direction flip probability in [0, 0.5].
    #[arg(long, global = true, allow_negative_numbers = true)]
    eta: Option<f64>,

    /// Local-DP budget; an alternative to --eta via eta = 1/(1+e^epsilon).
    #[arg(long, global = true, allow_negative_numbers = true)]
    epsilon: Option<f64>,

    /// Low asset value (default 0).
    #[arg(long, global = true, allow_negative_numbers = true)]
    v_low: Option<f64>,

    /// High asset value (default 1).
    #[arg(long, global = true, allow_negative_numbers = true)]
    v_high: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the committed two-sided quote and signal strength.
    Quote,
    /// Print the per-trade welfare decomposition, subsidy, and fee floor.
    Welfare {
        /// Flat per-trade fee; adds net-of-fee rows to the report.
        #[arg(long, allow_negative_numbers = true)]
        fee: Option<f64>,
    },
    /// Emit the five-row eta table of spread and subsidy in units of delta.
    Table,
    /// Evaluate the closed forms on a (mu, channel) grid and emit CSV.
    Sweep {
        /// Comma-separated informed fractions.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        mu_list: Vec<f64>,
        /// Comma-separated flip probabilities (exclusive with --epsilon-list).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        eta_list: Vec<f64>,
        /// Comma-separated DP budgets (exclusive with --eta-list).
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        epsilon_list: Vec<f64>,
        /// Report price columns divided by delta.
        #[arg(long)]
        normalize: bool,
    },
    /// Run the seeded Monte Carlo and compare against the closed forms.
    Simulate {
        /// Number of rounds.
        #[arg(long)]
        rounds: Option<u64>,
        /// RNG seed; runs are bit-reproducible per seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Flat per-trade fee.
        #[arg(long, allow_negative_numbers = true)]
        fee: Option<f64>,
        /// Value draw policy.
        #[arg(long)]
        value_mode: Option<ValueMode>,
        /// Exit nonzero if any |z| exceeds this; 0 disables the gate.
        #[arg(long, allow_negative_numbers = true)]
        z_max: Option<f64>,
    },
    /// Translate a DP budget into the implied channel and market quantities.
    Dp,
    /// Dump the enumerated outcome tree and compare it to the closed forms.
    Oracle {
        /// Which signal the maker's quote conditions on.
        #[arg(long)]
        quote_rule: Option<QuoteRule>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// Keys accepted in a config file; one per long flag.
const CONFIG_KEYS: &[&str] = &[
    "mu",
    "eta",
    "epsilon",
    "v-low",
    "v-high",
    "format",
    "out",
    "fee",
    "rounds",
    "seed",
    "value-mode",
    "z-max",
    "mu-list",
    "eta-list",
    "epsilon-list",
    "normalize",
    "quote-rule",
];

/// Parsed config file contents.
#[derive(Debug, Default)]
struct FileSettings {
    map: HashMap<String, String>,
}

impl FileSettings {
    fn load(path: &PathBuf) -> Result<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read --config file {}", path.display()))?;
        let mut map = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                anyhow!(
                    "{}:{}: expected `key = value`, got '{line}'",
                    path.display(),
                    lineno + 1
                )
            })?;
            let key = key.trim().to_string();
            if !CONFIG_KEYS.contains(&key.as_str()) {
                bail!(
                    "{}:{}: unknown config key '{key}'",
                    path.display(),
                    lineno + 1
                );
            }
            map.insert(key, value.trim().to_string());
        }
        Ok(FileSettings { map })
    }

    fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        match self.map.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|e| anyhow!("config key '{key}': {e}")),
        }
    }

    fn get_list(&self, key: &str) -> Result<Vec<f64>> {
        match self.map.get(key) {
            None => Ok(Vec::new()),
            Some(raw) => raw
                .split(',')
                .map(|piece| {
                    piece
                        .trim()
                        .parse::<f64>()
                        .map_err(|e| anyhow!("config key '{key}': {e}"))
                })
                .collect(),
        }
    }
}

/// Common model inputs after flag/config merging.
struct Resolved {
    settings: FileSettings,
    format: OutputFormat,
    out: Option<PathBuf>,
    mu: Option<f64>,
    eta: Option<f64>,
    epsilon: Option<f64>,
    v_low: f64,
    v_high: f64,
}

impl Resolved {
    fn from_cli(cli: &Cli) -> Result<Self> {
        let settings = match &cli.config {
            Some(path) => FileSettings::load(path)?,
            None => FileSettings::default(),
        };
        let format = match cli.format {
            Some(f) => f,
            None => match settings.map.get("format").map(String::as_str) {
                None => OutputFormat::Text,
                Some("text") => OutputFormat::Text,
                Some("csv") => OutputFormat::Csv,
                Some("json") => OutputFormat::Json,
                Some(other) => bail!("config key 'format': unknown format '{other}'"),
            },
        };
        let out = match &cli.out {
            Some(p) => Some(p.clone()),
            None => settings.map.get("out").map(PathBuf::from),
        };
        Ok(Resolved {
            format,
            out,
            mu: merge(cli.mu, settings.get("mu")?),
            eta: merge(cli.eta, settings.get("eta")?),
            epsilon: merge(cli.epsilon, settings.get("epsilon")?),
            v_low: merge(cli.v_low, settings.get("v-low")?).unwrap_or(0.0),
            v_high: merge(cli.v_high, settings.get("v-high")?).unwrap_or(1.0),
            settings,
        })
    }

    fn require_mu(&self) -> Result<f64> {
        self.mu
            .ok_or_else(|| anyhow!("missing required flag --mu"))
    }

    /// The flip probability, taken from --eta or mapped from --epsilon.
    fn require_eta(&self) -> Result<f64> {
        match (self.eta, self.epsilon) {
            (Some(_), Some(_)) => bail!("--eta and --epsilon are mutually exclusive"),
            (Some(eta), None) => Ok(eta),
            (None, Some(epsilon)) => Ok(dp_flip_probability(epsilon)?),
            (None, None) => bail!("missing required flag --eta (or --epsilon)"),
        }
    }

    fn model_params(&self) -> Result<ModelParams> {
        Ok(ModelParams::new(
            self.require_mu()?,
            self.require_eta()?,
            self.v_low,
            self.v_high,
        )?)
    }

    /// Writes `content` to --out or stdout.
    fn emit(&self, content: &str) -> Result<()> {
        match &self.out {
            Some(path) => fs::write(path, content)
                .with_context(|| format!("cannot write --out file {}", path.display())),
            None => {
                print!("{content}");
                Ok(())
            }
        }
    }
}

fn merge<T>(flag: Option<T>, config: Option<T>) -> Option<T> {
    flag.or(config)
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    let resolved = Resolved::from_cli(&cli)?;
    match &cli.command {
        Command::Quote => cmd_quote(&resolved),
        Command::Welfare { fee } => cmd_welfare(&resolved, *fee),
        Command::Table => cmd_table(&resolved),
        Command::Sweep {
            mu_list,
            eta_list,
            epsilon_list,
            normalize,
        } => cmd_sweep(&resolved, mu_list, eta_list, epsilon_list, *normalize),
        Command::Simulate {
            rounds,
            seed,
            fee,
            value_mode,
            z_max,
        } => cmd_simulate(&resolved, *rounds, *seed, *fee, *value_mode, *z_max),
        Command::Dp => cmd_dp(&resolved),
        Command::Oracle { quote_rule } => cmd_oracle(&resolved, *quote_rule),
    }
}

/// Serializes with every float rounded to the machine digit count, so JSON
/// agrees with the CSV and text formats.
fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut json = serde_json::to_value(value).context("serialize report")?;
    round_json_numbers(&mut json);
    Ok(format!("{:#}\n", json))
}

fn round_json_numbers(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Number(n) => {
            if let Some(x) = n.as_f64() {
                // Integral JSON numbers (counts, seeds) pass through as-is.
                if n.as_u64().is_none() && n.as_i64().is_none() {
                    if let Some(rounded) =
                        serde_json::Number::from_f64(round_sig(x, MACHINE_DIGITS))
                    {
                        *n = rounded;
                    }
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(round_json_numbers),
        serde_json::Value::Object(map) => map.values_mut().for_each(round_json_numbers),
        _ => {}
    }
}

fn key_value_text(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0) + 2;
    let mut out = String::new();
    for (key, value) in pairs {
        let _ = writeln!(out, "{key:<width$}{value}");
    }
    out
}

fn key_value_csv(pairs: &[(&str, String)]) -> String {
    let header: Vec<&str> = pairs.iter().map(|(k, _)| *k).collect();
    let values: Vec<&str> = pairs.iter().map(|(_, v)| v.as_str()).collect();
    format!("{}\n{}\n", header.join(","), values.join(","))
}

#[derive(Serialize)]
struct QuoteReport {
    mu: f64,
    eta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon: Option<f64>,
    v_low: f64,
    v_high: f64,
    signal_strength: f64,
    ask: f64,
    bid: f64,
    mid: f64,
    spread: f64,
}

fn cmd_quote(resolved: &Resolved) -> Result<()> {
    let params = resolved.model_params()?;
    let quotes = params.quotes();
    let report = QuoteReport {
        mu: params.mu(),
        eta: params.eta(),
        epsilon: resolved.epsilon,
        v_low: params.v_low(),
        v_high: params.v_high(),
        signal_strength: params.signal_strength(),
        ask: quotes.ask,
        bid: quotes.bid,
        mid: quotes.mid,
        spread: quotes.spread,
    };
    let output = match resolved.format {
        OutputFormat::Json => to_json(&report)?,
        format => {
            let mut pairs = vec![
                ("mu", fmt12(report.mu)),
                ("eta", fmt12(report.eta)),
                ("v_low", fmt12(report.v_low)),
                ("v_high", fmt12(report.v_high)),
                ("signal_strength", fmt12(report.signal_strength)),
                ("ask", fmt12(report.ask)),
                ("bid", fmt12(report.bid)),
                ("mid", fmt12(report.mid)),
                ("spread", fmt12(report.spread)),
            ];
            if let Some(epsilon) = report.epsilon {
                pairs.insert(2, ("epsilon", fmt12(epsilon)));
            }
            match format {
                OutputFormat::Text => key_value_text(&pairs),
                _ => key_value_csv(&pairs),
            }
        }
    };
    resolved.emit(&output)
}

#[derive(Serialize)]
struct WelfareReport {
    mu: f64,
    eta: f64,
    v_low: f64,
    v_high: f64,
    pi_informed: f64,
    pi_noise: f64,
    pi_maker: f64,
    subsidy: f64,
    break_even_fee: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    fee: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    net_informed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    net_noise: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    maker_plus_fee: Option<f64>,
}

fn cmd_welfare(resolved: &Resolved, fee: Option<f64>) -> Result<()> {
    let fee = merge(fee, resolved.settings.get("fee")?);
    if let Some(fee) = fee {
        if !fee.is_finite() || fee < 0.0 {
            bail!("fee must be nonnegative and finite, got {fee}");
        }
    }
    let params = resolved.model_params()?;
    let welfare = params.welfare();
    let report = WelfareReport {
        mu: params.mu(),
        eta: params.eta(),
        v_low: params.v_low(),
        v_high: params.v_high(),
        pi_informed: welfare.pi_informed,
        pi_noise: welfare.pi_noise,
        pi_maker: welfare.pi_maker,
        subsidy: welfare.subsidy,
        break_even_fee: welfare.break_even_fee,
        fee,
        net_informed: fee.map(|f| welfare.pi_informed - f),
        net_noise: fee.map(|f| welfare.pi_noise - f),
        maker_plus_fee: fee.map(|f| welfare.pi_maker + f),
    };
    let output = match resolved.format {
        OutputFormat::Json => to_json(&report)?,
        format => {
            let mut pairs = vec![
                ("mu", fmt12(report.mu)),
                ("eta", fmt12(report.eta)),
                ("v_low", fmt12(report.v_low)),
                ("v_high", fmt12(report.v_high)),
                ("pi_informed", fmt12(report.pi_informed)),
                ("pi_noise", fmt12(report.pi_noise)),
                ("pi_maker", fmt12(report.pi_maker)),
                ("subsidy", fmt12(report.subsidy)),
                ("break_even_fee", fmt12(report.break_even_fee)),
            ];
            if let Some(f) = report.fee {
                pairs.push(("fee", fmt12(f)));
                pairs.push(("net_informed", fmt12(report.net_informed.unwrap())));
                pairs.push(("net_noise", fmt12(report.net_noise.unwrap())));
                pairs.push(("maker_plus_fee", fmt12(report.maker_plus_fee.unwrap())));
            }
            match format {
                OutputFormat::Text => key_value_text(&pairs),
                _ => key_value_csv(&pairs),
            }
        }
    };
    resolved.emit(&output)
}

fn cmd_table(resolved: &Resolved) -> Result<()> {
    // The table is delta-normalized by definition, so the value flags are
    // irrelevant here; mu is optional and its absence means coefficients.
    let rows = table_rows(resolved.mu)?;
    let output = match resolved.format {
        OutputFormat::Json => to_json(&rows)?,
        _ => table_csv(&rows),
    };
    resolved.emit(&output)
}

fn cmd_sweep(
    resolved: &Resolved,
    mu_list: &[f64],
    eta_list: &[f64],
    epsilon_list: &[f64],
    normalize: bool,
) -> Result<()> {
    let settings = &resolved.settings;
    let spec = SweepSpec {
        mu_values: if mu_list.is_empty() {
            settings.get_list("mu-list")?
        } else {
            mu_list.to_vec()
        },
        eta_values: if eta_list.is_empty() {
            settings.get_list("eta-list")?
        } else {
            eta_list.to_vec()
        },
        epsilon_values: if epsilon_list.is_empty() {
            settings.get_list("epsilon-list")?
        } else {
            epsilon_list.to_vec()
        },
        v_low: resolved.v_low,
        v_high: resolved.v_high,
        normalize_by_delta: normalize || settings.get("normalize")?.unwrap_or(false),
    };
    let rows = sweep_rows(&spec)?;
    let output = match resolved.format {
        OutputFormat::Json => to_json(&rows)?,
        _ => sweep_csv(&rows),
    };
    resolved.emit(&output)
}

fn cmd_simulate(
    resolved: &Resolved,
    rounds: Option<u64>,
    seed: Option<u64>,
    fee: Option<f64>,
    value_mode: Option<ValueMode>,
    z_max: Option<f64>,
) -> Result<()> {
    let settings = &resolved.settings;
    let config = SimConfig {
        params: resolved.model_params()?,
        rounds: merge(rounds, settings.get("rounds")?)
            .ok_or_else(|| anyhow!("missing required flag --rounds"))?,
        seed: merge(seed, settings.get("seed")?).unwrap_or(0),
        fee: merge(fee, settings.get("fee")?).unwrap_or(0.0),
        value_mode: merge(value_mode, settings.get("value-mode")?).unwrap_or_default(),
    };
    let z_max = merge(z_max, settings.get("z-max")?).unwrap_or(4.0);
    if !z_max.is_finite() || z_max < 0.0 {
        bail!("z-max must be nonnegative and finite, got {z_max}");
    }

    let report = convergence_report(&config)?;
    let output = match resolved.format {
        OutputFormat::Json => to_json(&report)?,
        OutputFormat::Csv => {
            let mut out = String::from("quantity,realized,target,gap,stderr,z,samples\n");
            for check in &report.checks {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    check.quantity,
                    fmt12(check.realized),
                    fmt12(check.target),
                    fmt12(check.gap),
                    fmt12(check.stderr),
                    fmt12(check.z),
                    check.samples
                );
            }
            out
        }
        OutputFormat::Text => {
            let r = &report.result;
            let mut out = key_value_text(&[
                ("rounds", r.rounds.to_string()),
                ("seed", r.seed.to_string()),
                ("fee", fmt12(r.fee)),
                ("value_mode", r.value_mode.to_string()),
                ("informed_count", r.informed_count.to_string()),
                ("noise_count", r.noise_count.to_string()),
                ("observed_buy_frequency", fmt12(r.observed_buy_frequency)),
                ("fee_revenue_per_trade", fmt12(r.fee_revenue_per_trade)),
            ]);
            let _ = writeln!(
                out,
                "\n{:<24}{:>20}{:>20}{:>13}{:>13}{:>9}",
                "quantity", "realized", "target", "gap", "stderr", "z"
            );
            for check in &report.checks {
                let _ = writeln!(
                    out,
                    "{:<24}{:>20}{:>20}{:>13}{:>13}{:>9}",
                    check.quantity,
                    fmt12(check.realized),
                    fmt12(check.target),
                    format_compact(check.gap),
                    format_compact(check.stderr),
                    format!("{:.2}", check.z),
                );
            }
            let _ = writeln!(out, "\nmax |z| = {:.3}", report.max_abs_z);
            out
        }
    };
    resolved.emit(&output)?;

    if z_max > 0.0 && (report.max_abs_z.is_nan() || report.max_abs_z > z_max) {
        bail!(
            "convergence gate failed: max |z| = {:.3} exceeds --z-max {}",
            report.max_abs_z,
            z_max
        );
    }
    Ok(())
}

/// Short scientific form for small diagnostics columns in text output.
fn format_compact(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x:.3e}")
    }
}

#[derive(Serialize)]
struct DpReport {
    epsilon: f64,
    eta: f64,
    mu: f64,
    v_low: f64,
    v_high: f64,
    spread: f64,
    subsidy: f64,
    fee_floor: f64,
}

fn cmd_dp(resolved: &Resolved) -> Result<()> {
    let epsilon = resolved
        .epsilon
        .ok_or_else(|| anyhow!("missing required flag --epsilon"))?;
    let eta = dp_flip_probability(epsilon)?;
    let params = ModelParams::new(resolved.require_mu()?, eta, resolved.v_low, resolved.v_high)?;
    let welfare = params.welfare();
    let report = DpReport {
        epsilon,
        eta,
        mu: params.mu(),
        v_low: params.v_low(),
        v_high: params.v_high(),
        spread: params.quotes().spread,
        subsidy: welfare.subsidy,
        fee_floor: welfare.break_even_fee,
    };
    let output = match resolved.format {
        OutputFormat::Json => to_json(&report)?,
        format => {
            let pairs = vec![
                ("epsilon", fmt12(report.epsilon)),
                ("eta", fmt12(report.eta)),
                ("mu", fmt12(report.mu)),
                ("v_low", fmt12(report.v_low)),
                ("v_high", fmt12(report.v_high)),
                ("spread", fmt12(report.spread)),
                ("subsidy", fmt12(report.subsidy)),
                ("fee_floor", fmt12(report.fee_floor)),
            ];
            match format {
                OutputFormat::Text => key_value_text(&pairs),
                _ => key_value_csv(&pairs),
            }
        }
    };
    resolved.emit(&output)
}

/// Oracle-vs-closed-form comparison row. Targets depend on the quote rule:
/// the committed rule is checked against the noisy-signal closed forms, the
/// true-direction rule against the no-noise quote and maker break-even.
#[derive(Serialize)]
struct OracleCheck {
    quantity: &'static str,
    oracle: f64,
    closed_form: f64,
    gap: f64,
}

#[derive(Serialize)]
struct OracleReport {
    rule: String,
    ask: f64,
    bid: f64,
    spread: f64,
    total_probability: f64,
    positive_atoms: usize,
    checks: Vec<OracleCheck>,
    max_abs_gap: f64,
    atoms_csv: String,
}

fn oracle_checks(tree: &OutcomeTree) -> Vec<OracleCheck> {
    let params = tree.params();
    let oracle_welfare = tree.welfare();
    let mut checks = Vec::new();
    let mut push = |quantity, oracle: f64, closed_form: f64| {
        checks.push(OracleCheck {
            quantity,
            oracle,
            closed_form,
            gap: oracle - closed_form,
        });
    };

    match tree.rule() {
        QuoteRule::CommittedBayesian => {
            let closed = params.welfare();
            push("spread", tree.spread(), params.quotes().spread);
            push("pi_informed", oracle_welfare.pi_informed, closed.pi_informed);
            push("pi_noise", oracle_welfare.pi_noise, closed.pi_noise);
            push("pi_maker", oracle_welfare.pi_maker, closed.pi_maker);
        }
        QuoteRule::TrueDirection => {
            // A maker on the true signal posts the no-noise quote and
            // breaks even; traders get their no-noise expectations.
            let net = params.net_of_fees();
            let competitive_spread = 2.0 * (params.competitive_ask() - params.mid());
            push("spread", tree.spread(), competitive_spread);
            push("pi_informed", oracle_welfare.pi_informed, net.informed);
            push("pi_noise", oracle_welfare.pi_noise, net.noise);
            push("pi_maker", oracle_welfare.pi_maker, 0.0);
        }
    }
    // Posterior checks condition on the observed signal under either rule:
    // the tree's probability structure does not depend on pricing.
    for direction in [gm_privacy::Direction::Buy, gm_privacy::Direction::Sell] {
        let oracle_posterior = tree
            .posterior_high(direction)
            .expect("symmetric prior keeps both marginals positive");
        let name = match direction {
            gm_privacy::Direction::Buy => "posterior_high_given_buy",
            gm_privacy::Direction::Sell => "posterior_high_given_sell",
        };
        push(name, oracle_posterior, params.posterior_high(direction));
    }
    checks
}

fn cmd_oracle(resolved: &Resolved, quote_rule: Option<QuoteRule>) -> Result<()> {
    let rule = match quote_rule {
        Some(rule) => rule,
        None => resolved
            .settings
            .get("quote-rule")?
            .unwrap_or(QuoteRule::CommittedBayesian),
    };
    let params = resolved.model_params()?;
    let tree = enumerate(params, rule);
    let checks = oracle_checks(&tree);
    let max_abs_gap = checks.iter().map(|c| c.gap.abs()).fold(0.0, f64::max);

    let output = match resolved.format {
        OutputFormat::Json => {
            let report = OracleReport {
                rule: rule.to_string(),
                ask: tree.ask(),
                bid: tree.bid(),
                spread: tree.spread(),
                total_probability: tree.total_probability(),
                positive_atoms: tree.positive_atom_count(),
                checks,
                max_abs_gap,
                atoms_csv: tree.to_csv(),
            };
            to_json(&report)?
        }
        _ => {
            let mut out = tree.to_csv();
            let _ = writeln!(out, "# quote_rule {rule}");
            let _ = writeln!(out, "# ask {}", fmt12(tree.ask()));
            let _ = writeln!(out, "# bid {}", fmt12(tree.bid()));
            let _ = writeln!(out, "# total_probability {}", fmt12(tree.total_probability()));
            let _ = writeln!(out, "# positive_atoms {}", tree.positive_atom_count());
            for check in &checks {
                let _ = writeln!(
                    out,
                    "# {} oracle {} closed_form {} gap {}",
                    check.quantity,
                    fmt12(check.oracle),
                    fmt12(check.closed_form),
                    format_compact(check.gap),
                );
            }
            let _ = writeln!(out, "# max_abs_gap {}", format_compact(max_abs_gap));
            out
        }
    };
    resolved.emit(&output)
}
