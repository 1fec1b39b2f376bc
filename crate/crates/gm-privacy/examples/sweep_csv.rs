//! Parameter sweep to plot-ready CSV.
//!
//! Evaluates the closed forms on a (mu, eta) grid and writes one
//! delta-normalized row per point. The output bytes are deterministic.
//! Run with `cargo run --example sweep_csv [path]`.

use gm_privacy::{sweep_csv, sweep_rows, SweepSpec};

fn main() -> anyhow::Result<()> {
    let spec = SweepSpec {
        mu_values: vec![0.1, 0.3, 0.5, 0.7, 0.9],
        eta_values: vec![0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5],
        epsilon_values: vec![],
        v_low: 0.0,
        v_high: 1.0,
        normalize_by_delta: true,
    };
    let rows = sweep_rows(&spec)?;
    let csv = sweep_csv(&rows);

    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &csv)?;
            println!("wrote {} rows to {path}", rows.len());
        }
        None => print!("{csv}"),
    }
    Ok(())
}
