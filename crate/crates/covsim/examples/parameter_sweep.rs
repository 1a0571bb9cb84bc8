//! Runs the shipped formation-velocity sweep: one metrics CSV and a pair of
//! layout snapshots per velocity, plus a steady-state summary, all written to
//! `out/velocity_sweep/`.
//!
//! ```bash
//! cargo run -p covsim --example parameter_sweep
//! ```

use covsim::harness::sweep::{load_sweep, run_sweep};

fn main() {
    let (spec, warnings) = load_sweep(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../configs/sweep_velocity.toml"
    ))
    .expect("shipped sweep spec");
    for warning in warnings {
        eprintln!("warning: {warning}");
    }

    let out_dir = "out/velocity_sweep";
    let rows = run_sweep(&spec, out_dir).expect("sweep runs");
    println!("velocity  steps  converged  steady sum_dist");
    for row in &rows {
        let steady = row
            .steady_sum_dist
            .map(|v| format!("{v:9.3}"))
            .unwrap_or_else(|| "        -".into());
        println!(
            "{:>8}  {:5}  {:9}  {steady}",
            row.value, row.steps, row.converged
        );
    }
    println!("\noutputs in {out_dir}/ (summary.csv, metrics_*.csv, *.svg)");
}
