use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use covsim::engine;
use covsim::harness::sweep::{load_sweep, run_sweep, steady_state};
use covsim::harness::{emit_snapshot, load_config, verify, write_metrics_csv, ScenarioConfig};

#[derive(Parser)]
#[command(
    name = "covsim",
    version,
    about = "Multi-agent coverage and target-tracking simulator with spanning-tree connectivity maintenance"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one scenario: writes metrics.csv and SVG snapshots
    Run {
        /// Scenario file (TOML)
        config: PathBuf,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Also write a snapshot every K steps (first and last always)
        #[arg(long, value_name = "K")]
        snapshots: Option<usize>,
        /// Override the sensing-disk segment count
        #[arg(long, value_name = "N")]
        segments: Option<usize>,
        /// Override the quadrature grid resolution
        #[arg(long, value_name = "N")]
        grid: Option<usize>,
    },
    /// Run a parametric sweep: one metrics CSV per value plus summary.csv
    Sweep {
        /// Sweep spec file (TOML)
        spec: PathBuf,
        /// Output directory
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Override the sensing-disk segment count
        #[arg(long, value_name = "N")]
        segments: Option<usize>,
        /// Override the quadrature grid resolution
        #[arg(long, value_name = "N")]
        grid: Option<usize>,
    },
    /// Run the randomized property/oracle suite and report pass/fail
    Verify,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Run {
            config,
            out,
            snapshots,
            segments,
            grid,
        } => {
            let (mut scenario, warnings) = load_config(&config).map_err(|e| e.to_string())?;
            print_warnings(&warnings);
            apply_overrides(&mut scenario, segments, grid)?;
            run_scenario(&scenario, &out, snapshots)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            spec,
            out,
            segments,
            grid,
        } => {
            let (mut sweep, warnings) = load_sweep(&spec).map_err(|e| e.to_string())?;
            print_warnings(&warnings);
            apply_overrides(&mut sweep.base, segments, grid)?;
            let rows = run_sweep(&sweep, &out).map_err(|e| e.to_string())?;
            let mut failed = false;
            for row in &rows {
                let steady = row
                    .steady_sum_dist
                    .map(|v| format!("{v:.4}"))
                    .unwrap_or_else(|| "-".into());
                println!(
                    "{}={}: {} steps, converged={}, steady sum_dist={}, status={}",
                    row.axis, row.value, row.steps, row.converged, steady, row.status
                );
                failed |= row.status != "ok";
            }
            println!("summary: {}", out.join("summary.csv").display());
            Ok(if failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Verify => {
            let reports = verify::run_all();
            let mut failed = false;
            for report in &reports {
                if report.passed() {
                    println!("PASS {} ({} trials)", report.name, report.trials);
                } else {
                    println!(
                        "FAIL {} ({}/{} trials): {}",
                        report.name, report.failures, report.trials, report.detail
                    );
                    failed = true;
                }
            }
            Ok(if failed {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn print_warnings(warnings: &[String]) {
    for warning in warnings {
        eprintln!("warning: {warning}");
    }
}

fn apply_overrides(
    scenario: &mut ScenarioConfig,
    segments: Option<usize>,
    grid: Option<usize>,
) -> Result<(), String> {
    if let Some(segments) = segments {
        scenario.disk_segments = segments;
    }
    if let Some(grid) = grid {
        scenario.grid_resolution = grid;
    }
    scenario.validate().map(|_| ()).map_err(|e| e.to_string())
}

fn run_scenario(
    scenario: &ScenarioConfig,
    out: &PathBuf,
    snapshots: Option<usize>,
) -> Result<(), String> {
    if snapshots == Some(0) {
        return Err("--snapshots must be at least 1".into());
    }
    std::fs::create_dir_all(out).map_err(|e| format!("cannot create {}: {e}", out.display()))?;
    let states = engine::run(scenario).map_err(|e| e.to_string())?;
    let records: Vec<_> = states.iter().map(|(_, m)| m.clone()).collect();
    let metrics_path = out.join("metrics.csv");
    write_metrics_csv(&metrics_path, &records).map_err(|e| e.to_string())?;

    let last_step = states.len() - 1;
    let mut snapshot_steps = vec![0, last_step];
    if let Some(every) = snapshots {
        snapshot_steps.extend((every..last_step).step_by(every));
    }
    snapshot_steps.sort_unstable();
    snapshot_steps.dedup();
    for step in snapshot_steps {
        let (world, _) = &states[step];
        emit_snapshot(world, out.join(format!("snapshot_{step:04}.svg")))
            .map_err(|e| e.to_string())?;
    }

    let final_metrics = &records[last_step];
    let steady = steady_state(&records.iter().map(|m| m.sum_dist).collect::<Vec<_>>());
    println!(
        "{}: {} steps, final sum_dist {:.4} m, covered {}/{} targets",
        scenario.name,
        last_step,
        final_metrics.sum_dist,
        final_metrics.covered_targets,
        states[last_step].0.targets.len()
    );
    if let Some(s) = steady {
        println!(
            "steady state: {} (last-{}-step mean {:.4})",
            if s.converged { "reached" } else { "not reached" },
            covsim::harness::sweep::STEADY_WINDOW,
            s.mean
        );
    }
    println!("metrics: {}", metrics_path.display());
    Ok(())
}
