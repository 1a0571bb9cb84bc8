//! Target tracking by varying importance functions: each target carries a
//! Gaussian density bump and the agents chase the weighted centroids of their
//! coverage regions.
//!
//! ```bash
//! cargo run -p covsim --example importance_tracking
//! ```

use covsim::engine::{self, TrackingMode};
use covsim::harness::load_config;

fn main() {
    let (mut config, _) =
        load_config(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/base.toml"))
            .expect("shipped base scenario");
    config.mode = TrackingMode::Importance;
    config.max_steps = 30;
    // Coarser quadrature keeps this demo quick; the acceptance runs use 128.
    config.grid_resolution = 64;

    let states = engine::run(&config).expect("scenario runs");
    println!("step  sum_dist  covered  peak-density-at-center");
    for (world, metrics) in states.iter().step_by(3) {
        let center = covsim::tracking::formation_center(&world.targets);
        println!(
            "{:4}  {:8.3}  {:7}  {:6.3}",
            metrics.step,
            metrics.sum_dist,
            metrics.covered_targets,
            world.density.evaluate(center.position)
        );
    }
}
