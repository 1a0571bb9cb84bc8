//! Target tracking by boundary redefinition: the working area is recomputed
//! every step as the bounding rectangle of agents and targets, so the team
//! follows the moving formation while deploying evenly. Writes SVG snapshots
//! of the initial, middle and final layouts to `out/boundary/`.
//!
//! ```bash
//! cargo run -p covsim --example boundary_tracking
//! ```

use covsim::engine;
use covsim::harness::{emit_snapshot, load_config};

fn main() {
    let (config, warnings) =
        load_config(concat!(env!("CARGO_MANIFEST_DIR"), "/../../configs/base.toml"))
            .expect("shipped base scenario");
    for warning in warnings {
        eprintln!("warning: {warning}");
    }

    let states = engine::run(&config).expect("scenario runs");
    std::fs::create_dir_all("out/boundary").expect("output directory");
    for step in [0, states.len() / 2, states.len() - 1] {
        let (world, metrics) = &states[step];
        let path = format!("out/boundary/step_{:03}.svg", world.step);
        emit_snapshot(world, &path).expect("snapshot written");
        println!(
            "step {:3}: sum_dist {:7.3} m, covered {:2}/12 targets, area {:7.2} m^2 -> {path}",
            world.step,
            metrics.sum_dist,
            metrics.covered_targets,
            world.working_area.area()
        );
    }
}
