//! Plain Lloyd deployment: six agents spread over a fixed square under
//! uniform density, with the spanning-tree motion constraints active.
//!
//! ```bash
//! cargo run -p covsim --example static_coverage
//! ```

use covsim::engine::{self, TrackingMode};
use covsim::geometry::{ConvexPolygon, Point2};
use covsim::harness::{AgentSpec, ScenarioConfig};
use covsim::tracking::{FormationPath, FormationTrajectory};

fn main() {
    let agents = [
        (1.0, 1.0),
        (1.8, 1.2),
        (1.3, 2.0),
        (2.4, 2.2),
        (1.9, 3.0),
        (2.9, 1.6),
    ]
    .into_iter()
    .map(|(x, y)| AgentSpec {
        position: Point2::new(x, y),
        sensing_radius: 12.0,
        comm_radius: 5.0,
    })
    .collect();

    let config = ScenarioConfig {
        name: "static_coverage".into(),
        mode: TrackingMode::Static,
        safety_radius: 0.0,
        max_steps: 30,
        disk_segments: 32,
        grid_resolution: 64,
        working_area: ConvexPolygon::rectangle(0.0, 10.0, 0.0, 10.0),
        agents,
        formation: FormationTrajectory {
            rows: 1,
            cols: 1,
            spacing: 1.0,
            center: Point2::new(5.0, 5.0),
            path: FormationPath::Static,
        },
        kinematics: Default::default(),
    };

    let states = engine::run(&config).expect("scenario runs");
    println!("step  cost_full    longest-tree-edge");
    for (world, metrics) in &states {
        println!(
            "{:4}  {:10.4}  {:8.3}",
            metrics.step,
            metrics.cost_full,
            world.tree.max_edge_weight()
        );
    }
    let (final_world, _) = states.last().unwrap();
    println!("\nfinal positions:");
    for agent in &final_world.agents {
        println!(
            "  agent {}: ({:.3}, {:.3})",
            agent.id, agent.position.x, agent.position.y
        );
    }
}
