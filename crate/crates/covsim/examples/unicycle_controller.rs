//! The goal-to-goal controller used between synchronized steps for
//! differential-drive agents: rotate toward the goal bearing, then drive,
//! re-aiming before every advance, until within the arrival tolerance.
//!
//! ```bash
//! cargo run -p covsim --example unicycle_controller
//! ```

use covsim::engine::{unicycle_navigate, Pose, UnicycleParams};
use covsim::geometry::Point2;

fn main() {
    let params = UnicycleParams {
        max_linear: 0.035,
        max_angular: 0.3,
        tolerance: 0.065,
        max_micro_steps: 10_000,
    };
    let start = Pose {
        position: Point2::new(0.0, 0.0),
        heading: std::f64::consts::PI, // facing away from the goal
    };
    let goal = Point2::new(0.6, 0.45);

    let path = unicycle_navigate(start, goal, &params).expect("goal reachable");
    println!("micro-step  x        y        heading   dist-to-goal");
    for (k, pose) in path.iter().enumerate().step_by(4) {
        println!(
            "{:10}  {:7.3}  {:7.3}  {:7.3}   {:7.3}",
            k + 1,
            pose.position.x,
            pose.position.y,
            pose.heading,
            pose.position.distance(goal)
        );
    }
    let end = path.last().unwrap();
    println!(
        "\nreached ({:.3}, {:.3}) after {} micro-steps; {:.1} mm from the goal (tolerance {:.0} mm)",
        end.position.x,
        end.position.y,
        path.len(),
        1e3 * end.position.distance(goal),
        1e3 * params.tolerance
    );
}
