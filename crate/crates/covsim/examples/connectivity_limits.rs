//! The connectivity-maintenance pieces in isolation: build the
//! minimum-distance spanning tree of a layout, derive each agent's motion
//! constraints, and limit a set of desired goals so every preserved link
//! survives the simultaneous move.
//!
//! ```bash
//! cargo run -p covsim --example connectivity_limits
//! ```

use covsim::connectivity::{compute_mst, limit_goal, motion_constraints};
use covsim::geometry::Point2;

fn main() {
    let comm_radius = 6.0;
    let positions = vec![
        Point2::new(0.0, 0.0),
        Point2::new(4.5, 1.0),
        Point2::new(8.0, 0.0),
        Point2::new(3.5, 5.0),
        Point2::new(9.5, 4.0),
    ];

    let tree = compute_mst(&positions, comm_radius).expect("r-disk graph connected");
    println!("spanning tree (total weight {:.3} m):", tree.total_weight());
    for edge in &tree.edges {
        println!("  {} -- {}  ({:.3} m)", edge.a, edge.b, edge.weight);
    }

    let constraints = motion_constraints(&tree, &positions, comm_radius);
    // Everyone tries to scatter radially away from the layout's center.
    let center = Point2::new(5.0, 2.0);
    println!("\nagent  desired goal        limited goal        constraints");
    let mut moved = Vec::new();
    for (i, &p) in positions.iter().enumerate() {
        let away = p + (p - center) * 2.0;
        let limited = limit_goal(p, away, &constraints[i]);
        moved.push(limited);
        println!(
            "  {i}    ({:6.2}, {:6.2})    ({:6.2}, {:6.2})    {}",
            away.x,
            away.y,
            limited.x,
            limited.y,
            constraints[i].len()
        );
    }

    println!("\nlink lengths after the simultaneous move:");
    for edge in &tree.edges {
        println!(
            "  {} -- {}  {:.3} m (limit {comm_radius})",
            edge.a,
            edge.b,
            moved[edge.a].distance(moved[edge.b])
        );
    }
}
