//! Geometry building blocks: Voronoi cells inside a convex working area,
//! coverage regions under a limited sensing radius, and their masses and
//! centroids under uniform and Gaussian densities.
//!
//! ```bash
//! cargo run -p covsim --example voronoi_regions
//! ```

use covsim::geometry::{ConvexPolygon, DensityField, Point2};
use covsim::partition::{coverage_region, voronoi_cell, AgentState};

fn main() {
    let area = ConvexPolygon::rectangle(0.0, 10.0, 0.0, 8.0);
    let positions = vec![
        Point2::new(2.0, 2.0),
        Point2::new(7.0, 2.5),
        Point2::new(4.5, 5.5),
        Point2::new(8.5, 6.0),
    ];
    let uniform = DensityField::uniform(1.0);
    let gaussian = DensityField::gaussian_mixture(vec![Point2::new(6.0, 4.0)]);

    println!("agent  cell-area  region-area  uniform-centroid      weighted-centroid");
    for (i, &p) in positions.iter().enumerate() {
        let agent = AgentState {
            id: i,
            position: p,
            sensing_radius: 2.5,
            comm_radius: 5.0,
        };
        let cell = voronoi_cell(i, &positions, &area).expect("distinct positions");
        let flat = coverage_region(&cell, &agent, &uniform, 32, 128).expect("non-empty");
        let weighted = coverage_region(&cell, &agent, &gaussian, 32, 128).expect("non-empty");
        println!(
            "  {i}    {:8.3}   {:9.3}   ({:5.2}, {:5.2})        ({:5.2}, {:5.2})",
            cell.area(),
            flat.region.area(),
            flat.moments.centroid.x,
            flat.moments.centroid.y,
            weighted.moments.centroid.x,
            weighted.moments.centroid.y,
        );
    }
    println!("\nthe weighted centroids lean toward the density bump at (6, 4)");
}
