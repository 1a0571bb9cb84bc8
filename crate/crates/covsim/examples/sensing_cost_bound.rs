//! The two-radius cost relation: reducing the sensing radius from s* to s
//! scales the saturated coverage cost by at most beta = (s*/s)^2, i.e.
//! `beta * H_s >= H_{s*} >= H_s > 0`. Evaluates both costs on a shared
//! quadrature grid for a few layouts.
//!
//! ```bash
//! cargo run -p covsim --example sensing_cost_bound
//! ```

use covsim::geometry::{ConvexPolygon, DensityField, Point2};
use covsim::metrics::verify_comm_bound;

fn main() {
    let area = ConvexPolygon::rectangle(0.0, 10.0, 0.0, 8.0);
    let density = DensityField::uniform(1.0);
    let positions = vec![
        Point2::new(2.0, 2.0),
        Point2::new(7.5, 3.0),
        Point2::new(4.0, 6.0),
    ];

    println!("    s     s*     H_s       H_s*      beta   beta*H_s   holds");
    for s in [0.5, 1.0, 1.5, 2.5, 4.0] {
        let check = verify_comm_bound(&positions, &density, &area, s, 2.0 * s, 128)
            .expect("valid radii");
        println!(
            "{:5.2}  {:5.2}  {:8.3}  {:8.3}  {:5.2}  {:9.3}  {}",
            s,
            2.0 * s,
            check.cost_reduced,
            check.cost_original,
            check.beta,
            check.beta * check.cost_reduced,
            check.holds
        );
    }
    println!("\nthe saturated cost at s* is always sandwiched between H_s and beta*H_s");
}
