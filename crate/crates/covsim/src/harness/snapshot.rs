//! Static SVG snapshots of a world state: the working area, coverage-region
//! outlines, tree links, agents and targets.

use crate::engine::WorldState;
use crate::geometry::Point2;
use std::io;
use std::path::Path;

const WIDTH: f64 = 800.0;

/// Renders the state as a standalone SVG document. Coordinates are formatted
/// with fixed precision so identical states produce identical bytes.
pub fn svg_document(world: &WorldState) -> String {
    let mut points: Vec<Point2> = world.working_area.vertices().to_vec();
    points.extend(world.agents.iter().map(|a| a.position));
    points.extend(world.targets.iter().map(|t| t.position));
    for region in world.regions.iter().flatten() {
        points.extend_from_slice(region.region.vertices());
    }
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in &points {
        lo_x = lo_x.min(p.x);
        lo_y = lo_y.min(p.y);
        hi_x = hi_x.max(p.x);
        hi_y = hi_y.max(p.y);
    }
    let span_x = (hi_x - lo_x).max(1e-6);
    let span_y = (hi_y - lo_y).max(1e-6);
    let margin = 0.05 * span_x.max(span_y);
    let scale = WIDTH / (span_x + 2.0 * margin);
    let height = (span_y + 2.0 * margin) * scale;
    let tx = |x: f64| (x - lo_x + margin) * scale;
    let ty = |y: f64| height - (y - lo_y + margin) * scale;
    let marker = 0.006 * WIDTH;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {WIDTH:.0} {height:.0}\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH:.0}\" height=\"{height:.0}\" fill=\"white\"/>\n"
    ));

    // Working area (the fictitious rectangle, in boundary mode).
    svg.push_str(&polygon_element(
        world.working_area.vertices(),
        "none",
        "#2e8b57",
        2.0,
        &tx,
        &ty,
    ));

    // Coverage-region outlines.
    for region in world.regions.iter().flatten() {
        svg.push_str(&polygon_element(
            region.region.vertices(),
            "none",
            "#4682d4",
            1.0,
            &tx,
            &ty,
        ));
    }

    // Tree links.
    for edge in &world.tree.edges {
        let a = world.agents[edge.a].position;
        let b = world.agents[edge.b].position;
        svg.push_str(&format!(
            "<line x1=\"{:.4}\" y1=\"{:.4}\" x2=\"{:.4}\" y2=\"{:.4}\" \
             stroke=\"#9a9a9a\" stroke-width=\"1.5\"/>\n",
            tx(a.x),
            ty(a.y),
            tx(b.x),
            ty(b.y)
        ));
    }

    // Targets, then agents on top.
    for target in &world.targets {
        svg.push_str(&format!(
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{:.2}\" fill=\"#b0b0b0\" \
             stroke=\"#505050\" stroke-width=\"1\" class=\"target\"/>\n",
            tx(target.position.x),
            ty(target.position.y),
            marker
        ));
    }
    for agent in &world.agents {
        svg.push_str(&format!(
            "<circle cx=\"{:.4}\" cy=\"{:.4}\" r=\"{:.2}\" fill=\"#d43a3a\" class=\"agent\"/>\n",
            tx(agent.position.x),
            ty(agent.position.y),
            marker
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_snapshot(world: &WorldState, path: impl AsRef<Path>) -> io::Result<()> {
    std::fs::write(path, svg_document(world))
}

fn polygon_element(
    vertices: &[Point2],
    fill: &str,
    stroke: &str,
    stroke_width: f64,
    tx: &impl Fn(f64) -> f64,
    ty: &impl Fn(f64) -> f64,
) -> String {
    if vertices.is_empty() {
        return String::new();
    }
    let points: Vec<String> = vertices
        .iter()
        .map(|v| format!("{:.4},{:.4}", tx(v.x), ty(v.y)))
        .collect();
    format!(
        "<polygon points=\"{}\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width}\"/>\n",
        points.join(" ")
    )
}
