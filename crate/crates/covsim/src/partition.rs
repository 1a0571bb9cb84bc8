//! Voronoi partitioning of the working area and per-agent coverage regions.
//!
//! Each agent's cell is built incrementally: bisectors to the other agents are
//! applied nearest-first, and the procedure stops as soon as every remaining
//! agent lies outside a shrinking ball that bounds where a bisector could
//! still matter. The ball radius comes from an envelope region bounded by
//! lines parallel to the applied bisectors, drawn through the corresponding
//! agents themselves (twice the bisector offset), intersected with the working
//! area.

use crate::geometry::{
    disk_polygon, moments_numeric, moments_uniform, ConvexPolygon, DensityField, DirectedLine,
    GeometryError, Point2, RegionMoments,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Agents closer than this are treated as coincident.
pub const MIN_SEPARATION: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PartitionError {
    #[error("agents {a} and {b} coincide (separation {separation} < {MIN_SEPARATION})")]
    DuplicatePosition { a: usize, b: usize, separation: f64 },
    #[error("coverage region vanished (overcrowded agent)")]
    EmptyRegion,
    #[error("density mass over the coverage region is numerically zero")]
    ZeroMass,
}

/// A ground agent: planar position plus sensing and communication radii.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgentState {
    pub id: usize,
    pub position: Point2,
    pub sensing_radius: f64,
    pub comm_radius: f64,
}

/// An agent's coverage region: its Voronoi cell intersected with its sensing
/// disk, with the region's mass and centroid attached.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageRegion {
    pub agent_id: usize,
    pub region: ConvexPolygon,
    pub moments: RegionMoments,
}

/// The Voronoi cell of `agent` inside `area`, clipped by bisectors to the
/// other positions in ascending distance order with early termination.
pub fn voronoi_cell(
    agent: usize,
    positions: &[Point2],
    area: &ConvexPolygon,
) -> Result<ConvexPolygon, PartitionError> {
    Ok(voronoi_cell_impl(agent, positions, area, 0.0)?.cell)
}

/// Like [`voronoi_cell`], with every bisector half-plane offset by
/// `safety_radius` toward the agent, narrowing the cell to keep neighboring
/// agents physically separated.
pub fn shrunk_voronoi_cell(
    agent: usize,
    positions: &[Point2],
    area: &ConvexPolygon,
    safety_radius: f64,
) -> Result<ConvexPolygon, PartitionError> {
    Ok(voronoi_cell_impl(agent, positions, area, safety_radius)?.cell)
}

pub(crate) struct CellTrace {
    pub cell: ConvexPolygon,
    /// Indices whose bisector was applied, in processing order.
    #[cfg_attr(not(test), allow(dead_code))]
    pub examined: Vec<usize>,
}

pub(crate) fn voronoi_cell_impl(
    agent: usize,
    positions: &[Point2],
    area: &ConvexPolygon,
    shrink: f64,
) -> Result<CellTrace, PartitionError> {
    let p = positions[agent];
    let mut order: Vec<(usize, f64)> = positions
        .iter()
        .enumerate()
        .filter(|(j, _)| *j != agent)
        .map(|(j, q)| (j, p.distance(*q)))
        .collect();
    for (j, d) in &order {
        if *d < MIN_SEPARATION {
            return Err(PartitionError::DuplicatePosition {
                a: agent.min(*j),
                b: agent.max(*j),
                separation: *d,
            });
        }
    }
    order.sort_by(|a, b| (a.1, a.0).partial_cmp(&(b.1, b.0)).unwrap());

    let mut cell = area.clone();
    // Envelope whose farthest vertex bounds the reach of any future bisector:
    // the intersection of half-planes parallel to each applied bisector but
    // passing through the neighbor itself (twice the bisector offset). It must
    // NOT be clipped to the working area — the doubling argument behind the
    // ball test fails once the area boundary cuts it. A box wider than the
    // farthest node stands in for the initially unbounded region.
    let far = order.last().map(|(_, d)| *d).unwrap_or(0.0);
    let half_width = 1.5 * far + 1.0;
    let mut envelope = ConvexPolygon::rectangle(
        p.x - half_width,
        p.x + half_width,
        p.y - half_width,
        p.y + half_width,
    );
    let mut examined = Vec::new();
    for (j, dist) in order {
        let radius = envelope.max_vertex_distance(p);
        // A shrunk bisector sits `shrink` closer, so widen the ball to match.
        if dist - 2.0 * shrink > radius {
            break;
        }
        cell = cell.clip_halfplane(&DirectedLine::bisector_toward(p, positions[j], shrink));
        envelope =
            envelope.clip_halfplane(&DirectedLine::parallel_through_other(p, positions[j]));
        examined.push(j);
        if cell.is_empty() {
            break;
        }
    }
    Ok(CellTrace { cell, examined })
}

/// Intersects a (possibly safety-shrunk) cell with the agent's sensing disk
/// and attaches moments: closed-form for constant density, quadrature for
/// Gaussian mixtures.
pub fn coverage_region(
    cell: &ConvexPolygon,
    agent: &AgentState,
    density: &DensityField,
    disk_segments: usize,
    grid_resolution: usize,
) -> Result<CoverageRegion, PartitionError> {
    if cell.is_empty() {
        return Err(PartitionError::EmptyRegion);
    }
    let disk = disk_polygon(agent.position, agent.sensing_radius, disk_segments)
        .expect("agent sensing disk parameters validated at configuration time");
    let region = cell.intersect(&disk);
    if region.is_empty() {
        return Err(PartitionError::EmptyRegion);
    }
    let moments = match density {
        DensityField::Uniform { value } => moments_uniform(&region, *value),
        DensityField::GaussianMixture { .. } => moments_numeric(&region, density, grid_resolution),
    }
    .map_err(|e| match e {
        GeometryError::ZeroMass => PartitionError::ZeroMass,
        _ => PartitionError::EmptyRegion,
    })?;
    Ok(CoverageRegion {
        agent_id: agent.id,
        region,
        moments,
    })
}
