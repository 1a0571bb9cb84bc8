//! The synchronized per-step simulation loop: advance targets, update the
//! density field or the working-area boundary, partition, compute centroids,
//! rebuild the spanning tree, limit the goals, navigate, and re-establish the
//! world invariants at the step barrier.

use crate::connectivity::{
    compute_mst, limit_goal, motion_constraints, ConnectivityError, SpanningTree,
};
use crate::geometry::{ConvexPolygon, DensityField, Point2, Vec2};
use crate::harness::config::{ScenarioConfig, ValidationError};
use crate::metrics::{cost_limited, covered_targets, sum_distance, MetricsRecord};
use crate::partition::{
    coverage_region, shrunk_voronoi_cell, AgentState, CoverageRegion, PartitionError,
};
use crate::tracking::{
    advance_targets, formation_center, redefine_boundary, update_density, TargetState,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which tracking mechanism the per-step mode update drives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrackingMode {
    /// Gaussian importance bumps follow the targets; the working area is fixed.
    Importance,
    /// The working area is redefined each step as the bounding rectangle of
    /// agents and targets; the density stays uniform.
    Boundary,
    /// Neither mechanism: plain deployment in a fixed working area.
    Static,
}

/// Goal-to-goal controller parameters for differential-drive agents.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnicycleParams {
    /// Forward travel per micro-step, meters.
    pub max_linear: f64,
    /// Heading change per micro-step, radians.
    pub max_angular: f64,
    /// Arrival tolerance, meters.
    pub tolerance: f64,
    #[serde(default = "default_micro_steps")]
    pub max_micro_steps: usize,
}

fn default_micro_steps() -> usize {
    10_000
}

/// Agent kinematics between synchronized steps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum KinematicsConfig {
    /// Agents jump to their limited goals.
    #[default]
    Integrator,
    /// Agents run a turn-then-drive controller to within the tolerance.
    Unicycle(UnicycleParams),
}

/// Position plus heading of a unicycle agent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub position: Point2,
    pub heading: f64,
}

/// Complete synchronized-step snapshot: positions, targets, the active
/// density and working area, and the partition and tree consistent with them.
#[derive(Debug, Clone, PartialEq)]
pub struct WorldState {
    pub step: usize,
    pub working_area: ConvexPolygon,
    pub agents: Vec<AgentState>,
    /// Unicycle headings; fixed at zero under integrator kinematics.
    pub headings: Vec<f64>,
    pub targets: Vec<TargetState>,
    pub density: DensityField,
    pub tree: SpanningTree,
    /// One entry per agent; `None` when the (safety-shrunk) region vanished
    /// and the agent held its position.
    pub regions: Vec<Option<CoverageRegion>>,
}

impl WorldState {
    /// Snapshot at step zero: initial agent layout, targets at their step-0
    /// positions, the configured working area, and the mode's density field.
    pub fn initial(config: &ScenarioConfig) -> Result<Self, EngineError> {
        let targets = advance_targets(&config.formation, 0);
        let density = match config.mode {
            TrackingMode::Importance => update_density(&targets),
            _ => DensityField::uniform(1.0),
        };
        let agents = config.agent_states();
        let headings = vec![0.0; agents.len()];
        snapshot(
            0,
            config.working_area.clone(),
            density,
            agents,
            headings,
            targets,
            config,
        )
    }

    pub fn positions(&self) -> Vec<Point2> {
        self.agents.iter().map(|a| a.position).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EngineError {
    #[error("scenario rejected: {0}")]
    InvalidScenario(#[from] ValidationError),
    #[error(
        "communication graph disconnected at step {step}: reached {reachable:?}, unreached {unreachable:?}"
    )]
    Disconnected {
        step: usize,
        reachable: Vec<usize>,
        unreachable: Vec<usize>,
    },
    #[error("agents {a} and {b} coincide at step {step}")]
    DuplicatePosition { step: usize, a: usize, b: usize },
    #[error(
        "agent {agent} failed to reach its goal at step {step}: {remaining} m left after {micro_steps} micro-steps"
    )]
    NonConvergence {
        step: usize,
        agent: usize,
        micro_steps: usize,
        remaining: f64,
    },
}

/// Unicycle navigation ran out of micro-steps.
#[derive(Debug, Error, Clone, Copy, PartialEq)]
#[error("goal not reached: {remaining} m after {micro_steps} micro-steps")]
pub struct NavigationFailure {
    pub micro_steps: usize,
    pub remaining: f64,
}

/// Links in the communication graph are admissible up to the most restrictive
/// agent's radius.
pub fn effective_comm_radius(agents: &[AgentState]) -> f64 {
    agents
        .iter()
        .map(|a| a.comm_radius)
        .fold(f64::INFINITY, f64::min)
}

/// One synchronized simulation step.
///
/// Order: (1) targets advance; (2) the mode updates the density (importance)
/// or the working area (boundary); (3) every agent computes its coverage
/// region and centroid goal, holding position if the region vanished;
/// (4) the spanning tree is rebuilt on the current positions; (5) goals are
/// limited to the tree's motion constraints; (6) agents move (integrator) or
/// navigate (unicycle) and are kept inside the working area; (7) the returned
/// state carries the partition and tree recomputed at the new positions.
pub fn lloyd_step(world: &WorldState, config: &ScenarioConfig) -> Result<WorldState, EngineError> {
    let step = world.step + 1;
    let targets = advance_targets(&config.formation, step);
    let (area, density) = match config.mode {
        TrackingMode::Importance => (world.working_area.clone(), update_density(&targets)),
        TrackingMode::Boundary => (
            redefine_boundary(&world.agents, &targets),
            DensityField::uniform(1.0),
        ),
        TrackingMode::Static => (world.working_area.clone(), world.density.clone()),
    };

    let positions = world.positions();
    let mut goals = Vec::with_capacity(positions.len());
    for (i, agent) in world.agents.iter().enumerate() {
        let goal = match region_for(i, agent, &positions, &area, &density, config) {
            Ok(region) => region.moments.centroid,
            Err(PartitionError::EmptyRegion | PartitionError::ZeroMass) => agent.position,
            Err(PartitionError::DuplicatePosition { a, b, .. }) => {
                return Err(EngineError::DuplicatePosition { step, a, b })
            }
        };
        goals.push(area.project(goal));
    }

    let comm_radius = effective_comm_radius(&world.agents);
    let tree = compute_mst(&positions, comm_radius).map_err(|e| disconnected(step, e))?;
    let constraints = motion_constraints(&tree, &positions, comm_radius);
    let limited: Vec<Point2> = goals
        .iter()
        .enumerate()
        .map(|(i, goal)| limit_goal(positions[i], *goal, &constraints[i]))
        .collect();

    let (new_positions, new_headings) = match &config.kinematics {
        KinematicsConfig::Integrator => (
            limited.iter().map(|g| area.project(*g)).collect::<Vec<_>>(),
            world.headings.clone(),
        ),
        KinematicsConfig::Unicycle(params) => {
            let mut ends = Vec::with_capacity(limited.len());
            let mut headings = Vec::with_capacity(limited.len());
            for (i, goal) in limited.iter().enumerate() {
                let start = Pose {
                    position: positions[i],
                    heading: world.headings[i],
                };
                let path = unicycle_navigate(start, *goal, params).map_err(|failure| {
                    EngineError::NonConvergence {
                        step,
                        agent: i,
                        micro_steps: failure.micro_steps,
                        remaining: failure.remaining,
                    }
                })?;
                let end = path.last().copied().unwrap_or(start);
                ends.push(area.project(end.position));
                headings.push(end.heading);
            }
            (ends, headings)
        }
    };

    let agents: Vec<AgentState> = world
        .agents
        .iter()
        .zip(&new_positions)
        .map(|(a, p)| AgentState {
            position: *p,
            ..*a
        })
        .collect();
    snapshot(step, area, density, agents, new_headings, targets, config)
}

/// Turn-then-drive goal-to-goal controller: rotate toward the goal bearing
/// (bounded per micro-step), drive forward once aligned (bounded and never
/// overshooting), re-aiming before every advance. Returns the micro-step
/// poses; empty when the start already lies within tolerance.
pub fn unicycle_navigate(
    start: Pose,
    goal: Point2,
    params: &UnicycleParams,
) -> Result<Vec<Pose>, NavigationFailure> {
    let mut pose = start;
    let mut path = Vec::new();
    loop {
        let offset = goal - pose.position;
        let dist = offset.norm();
        if dist <= params.tolerance {
            return Ok(path);
        }
        if path.len() >= params.max_micro_steps {
            return Err(NavigationFailure {
                micro_steps: path.len(),
                remaining: dist,
            });
        }
        let bearing = offset.y.atan2(offset.x);
        let error = wrap_angle(bearing - pose.heading);
        let turn = error.clamp(-params.max_angular, params.max_angular);
        pose.heading = wrap_angle(pose.heading + turn);
        if (error - turn).abs() < 1e-12 {
            let advance = dist.min(params.max_linear);
            pose.position =
                pose.position + Vec2::new(pose.heading.cos(), pose.heading.sin()) * advance;
        }
        path.push(pose);
    }
}

fn wrap_angle(angle: f64) -> f64 {
    let mut a = angle % std::f64::consts::TAU;
    if a > std::f64::consts::PI {
        a -= std::f64::consts::TAU;
    } else if a <= -std::f64::consts::PI {
        a += std::f64::consts::TAU;
    }
    a
}

/// Runs a validated scenario for `max_steps` steps, returning the initial
/// synchronized state and one state per step, each with its metrics row.
/// Identical configurations produce bit-identical output.
pub fn run(config: &ScenarioConfig) -> Result<Vec<(WorldState, MetricsRecord)>, EngineError> {
    config.validate()?;
    let mut world = WorldState::initial(config)?;
    let mut trajectory = Vec::with_capacity(config.max_steps + 1);
    trajectory.push((world.clone(), record_metrics(&world, config)));
    for _ in 0..config.max_steps {
        world = lloyd_step(&world, config)?;
        trajectory.push((world.clone(), record_metrics(&world, config)));
    }
    Ok(trajectory)
}

/// Metrics of a synchronized state.
pub fn record_metrics(world: &WorldState, config: &ScenarioConfig) -> MetricsRecord {
    let (cost_core, cost_full) = cost_limited(
        &world.agents,
        &world.regions,
        &world.density,
        &world.working_area,
        config.grid_resolution,
    );
    let center = formation_center(&world.targets);
    let sum_dist = sum_distance(&world.agents, &center);
    let comm_radius = effective_comm_radius(&world.agents);
    MetricsRecord {
        step: world.step,
        cost_core,
        cost_full,
        sum_dist,
        mean_dist: sum_dist / world.agents.len() as f64,
        covered_targets: covered_targets(&world.agents, &world.targets),
        min_tree_slack: comm_radius - world.tree.max_edge_weight(),
    }
}

fn region_for(
    index: usize,
    agent: &AgentState,
    positions: &[Point2],
    area: &ConvexPolygon,
    density: &DensityField,
    config: &ScenarioConfig,
) -> Result<CoverageRegion, PartitionError> {
    let cell = shrunk_voronoi_cell(index, positions, area, config.safety_radius)?;
    coverage_region(
        &cell,
        agent,
        density,
        config.disk_segments,
        config.grid_resolution,
    )
}

fn snapshot(
    step: usize,
    area: ConvexPolygon,
    density: DensityField,
    agents: Vec<AgentState>,
    headings: Vec<f64>,
    targets: Vec<TargetState>,
    config: &ScenarioConfig,
) -> Result<WorldState, EngineError> {
    let positions: Vec<Point2> = agents.iter().map(|a| a.position).collect();
    let mut regions = Vec::with_capacity(agents.len());
    for (i, agent) in agents.iter().enumerate() {
        match region_for(i, agent, &positions, &area, &density, config) {
            Ok(region) => regions.push(Some(region)),
            Err(PartitionError::EmptyRegion | PartitionError::ZeroMass) => regions.push(None),
            Err(PartitionError::DuplicatePosition { a, b, .. }) => {
                return Err(EngineError::DuplicatePosition { step, a, b })
            }
        }
    }
    let tree = compute_mst(&positions, effective_comm_radius(&agents))
        .map_err(|e| disconnected(step, e))?;
    Ok(WorldState {
        step,
        working_area: area,
        agents,
        headings,
        targets,
        density,
        tree,
        regions,
    })
}

fn disconnected(step: usize, error: ConnectivityError) -> EngineError {
    let ConnectivityError::DisconnectedGraph {
        reachable,
        unreachable,
    } = error;
    EngineError::Disconnected {
        step,
        reachable,
        unreachable,
    }
}
