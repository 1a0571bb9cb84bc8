//! Deterministic discrete-time simulator for multi-agent coverage of a planar
//! region with simultaneous tracking of a moving target formation, while a
//! per-step minimum-distance spanning tree keeps the communication network
//! connected.
//!
//! Ground agents run synchronized Lloyd iterations: each one computes its
//! Voronoi cell inside the working area, intersects it with its sensing disk,
//! and heads for the resulting region's center of mass. Two tracking
//! mechanisms adapt the static method to moving targets: Gaussian importance
//! bumps pinned to the targets ([`engine::TrackingMode::Importance`]) or a
//! fictitious working-area rectangle re-fitted around agents and targets each
//! step ([`engine::TrackingMode::Boundary`]). Every step the spanning tree of
//! the r-disk communication graph is rebuilt and each preserved link confines
//! both endpoints to the circle centered at their midpoint with radius r/2,
//! so simultaneous moves cannot break the network.
//!
//! ## Modules
//!
//! - [`geometry`] — convex polygons, half-plane clipping, polygonal sensing
//!   disks, density fields, and mass/centroid/polar-moment integrals.
//! - [`partition`] — Voronoi cells via nearest-first bisector clipping with a
//!   shrinking-ball termination test, and sensing-limited coverage regions.
//! - [`connectivity`] — spanning-tree construction, per-link motion
//!   constraints, and exact goal limiting along the motion segment.
//! - [`tracking`] — formation trajectories, per-step density updates, and the
//!   bounding-rectangle boundary redefinition.
//! - [`engine`] — the synchronized step loop, integrator and unicycle
//!   kinematics, and full scenario runs.
//! - [`metrics`] — coverage costs (region-wise and saturated), distance
//!   metrics, and the two-radius cost sandwich check.
//! - [`harness`] — TOML scenario files, parametric sweeps, CSV/SVG output,
//!   and the randomized verification suite.
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run -p covsim --example static_coverage      # plain Lloyd deployment
//! cargo run -p covsim --example voronoi_regions      # cells, regions, centroids
//! cargo run -p covsim --example connectivity_limits  # tree + motion constraints
//! cargo run -p covsim --example boundary_tracking    # rectangle-following (SVG out)
//! cargo run -p covsim --example importance_tracking  # density-bump tracking
//! cargo run -p covsim --example unicycle_controller  # goal-to-goal navigation
//! cargo run -p covsim --example parameter_sweep      # velocity study (CSV out)
//! cargo run -p covsim --example sensing_cost_bound   # two-radius cost sandwich
//! ```
//!
//! The `covsim` binary drives the same machinery from scenario files:
//! `covsim run`, `covsim sweep`, and `covsim verify`.

pub mod connectivity;
pub mod engine;
pub mod geometry;
pub mod harness;
pub mod metrics;
pub mod partition;
pub mod tracking;
