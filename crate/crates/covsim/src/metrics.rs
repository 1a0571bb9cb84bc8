//! Performance metrics and analytical verifications: the limited-sensing cost
//! in its region-wise and saturated forms, the sum of agent distances to the
//! formation center, target coverage counts, and the sandwich bound relating
//! the limited costs at two sensing radii.

use crate::geometry::{
    for_each_quadrature_node, moments_numeric, moments_uniform, polar_moment, ConvexPolygon,
    DensityField, Point2,
};
use crate::partition::{AgentState, CoverageRegion};
use crate::tracking::{FormationCenter, TargetState};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MetricsError {
    #[error("reduced sensing radius {s} must satisfy 0 < s <= s_star = {s_star}")]
    InvalidRadii { s: f64, s_star: f64 },
}

/// One row of per-step metrics.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsRecord {
    pub step: usize,
    /// Region-wise limited cost: sum over agents of the polar moment of their
    /// coverage region about their position.
    pub cost_core: f64,
    /// `cost_core` plus the saturated tail: sensing performance pinned at s^2
    /// over the part of the working area outside every coverage region.
    pub cost_full: f64,
    /// Sum of agent distances to the formation center.
    pub sum_dist: f64,
    pub mean_dist: f64,
    /// Targets within sensing range of at least one agent.
    pub covered_targets: usize,
    /// Communication radius minus the longest tree edge.
    pub min_tree_slack: f64,
}

/// Region-wise limited cost and its saturated completion.
///
/// `cost_core` integrates squared distance times density over each agent's
/// coverage region; `cost_full` adds `s^2` times the density mass of the
/// working area left uncovered. Vanished regions contribute nothing to the
/// core and leave their share of mass in the tail.
pub fn cost_limited(
    agents: &[AgentState],
    regions: &[Option<CoverageRegion>],
    density: &DensityField,
    area: &ConvexPolygon,
    resolution: usize,
) -> (f64, f64) {
    let mut core = 0.0;
    let mut covered_mass = 0.0;
    for (agent, region) in agents.iter().zip(regions) {
        if let Some(region) = region {
            core += polar_moment(&region.region, agent.position, density, resolution)
                .expect("coverage regions are non-empty by construction");
            covered_mass += region.moments.mass;
        }
    }
    let area_mass = match density {
        DensityField::Uniform { value } => moments_uniform(area, *value)
            .expect("working area is non-empty")
            .mass,
        DensityField::GaussianMixture { .. } => moments_numeric(area, density, resolution)
            .map(|m| m.mass)
            .unwrap_or(0.0),
    };
    let saturation = agents
        .iter()
        .map(|a| a.sensing_radius)
        .fold(0.0, f64::max)
        .powi(2);
    let tail = saturation * (area_mass - covered_mass).max(0.0);
    (core, core + tail)
}

/// Saturated locational cost evaluated directly: a single quadrature over the
/// working area of `min(min_i |q - p_i|^2, cap^2) * phi(q)`. This is the
/// integral the region-wise `cost_full` approximates, and serves as its
/// independent cross-check.
pub fn saturated_cost_direct(
    positions: &[Point2],
    density: &DensityField,
    area: &ConvexPolygon,
    cap: f64,
    resolution: usize,
) -> f64 {
    let cap_sq = cap * cap;
    let mut total = 0.0;
    for_each_quadrature_node(area, resolution, |q, w| {
        let nearest_sq = positions
            .iter()
            .map(|p| p.distance_sq(q))
            .fold(f64::INFINITY, f64::min);
        total += nearest_sq.min(cap_sq) * density.evaluate(q) * w;
    });
    total
}

/// Sum of agent distances to the formation center.
pub fn sum_distance(agents: &[AgentState], center: &FormationCenter) -> f64 {
    agents
        .iter()
        .map(|a| a.position.distance(center.position))
        .sum()
}

/// Number of targets within sensing range of at least one agent.
pub fn covered_targets(agents: &[AgentState], targets: &[TargetState]) -> usize {
    targets
        .iter()
        .filter(|t| {
            agents
                .iter()
                .any(|a| a.position.distance(t.position) <= a.sensing_radius)
        })
        .count()
}

/// Outcome of the two-radius cost comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommBoundCheck {
    /// Saturated cost at the reduced radius `s`.
    pub cost_reduced: f64,
    /// Saturated cost at the original radius `s_star`.
    pub cost_original: f64,
    /// `(s_star / s)^2`, the performance ratio of the two saturation levels.
    pub beta: f64,
    /// Whether `beta * H_s >= H_s_star >= H_s > 0` held within slack.
    pub holds: bool,
}

/// Verifies the sandwich `beta * H_s >= H_{s*} >= H_s > 0` for the saturated
/// costs at a reduced sensing radius `s` and the original `s_star`. Both costs
/// are evaluated on the same quadrature nodes so the pointwise ordering of the
/// integrands carries over to the sums exactly.
pub fn verify_comm_bound(
    positions: &[Point2],
    density: &DensityField,
    area: &ConvexPolygon,
    s: f64,
    s_star: f64,
    resolution: usize,
) -> Result<CommBoundCheck, MetricsError> {
    if !(s > 0.0) || s > s_star {
        return Err(MetricsError::InvalidRadii { s, s_star });
    }
    let (s_sq, star_sq) = (s * s, s_star * s_star);
    let mut cost_reduced = 0.0;
    let mut cost_original = 0.0;
    for_each_quadrature_node(area, resolution, |q, w| {
        let nearest_sq = positions
            .iter()
            .map(|p| p.distance_sq(q))
            .fold(f64::INFINITY, f64::min);
        let phi_w = density.evaluate(q) * w;
        cost_reduced += nearest_sq.min(s_sq) * phi_w;
        cost_original += nearest_sq.min(star_sq) * phi_w;
    });
    let beta = star_sq / s_sq;
    const SLACK: f64 = 1e-9;
    let holds = beta * cost_reduced >= cost_original - SLACK
        && cost_original >= cost_reduced - SLACK
        && cost_reduced > 0.0;
    Ok(CommBoundCheck {
        cost_reduced,
        cost_original,
        beta,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{coverage_region, voronoi_cell};
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn agent(id: usize, x: f64, y: f64, s: f64) -> AgentState {
        AgentState {
            id,
            position: Point2::new(x, y),
            sensing_radius: s,
            comm_radius: 2.0 * s,
        }
    }

    fn regions_for(
        agents: &[AgentState],
        area: &ConvexPolygon,
        density: &DensityField,
    ) -> Vec<Option<CoverageRegion>> {
        let positions: Vec<Point2> = agents.iter().map(|a| a.position).collect();
        agents
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let cell = voronoi_cell(i, &positions, area).unwrap();
                coverage_region(&cell, a, density, 32, 128).ok()
            })
            .collect()
    }

    #[test]
    fn centered_agent_covers_square_exactly() {
        let area = ConvexPolygon::rectangle(0.0, 1.0, 0.0, 1.0);
        let density = DensityField::uniform(1.0);
        let agents = vec![agent(0, 0.5, 0.5, 2.0)];
        let regions = regions_for(&agents, &area, &density);
        let (core, full) = cost_limited(&agents, &regions, &density, &area, 128);
        assert_relative_eq!(core, 1.0 / 6.0, epsilon = 1e-9);
        assert_relative_eq!(full, core, epsilon = 1e-9);
    }

    #[test]
    fn empty_region_is_pure_tail() {
        let area = ConvexPolygon::rectangle(0.0, 1.0, 0.0, 1.0);
        let density = DensityField::uniform(1.0);
        let agents = vec![agent(0, 0.5, 0.5, 2.0)];
        let (core, full) = cost_limited(&agents, &[None], &density, &area, 128);
        assert_eq!(core, 0.0);
        assert_relative_eq!(full, 4.0, epsilon = 1e-12);
    }

    #[test]
    fn density_scaling_is_linear() {
        let area = ConvexPolygon::rectangle(0.0, 4.0, 0.0, 3.0);
        let density1 = DensityField::uniform(1.0);
        let density2 = DensityField::uniform(2.0);
        let agents = vec![agent(0, 1.0, 1.0, 1.5), agent(1, 3.0, 2.0, 1.5)];
        let r1 = regions_for(&agents, &area, &density1);
        let r2 = regions_for(&agents, &area, &density2);
        let (core1, full1) = cost_limited(&agents, &r1, &density1, &area, 128);
        let (core2, full2) = cost_limited(&agents, &r2, &density2, &area, 128);
        assert_relative_eq!(core2, 2.0 * core1, max_relative = 1e-12);
        assert_relative_eq!(full2, 2.0 * full1, max_relative = 1e-12);
    }

    #[test]
    fn full_cost_matches_direct_integral_when_unlimited() {
        // With s beyond the area diameter the saturation never engages, so the
        // region-wise cost must match the direct quadrature of the unlimited
        // cost within quadrature tolerance.
        let area = ConvexPolygon::rectangle(0.0, 5.0, 0.0, 4.0);
        let density = DensityField::uniform(1.0);
        let s = 20.0;
        let agents = vec![agent(0, 1.0, 1.0, s), agent(1, 4.0, 3.0, s)];
        let positions: Vec<Point2> = agents.iter().map(|a| a.position).collect();
        let regions = regions_for(&agents, &area, &density);
        let (_, full) = cost_limited(&agents, &regions, &density, &area, 256);
        let direct = saturated_cost_direct(&positions, &density, &area, s, 256);
        assert_relative_eq!(full, direct, max_relative = 1e-3);
    }

    #[test]
    fn sum_distance_examples() {
        let center = FormationCenter {
            position: Point2::new(0.0, 0.0),
        };
        assert_eq!(sum_distance(&[agent(0, 0.0, 0.0, 1.0)], &center), 0.0);
        let agents = vec![agent(0, 1.0, 0.0, 1.0), agent(1, 0.0, 2.0, 1.0)];
        assert_relative_eq!(sum_distance(&agents, &center), 3.0, epsilon = 1e-12);
        let four = vec![
            agent(0, 2.0, 0.0, 1.0),
            agent(1, -2.0, 0.0, 1.0),
            agent(2, 0.0, 2.0, 1.0),
            agent(3, 0.0, -2.0, 1.0),
        ];
        let mean = sum_distance(&four, &center) / four.len() as f64;
        assert_relative_eq!(mean, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn sum_distance_translation_covariant() {
        let agents = vec![agent(0, 1.0, 2.0, 1.0), agent(1, -3.0, 0.5, 1.0)];
        let center = FormationCenter {
            position: Point2::new(0.5, -1.0),
        };
        let shift = crate::geometry::Vec2::new(4.2, -7.9);
        let shifted: Vec<AgentState> = agents
            .iter()
            .map(|a| AgentState {
                position: a.position + shift,
                ..*a
            })
            .collect();
        let shifted_center = FormationCenter {
            position: center.position + shift,
        };
        assert_relative_eq!(
            sum_distance(&agents, &center),
            sum_distance(&shifted, &shifted_center),
            epsilon = 1e-9
        );
    }

    #[test]
    fn covered_target_counting() {
        let agents = vec![agent(0, 0.0, 0.0, 1.0), agent(1, 0.1, 0.0, 1.0)];
        let targets = vec![
            TargetState { id: 0, position: Point2::new(0.0, 0.0) },
            TargetState { id: 1, position: Point2::new(5.0, 0.0) },
            TargetState { id: 2, position: Point2::new(0.5, 0.0) },
        ];
        // Target 2 is inside both disks but counts once.
        assert_eq!(covered_targets(&agents, &targets), 2);
        assert_eq!(covered_targets(&[], &targets), 0);
    }

    #[test]
    fn comm_bound_equal_radii() {
        let area = ConvexPolygon::rectangle(0.0, 4.0, 0.0, 4.0);
        let density = DensityField::uniform(1.0);
        let positions = vec![Point2::new(1.0, 1.0), Point2::new(3.0, 3.0)];
        let check = verify_comm_bound(&positions, &density, &area, 1.5, 1.5, 128).unwrap();
        assert_relative_eq!(check.beta, 1.0, epsilon = 1e-12);
        assert_eq!(check.cost_reduced, check.cost_original);
        assert!(check.holds);
    }

    #[test]
    fn comm_bound_beta_for_doubled_radius() {
        let area = ConvexPolygon::rectangle(0.0, 4.0, 0.0, 4.0);
        let density = DensityField::uniform(1.0);
        let positions = vec![Point2::new(2.0, 2.0)];
        let check = verify_comm_bound(&positions, &density, &area, 1.0, 2.0, 128).unwrap();
        assert_relative_eq!(check.beta, 4.0, epsilon = 1e-12);
        assert!(check.holds);
    }

    #[test]
    fn comm_bound_rejects_inverted_radii() {
        let area = ConvexPolygon::rectangle(0.0, 4.0, 0.0, 4.0);
        let density = DensityField::uniform(1.0);
        let err = verify_comm_bound(&[Point2::new(1.0, 1.0)], &density, &area, 3.0, 1.0, 64)
            .unwrap_err();
        assert!(matches!(err, MetricsError::InvalidRadii { .. }));
    }

    #[test]
    fn comm_bound_randomized_trials() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for trial in 0..50 {
            let w = rng.gen_range(3.0..10.0);
            let h = rng.gen_range(3.0..10.0);
            let area = ConvexPolygon::rectangle(0.0, w, 0.0, h);
            let n = rng.gen_range(2..9);
            let positions: Vec<Point2> = (0..n)
                .map(|_| Point2::new(rng.gen_range(0.0..w), rng.gen_range(0.0..h)))
                .collect();
            let density = if trial % 2 == 0 {
                DensityField::uniform(rng.gen_range(0.3..2.0))
            } else {
                DensityField::gaussian_mixture(vec![Point2::new(
                    rng.gen_range(0.0..w),
                    rng.gen_range(0.0..h),
                )])
            };
            let s = rng.gen_range(0.3..3.0);
            let check =
                verify_comm_bound(&positions, &density, &area, s, 2.0 * s, 96).unwrap();
            assert!(check.holds, "sandwich violated on trial {trial}: {check:?}");
        }
    }
}
