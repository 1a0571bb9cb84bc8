//! Target-tracking machinery: scripted formation trajectories, the per-step
//! Gaussian importance field centered on the targets, and the fictitious
//! bounding rectangle that redefines the working area around agents and
//! targets.

use crate::geometry::{ConvexPolygon, DensityField, Point2, Vec2};
use crate::partition::AgentState;
use serde::{Deserialize, Serialize};

/// Width given to a degenerate (zero-extent) bounding-rectangle axis.
const DEGENERATE_EXTENT: f64 = 1e-3;

/// A tracked target (leader) with a scripted position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TargetState {
    pub id: usize,
    pub position: Point2,
}

/// Mean of the current target positions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormationCenter {
    pub position: Point2,
}

/// How the target formation moves over simulation steps.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FormationPath {
    /// Targets never move.
    Static,
    /// Rigid translation along `direction` by `speed` meters per step.
    Line { direction: Vec2, speed: f64 },
    /// Each target orbits `center` on its own radius at a shared linear
    /// speed (meters per step), so inner targets sweep larger angles.
    Arc {
        center: Point2,
        radii: Vec<f64>,
        speed: f64,
    },
    /// Explicit waypoint sets, one per step; the last frame repeats.
    Scripted { frames: Vec<Vec<Point2>> },
}

/// A rows x cols target grid with a path; the grid is centered on `center`
/// at step zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormationTrajectory {
    pub rows: usize,
    pub cols: usize,
    pub spacing: f64,
    pub center: Point2,
    pub path: FormationPath,
}

impl FormationTrajectory {
    pub fn target_count(&self) -> usize {
        match &self.path {
            FormationPath::Scripted { frames } => {
                frames.first().map(|f| f.len()).unwrap_or(0)
            }
            _ => self.rows * self.cols,
        }
    }

    /// Grid positions at step zero, row-major from the lower-left corner.
    pub fn initial_positions(&self) -> Vec<Point2> {
        if let FormationPath::Scripted { frames } = &self.path {
            return frames.first().cloned().unwrap_or_default();
        }
        let mut positions = Vec::with_capacity(self.rows * self.cols);
        let x_half = (self.cols.saturating_sub(1)) as f64 / 2.0;
        let y_half = (self.rows.saturating_sub(1)) as f64 / 2.0;
        for row in 0..self.rows {
            for col in 0..self.cols {
                positions.push(Point2::new(
                    self.center.x + (col as f64 - x_half) * self.spacing,
                    self.center.y + (row as f64 - y_half) * self.spacing,
                ));
            }
        }
        positions
    }
}

/// Deterministic target positions at the given step.
pub fn advance_targets(traj: &FormationTrajectory, step: usize) -> Vec<TargetState> {
    let initial = traj.initial_positions();
    let positions: Vec<Point2> = match &traj.path {
        FormationPath::Static => initial,
        FormationPath::Line { direction, speed } => {
            let dir = direction
                .normalized()
                .expect("line path direction validated at configuration time");
            let shift = dir * (speed * step as f64);
            initial.into_iter().map(|p| p + shift).collect()
        }
        FormationPath::Arc {
            center,
            radii,
            speed,
        } => initial
            .iter()
            .enumerate()
            .map(|(k, p)| {
                let radius = radii[k];
                let start_angle = (p.y - center.y).atan2(p.x - center.x);
                let angle = start_angle + speed * step as f64 / radius;
                Point2::new(
                    center.x + radius * angle.cos(),
                    center.y + radius * angle.sin(),
                )
            })
            .collect(),
        FormationPath::Scripted { frames } => {
            frames[step.min(frames.len() - 1)].clone()
        }
    };
    positions
        .into_iter()
        .enumerate()
        .map(|(id, position)| TargetState { id, position })
        .collect()
}

/// One unit-variance Gaussian bump per target, combined by summation.
pub fn update_density(targets: &[TargetState]) -> DensityField {
    DensityField::gaussian_mixture(targets.iter().map(|t| t.position).collect())
}

/// The minimum axis-aligned rectangle containing every agent and target;
/// zero-width extents are inflated so the polygon stays valid.
pub fn redefine_boundary(agents: &[AgentState], targets: &[TargetState]) -> ConvexPolygon {
    let points = agents
        .iter()
        .map(|a| a.position)
        .chain(targets.iter().map(|t| t.position));
    let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in points {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    let (x0, x1) = inflate_if_degenerate(lo.x, hi.x);
    let (y0, y1) = inflate_if_degenerate(lo.y, hi.y);
    ConvexPolygon::rectangle(x0, x1, y0, y1)
}

fn inflate_if_degenerate(lo: f64, hi: f64) -> (f64, f64) {
    if hi - lo < DEGENERATE_EXTENT {
        let mid = 0.5 * (lo + hi);
        (mid - 0.5 * DEGENERATE_EXTENT, mid + 0.5 * DEGENERATE_EXTENT)
    } else {
        (lo, hi)
    }
}

/// Arithmetic mean of the target positions.
pub fn formation_center(targets: &[TargetState]) -> FormationCenter {
    assert!(!targets.is_empty(), "formation center needs at least one target");
    let n = targets.len() as f64;
    let (sx, sy) = targets
        .iter()
        .fold((0.0, 0.0), |(sx, sy), t| (sx + t.position.x, sy + t.position.y));
    FormationCenter {
        position: Point2::new(sx / n, sy / n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn line_formation(speed: f64) -> FormationTrajectory {
        FormationTrajectory {
            rows: 3,
            cols: 4,
            spacing: 2.0,
            center: Point2::new(0.0, 0.0),
            path: FormationPath::Line {
                direction: Vec2::new(1.0, 0.0),
                speed,
            },
        }
    }

    #[test]
    fn static_targets_ignore_step() {
        let traj = FormationTrajectory {
            path: FormationPath::Static,
            ..line_formation(0.0)
        };
        assert_eq!(advance_targets(&traj, 0), advance_targets(&traj, 57));
    }

    #[test]
    fn line_displacement_accumulates() {
        let traj = line_formation(0.3);
        let start = advance_targets(&traj, 0);
        let later = advance_targets(&traj, 10);
        for (a, b) in start.iter().zip(&later) {
            assert_relative_eq!(b.position.x - a.position.x, 3.0, epsilon = 1e-12);
            assert_relative_eq!(b.position.y - a.position.y, 0.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn grid_layout_centered() {
        let traj = line_formation(0.3);
        let targets = advance_targets(&traj, 0);
        assert_eq!(targets.len(), 12);
        let center = formation_center(&targets);
        assert_relative_eq!(center.position.x, 0.0, epsilon = 1e-12);
        assert_relative_eq!(center.position.y, 0.0, epsilon = 1e-12);
        // 4 columns at spacing 2: x spans [-3, 3]; 3 rows: y spans [-2, 2].
        let xs: Vec<f64> = targets.iter().map(|t| t.position.x).collect();
        assert_relative_eq!(xs.iter().cloned().fold(f64::INFINITY, f64::min), -3.0);
        assert_relative_eq!(xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max), 3.0);
    }

    #[test]
    fn arc_angle_ratio_matches_radii() {
        // Outer 750 mm and inner 150 mm at equal linear speed: the outer
        // target sweeps one fifth of the inner one's angle per step.
        let center = Point2::new(0.0, 0.0);
        let traj = FormationTrajectory {
            rows: 1,
            cols: 2,
            spacing: 0.6,
            center: Point2::new(0.45, 0.0),
            path: FormationPath::Arc {
                center,
                radii: vec![0.15, 0.75],
                speed: 0.035,
            },
        };
        let before = advance_targets(&traj, 0);
        let after = advance_targets(&traj, 1);
        let angle = |p: Point2, q: Point2| {
            let a0 = (p.y - center.y).atan2(p.x - center.x);
            let a1 = (q.y - center.y).atan2(q.x - center.x);
            a1 - a0
        };
        let inner = angle(before[0].position, after[0].position);
        let outer = angle(before[1].position, after[1].position);
        assert_relative_eq!(outer / inner, 0.2, epsilon = 1e-12);
        // Linear speed preserved on both circles.
        assert_relative_eq!(inner * 0.15, 0.035, epsilon = 1e-12);
        assert_relative_eq!(outer * 0.75, 0.035, epsilon = 1e-12);
    }

    #[test]
    fn scripted_frames_clamp_at_end() {
        let traj = FormationTrajectory {
            rows: 1,
            cols: 1,
            spacing: 1.0,
            center: Point2::new(0.0, 0.0),
            path: FormationPath::Scripted {
                frames: vec![
                    vec![Point2::new(0.0, 0.0)],
                    vec![Point2::new(1.0, 0.0)],
                ],
            },
        };
        assert_eq!(advance_targets(&traj, 1)[0].position, Point2::new(1.0, 0.0));
        assert_eq!(advance_targets(&traj, 9)[0].position, Point2::new(1.0, 0.0));
    }

    #[test]
    fn density_bumps_from_targets() {
        let targets = vec![
            TargetState { id: 0, position: Point2::new(1.0, 0.0) },
            TargetState { id: 1, position: Point2::new(1.0, 0.0) },
        ];
        let density = update_density(&targets);
        assert_relative_eq!(density.evaluate(Point2::new(1.0, 0.0)), 2.0, epsilon = 1e-12);
    }

    fn agent_at(x: f64, y: f64) -> AgentState {
        AgentState {
            id: 0,
            position: Point2::new(x, y),
            sensing_radius: 1.0,
            comm_radius: 2.0,
        }
    }

    #[test]
    fn boundary_is_min_max_rectangle() {
        let agents = vec![agent_at(0.0, 0.0)];
        let targets = vec![TargetState { id: 0, position: Point2::new(2.0, 3.0) }];
        let rect = redefine_boundary(&agents, &targets);
        let (lo, hi) = rect.bounding_box().unwrap();
        assert_eq!((lo.x, lo.y, hi.x, hi.y), (0.0, 0.0, 2.0, 3.0));
        assert_relative_eq!(rect.area(), 6.0, epsilon = 1e-12);
    }

    #[test]
    fn boundary_of_coincident_points_inflated() {
        let agents = vec![agent_at(1.0, 1.0)];
        let targets = vec![TargetState { id: 0, position: Point2::new(1.0, 1.0) }];
        let rect = redefine_boundary(&agents, &targets);
        let (lo, hi) = rect.bounding_box().unwrap();
        assert_relative_eq!(hi.x - lo.x, 1e-3, epsilon = 1e-12);
        assert_relative_eq!(hi.y - lo.y, 1e-3, epsilon = 1e-12);
        assert!(rect.contains(Point2::new(1.0, 1.0)));
    }

    #[test]
    fn boundary_spans_mixed_sets() {
        let agents = vec![agent_at(-1.0, 0.0), agent_at(1.0, 0.0)];
        let targets = vec![TargetState { id: 0, position: Point2::new(0.0, 2.0) }];
        let rect = redefine_boundary(&agents, &targets);
        let (lo, hi) = rect.bounding_box().unwrap();
        assert_eq!((lo.x, hi.x, lo.y, hi.y), (-1.0, 1.0, 0.0, 2.0));
        for a in &agents {
            assert!(rect.contains(a.position));
        }
        for t in &targets {
            assert!(rect.contains(t.position));
        }
    }

    #[test]
    fn center_examples() {
        let single = vec![TargetState { id: 0, position: Point2::new(4.0, -2.0) }];
        assert_eq!(formation_center(&single).position, Point2::new(4.0, -2.0));
        let pair = vec![
            TargetState { id: 0, position: Point2::new(0.0, 0.0) },
            TargetState { id: 1, position: Point2::new(2.0, 0.0) },
        ];
        assert_eq!(formation_center(&pair).position, Point2::new(1.0, 0.0));
    }

    #[test]
    fn replay_determinism() {
        let traj = line_formation(0.4);
        for step in [0, 3, 17] {
            assert_eq!(advance_targets(&traj, step), advance_targets(&traj, step));
        }
    }
}
