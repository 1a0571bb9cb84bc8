//! Scenario configuration: the declarative experiment description, its TOML
//! schema, and load-time validation that reports every violated invariant
//! with a field path.

use crate::connectivity::communication_components;
use crate::engine::{effective_comm_radius, KinematicsConfig, TrackingMode};
use crate::geometry::{ConvexPolygon, Point2};
use crate::partition::{AgentState, MIN_SEPARATION};
use crate::tracking::{FormationPath, FormationTrajectory};
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

/// One agent's initial placement and radii.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgentSpec {
    pub position: Point2,
    pub sensing_radius: f64,
    pub comm_radius: f64,
}

/// Declarative description of one experiment. Numbers are SI units: meters,
/// meters per step, radians per micro-step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub name: String,
    pub mode: TrackingMode,
    #[serde(default)]
    pub safety_radius: f64,
    pub max_steps: usize,
    #[serde(default = "default_disk_segments")]
    pub disk_segments: usize,
    #[serde(default = "default_grid_resolution")]
    pub grid_resolution: usize,
    /// Initial working area, a counter-clockwise convex polygon.
    pub working_area: ConvexPolygon,
    pub agents: Vec<AgentSpec>,
    pub formation: FormationTrajectory,
    #[serde(default)]
    pub kinematics: KinematicsConfig,
}

fn default_disk_segments() -> usize {
    32
}

fn default_grid_resolution() -> usize {
    128
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

/// Every invariant the configuration violates, with field paths.
#[derive(Debug, Error, Clone, PartialEq)]
pub struct ValidationError {
    pub issues: Vec<String>,
}

impl std::fmt::Display for ValidationError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "invalid scenario: {}", self.issues.join("; "))
    }
}

impl ScenarioConfig {
    pub fn agent_states(&self) -> Vec<AgentState> {
        self.agents
            .iter()
            .enumerate()
            .map(|(id, spec)| AgentState {
                id,
                position: spec.position,
                sensing_radius: spec.sensing_radius,
                comm_radius: spec.comm_radius,
            })
            .collect()
    }

    /// Checks every invariant; returns non-fatal warnings on success.
    pub fn validate(&self) -> Result<Vec<String>, ValidationError> {
        let mut issues = Vec::new();
        let mut warnings = Vec::new();

        if self.max_steps == 0 {
            issues.push("max_steps: must be at least 1".into());
        }
        if self.disk_segments < 8 {
            issues.push(format!(
                "disk_segments: must be at least 8, got {}",
                self.disk_segments
            ));
        }
        if self.grid_resolution < 16 {
            issues.push(format!(
                "grid_resolution: must be at least 16, got {}",
                self.grid_resolution
            ));
        }
        if !(self.safety_radius >= 0.0) {
            issues.push(format!(
                "safety_radius: must be non-negative, got {}",
                self.safety_radius
            ));
        }
        if self.agents.is_empty() {
            issues.push("agents: at least one agent is required".into());
        }
        for (i, agent) in self.agents.iter().enumerate() {
            if !agent.position.is_finite() {
                issues.push(format!("agents[{i}].position: coordinates must be finite"));
                continue;
            }
            if !self.working_area.contains(agent.position) {
                issues.push(format!(
                    "agents[{i}].position: ({}, {}) is outside the working area",
                    agent.position.x, agent.position.y
                ));
            }
            if !(agent.sensing_radius > 0.0) {
                issues.push(format!(
                    "agents[{i}].sensing_radius: must be positive, got {}",
                    agent.sensing_radius
                ));
            }
            if !(agent.comm_radius > 0.0) {
                issues.push(format!(
                    "agents[{i}].comm_radius: must be positive, got {}",
                    agent.comm_radius
                ));
            } else if agent.comm_radius < 2.0 * agent.sensing_radius {
                warnings.push(format!(
                    "agents[{i}]: comm_radius {} is below twice the sensing radius {}; the \
                     distributed-execution bound does not hold (the centralized run proceeds)",
                    agent.comm_radius, agent.sensing_radius
                ));
            }
        }
        for i in 0..self.agents.len() {
            for j in i + 1..self.agents.len() {
                let d = self.agents[i].position.distance(self.agents[j].position);
                if d < MIN_SEPARATION {
                    issues.push(format!(
                        "agents[{i}] and agents[{j}]: separation {d} is below {MIN_SEPARATION}"
                    ));
                }
            }
        }

        self.validate_formation(&mut issues);

        if !self.agents.is_empty() && issues.is_empty() {
            let states = self.agent_states();
            let positions: Vec<Point2> = states.iter().map(|a| a.position).collect();
            let components =
                communication_components(&positions, effective_comm_radius(&states));
            if components.len() > 1 {
                issues.push(format!(
                    "agents: initial communication graph is disconnected; components: {}",
                    components
                        .iter()
                        .map(|c| format!("{c:?}"))
                        .collect::<Vec<_>>()
                        .join(" / ")
                ));
            }
        }

        if issues.is_empty() {
            Ok(warnings)
        } else {
            Err(ValidationError { issues })
        }
    }

    fn validate_formation(&self, issues: &mut Vec<String>) {
        let f = &self.formation;
        if f.target_count() == 0 {
            issues.push("formation: at least one target is required".into());
        }
        match &f.path {
            FormationPath::Scripted { frames } => {
                if frames.is_empty() {
                    issues.push("formation.path.frames: must be non-empty".into());
                } else if frames.iter().any(|fr| fr.len() != frames[0].len()) {
                    issues.push(
                        "formation.path.frames: all waypoint sets must have the same size".into(),
                    );
                }
            }
            FormationPath::Line { direction, speed } => {
                if direction.normalized().is_none() {
                    issues.push("formation.path.direction: must be non-zero".into());
                }
                if !(*speed >= 0.0) {
                    issues.push(format!(
                        "formation.path.speed: must be non-negative, got {speed}"
                    ));
                }
                if !(f.spacing > 0.0) {
                    issues.push(format!(
                        "formation.spacing: must be positive, got {}",
                        f.spacing
                    ));
                }
            }
            FormationPath::Arc {
                radii, speed, ..
            } => {
                if radii.len() != f.rows * f.cols {
                    issues.push(format!(
                        "formation.path.radii: expected {} entries (rows x cols), got {}",
                        f.rows * f.cols,
                        radii.len()
                    ));
                }
                if radii.iter().any(|r| !(*r > 0.0)) {
                    issues.push("formation.path.radii: all radii must be positive".into());
                }
                if !(*speed >= 0.0) {
                    issues.push(format!(
                        "formation.path.speed: must be non-negative, got {speed}"
                    ));
                }
            }
            FormationPath::Static => {
                if !(f.spacing > 0.0) {
                    issues.push(format!(
                        "formation.spacing: must be positive, got {}",
                        f.spacing
                    ));
                }
            }
        }
    }
}

/// Loads and validates a scenario file, returning the config and any
/// non-fatal warnings.
pub fn load_config(path: impl AsRef<Path>) -> Result<(ScenarioConfig, Vec<String>), ConfigError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let config: ScenarioConfig = toml::from_str(&text).map_err(|e| ConfigError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let warnings = config.validate()?;
    Ok((config, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec2;

    fn base_config() -> ScenarioConfig {
        ScenarioConfig {
            name: "test".into(),
            mode: TrackingMode::Boundary,
            safety_radius: 0.0,
            max_steps: 10,
            disk_segments: 32,
            grid_resolution: 64,
            working_area: ConvexPolygon::rectangle(-14.0, 20.0, -8.0, 8.0),
            agents: vec![
                AgentSpec {
                    position: Point2::new(-10.0, 0.0),
                    sensing_radius: 3.0,
                    comm_radius: 6.0,
                },
                AgentSpec {
                    position: Point2::new(-9.0, 0.0),
                    sensing_radius: 3.0,
                    comm_radius: 6.0,
                },
            ],
            formation: FormationTrajectory {
                rows: 3,
                cols: 4,
                spacing: 2.0,
                center: Point2::new(0.0, 0.0),
                path: FormationPath::Line {
                    direction: Vec2::new(1.0, 0.0),
                    speed: 0.3,
                },
            },
            kinematics: KinematicsConfig::Integrator,
        }
    }

    #[test]
    fn valid_config_passes() {
        assert!(base_config().validate().unwrap().is_empty());
    }

    #[test]
    fn agent_outside_area_named() {
        let mut config = base_config();
        config.agents[1].position = Point2::new(100.0, 0.0);
        let err = config.validate().unwrap_err();
        assert!(err.issues.iter().any(|i| i.starts_with("agents[1].position")));
    }

    #[test]
    fn disconnected_graph_lists_components() {
        let mut config = base_config();
        config.agents[1].position = Point2::new(5.0, 0.0); // 15 m from agent 0, r = 6
        let err = config.validate().unwrap_err();
        let issue = err
            .issues
            .iter()
            .find(|i| i.contains("disconnected"))
            .expect("connectivity issue");
        assert!(issue.contains("[0]") && issue.contains("[1]"));
    }

    #[test]
    fn zero_steps_rejected() {
        let mut config = base_config();
        config.max_steps = 0;
        let err = config.validate().unwrap_err();
        assert!(err.issues.iter().any(|i| i.starts_with("max_steps")));
    }

    #[test]
    fn zero_agents_rejected() {
        let mut config = base_config();
        config.agents.clear();
        let err = config.validate().unwrap_err();
        assert!(err.issues.iter().any(|i| i.contains("at least one agent")));
    }

    #[test]
    fn small_comm_radius_warns() {
        let mut config = base_config();
        for agent in &mut config.agents {
            agent.comm_radius = 4.0; // below 2 * s = 6, still connected at 1 m
        }
        let warnings = config.validate().unwrap();
        assert_eq!(warnings.len(), 2);
        assert!(warnings[0].contains("twice the sensing radius"));
    }

    #[test]
    fn toml_round_trip() {
        let text = r#"
            name = "roundtrip"
            mode = "importance"
            max_steps = 5
            working_area = [[0.0, 0.0], [10.0, 0.0], [10.0, 10.0], [0.0, 10.0]]

            [[agents]]
            position = [1.0, 1.0]
            sensing_radius = 2.0
            comm_radius = 4.0

            [formation]
            rows = 1
            cols = 2
            spacing = 1.0
            center = [5.0, 5.0]
            path = { kind = "static" }
        "#;
        let config: ScenarioConfig = toml::from_str(text).unwrap();
        assert_eq!(config.mode, TrackingMode::Importance);
        assert_eq!(config.disk_segments, 32); // default
        assert_eq!(config.grid_resolution, 128); // default
        assert_eq!(config.kinematics, KinematicsConfig::Integrator); // default
        assert_eq!(config.formation.target_count(), 2);
        config.validate().unwrap();
    }

    #[test]
    fn unicycle_kinematics_parse() {
        let text = r#"
            kind = "unicycle"
            max_linear = 0.05
            max_angular = 0.3
            tolerance = 0.065
        "#;
        let kinematics: KinematicsConfig = toml::from_str(text).unwrap();
        match kinematics {
            KinematicsConfig::Unicycle(p) => {
                assert_eq!(p.tolerance, 0.065);
                assert_eq!(p.max_micro_steps, 10_000); // default budget
            }
            other => panic!("expected unicycle, got {other:?}"),
        }
    }
}
