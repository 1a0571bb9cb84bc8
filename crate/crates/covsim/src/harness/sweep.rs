//! Parametric sweeps: one scenario axis varied over a list of values, with a
//! metrics CSV and initial/final SVG snapshots per value plus a steady-state
//! summary CSV.

use crate::engine::{self, TrackingMode};
use crate::geometry::Point2;
use crate::harness::config::{load_config, AgentSpec, ConfigError, ScenarioConfig};
use crate::harness::output::write_metrics_csv;
use crate::harness::snapshot::emit_snapshot;
use crate::tracking::FormationPath;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

/// Steady-state detection window (steps) and relative band.
pub const STEADY_WINDOW: usize = 10;
pub const STEADY_BAND: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    Velocity,
    SensingRadius,
    CommRadius,
    AgentCount,
    Mode,
}

impl SweepAxis {
    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::Velocity => "velocity",
            SweepAxis::SensingRadius => "sensing_radius",
            SweepAxis::CommRadius => "comm_radius",
            SweepAxis::AgentCount => "agent_count",
            SweepAxis::Mode => "mode",
        }
    }
}

/// One sweep point: a number for the numeric axes, a mode name for `mode`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SweepValue {
    Number(f64),
    Name(String),
}

impl SweepValue {
    pub fn label(&self) -> String {
        match self {
            SweepValue::Number(v) if v.fract() == 0.0 && v.abs() < 1e15 => {
                format!("{}", *v as i64)
            }
            SweepValue::Number(v) => format!("{v}"),
            SweepValue::Name(s) => s.clone(),
        }
    }
}

/// A base scenario plus the axis and values to vary.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub base: ScenarioConfig,
    pub axis: SweepAxis,
    pub values: Vec<SweepValue>,
}

/// On-disk sweep description; `base` is a scenario file path relative to the
/// sweep file's directory.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    axis: SweepAxis,
    values: Vec<SweepValue>,
    base: String,
    max_steps: Option<usize>,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("cannot parse {path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("sweep values are empty")]
    NoValues,
    #[error("bad sweep value for axis {axis}: {message}")]
    BadValue { axis: &'static str, message: String },
}

/// Loads a sweep file and its base scenario, returning base-config warnings.
pub fn load_sweep(path: impl AsRef<Path>) -> Result<(SweepSpec, Vec<String>), SweepError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| SweepError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let file: SweepFile = toml::from_str(&text).map_err(|e| SweepError::Parse {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if file.values.is_empty() {
        return Err(SweepError::NoValues);
    }
    let base_path = path
        .parent()
        .map(|dir| dir.join(&file.base))
        .unwrap_or_else(|| file.base.clone().into());
    let (mut base, warnings) = load_config(base_path)?;
    if let Some(steps) = file.max_steps {
        base.max_steps = steps;
        base.validate().map_err(ConfigError::Validation)?;
    }
    Ok((
        SweepSpec {
            base,
            axis: file.axis,
            values: file.values,
        },
        warnings,
    ))
}

/// Applies one sweep value to a copy of the base scenario.
pub fn apply_axis(
    base: &ScenarioConfig,
    axis: SweepAxis,
    value: &SweepValue,
) -> Result<ScenarioConfig, SweepError> {
    let mut config = base.clone();
    config.name = format!("{}_{}_{}", base.name, axis.name(), value.label());
    let numeric = |value: &SweepValue| -> Result<f64, SweepError> {
        match value {
            SweepValue::Number(v) => Ok(*v),
            SweepValue::Name(s) => Err(SweepError::BadValue {
                axis: axis.name(),
                message: format!("expected a number, got \"{s}\""),
            }),
        }
    };
    match axis {
        SweepAxis::Velocity => {
            let v = numeric(value)?;
            match &mut config.formation.path {
                FormationPath::Line { speed, .. } | FormationPath::Arc { speed, .. } => {
                    *speed = v;
                }
                _ => {
                    return Err(SweepError::BadValue {
                        axis: axis.name(),
                        message: "base formation path has no speed".into(),
                    })
                }
            }
        }
        SweepAxis::SensingRadius => {
            // Co-varies the communication radius to keep r = 2s.
            let s = numeric(value)?;
            for agent in &mut config.agents {
                agent.sensing_radius = s;
                agent.comm_radius = 2.0 * s;
            }
        }
        SweepAxis::CommRadius => {
            let r = numeric(value)?;
            for agent in &mut config.agents {
                agent.comm_radius = r;
            }
        }
        SweepAxis::AgentCount => {
            let v = numeric(value)?;
            if v < 1.0 || v.fract() != 0.0 {
                return Err(SweepError::BadValue {
                    axis: axis.name(),
                    message: format!("expected a positive integer, got {v}"),
                });
            }
            config.agents = agent_grid(v as usize, base);
        }
        SweepAxis::Mode => {
            let name = match value {
                SweepValue::Name(s) => s.as_str(),
                SweepValue::Number(v) => {
                    return Err(SweepError::BadValue {
                        axis: axis.name(),
                        message: format!("expected a mode name, got {v}"),
                    })
                }
            };
            config.mode = match name {
                "importance" => TrackingMode::Importance,
                "boundary" => TrackingMode::Boundary,
                "static" => TrackingMode::Static,
                other => {
                    return Err(SweepError::BadValue {
                        axis: axis.name(),
                        message: format!("unknown mode \"{other}\""),
                    })
                }
            };
        }
    }
    Ok(config)
}

/// Two-row grid of `n` agents at 1 m spacing, centered where the base agents
/// were, keeping the base radii.
fn agent_grid(n: usize, base: &ScenarioConfig) -> Vec<AgentSpec> {
    let template = base.agents.first().copied().unwrap_or(AgentSpec {
        position: Point2::new(0.0, 0.0),
        sensing_radius: 3.0,
        comm_radius: 6.0,
    });
    let count = base.agents.len().max(1) as f64;
    let center = base.agents.iter().fold(Point2::new(0.0, 0.0), |acc, a| {
        Point2::new(acc.x + a.position.x / count, acc.y + a.position.y / count)
    });
    let rows = if n > 1 { 2 } else { 1 };
    let cols = n.div_ceil(rows);
    let spacing = 1.0;
    let x_half = (cols - 1) as f64 / 2.0;
    let y_half = (rows - 1) as f64 / 2.0;
    (0..n)
        .map(|k| {
            let (row, col) = (k / cols, k % cols);
            AgentSpec {
                position: Point2::new(
                    center.x + (col as f64 - x_half) * spacing,
                    center.y + (row as f64 - y_half) * spacing,
                ),
                ..template
            }
        })
        .collect()
}

/// Steady-state estimate of a metric series: mean over the last
/// [`STEADY_WINDOW`] entries, converged when their range is below
/// [`STEADY_BAND`] of the mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyState {
    pub mean: f64,
    pub converged: bool,
}

pub fn steady_state(series: &[f64]) -> Option<SteadyState> {
    if series.len() < STEADY_WINDOW {
        return None;
    }
    let tail = &series[series.len() - STEADY_WINDOW..];
    let mean = tail.iter().sum::<f64>() / STEADY_WINDOW as f64;
    let range = tail.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
        - tail.iter().cloned().fold(f64::INFINITY, f64::min);
    let converged = range < STEADY_BAND * mean.abs() || range == 0.0;
    Some(SteadyState { mean, converged })
}

/// One row of the sweep summary CSV. Steady values are reported only when
/// their series converged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub axis: String,
    pub value: String,
    pub status: String,
    pub steps: usize,
    pub converged: bool,
    pub steady_sum_dist: Option<f64>,
    pub steady_mean_dist: Option<f64>,
    pub steady_cost_full: Option<f64>,
    pub worst_min_tree_slack: Option<f64>,
}

/// Runs every sweep point, writing one metrics CSV and initial/final SVG
/// snapshots per value plus `summary.csv`. Per-run failures are recorded in
/// their summary row; the remaining points still run.
pub fn run_sweep(spec: &SweepSpec, out_dir: impl AsRef<Path>) -> Result<Vec<SummaryRow>, SweepError> {
    let out_dir = out_dir.as_ref();
    std::fs::create_dir_all(out_dir).map_err(|e| SweepError::Io {
        path: out_dir.display().to_string(),
        message: e.to_string(),
    })?;
    let mut rows = Vec::with_capacity(spec.values.len());
    for value in &spec.values {
        rows.push(run_point(spec, value, out_dir));
    }
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in &rows {
        writer.serialize(row).expect("in-memory CSV write");
    }
    let summary = writer.into_inner().expect("in-memory CSV flush");
    std::fs::write(out_dir.join("summary.csv"), summary).map_err(|e| SweepError::Io {
        path: out_dir.display().to_string(),
        message: e.to_string(),
    })?;
    Ok(rows)
}

fn run_point(spec: &SweepSpec, value: &SweepValue, out_dir: &Path) -> SummaryRow {
    let label = value.label();
    let stem = format!("{}_{}", spec.axis.name(), label);
    let mut row = SummaryRow {
        axis: spec.axis.name().into(),
        value: label,
        status: "ok".into(),
        steps: 0,
        converged: false,
        steady_sum_dist: None,
        steady_mean_dist: None,
        steady_cost_full: None,
        worst_min_tree_slack: None,
    };
    let config = match apply_axis(&spec.base, spec.axis, value) {
        Ok(config) => config,
        Err(e) => {
            row.status = e.to_string();
            return row;
        }
    };
    let states = match engine::run(&config) {
        Ok(states) => states,
        Err(e) => {
            row.status = e.to_string();
            return row;
        }
    };
    row.steps = states.len() - 1;
    let records: Vec<_> = states.iter().map(|(_, m)| m.clone()).collect();
    if let Err(e) = write_metrics_csv(out_dir.join(format!("metrics_{stem}.csv")), &records) {
        row.status = format!("metrics write failed: {e}");
        return row;
    }
    let (first, _) = states.first().expect("run yields the initial state");
    let (last, _) = states.last().expect("run yields at least one state");
    if let Err(e) = emit_snapshot(first, out_dir.join(format!("{stem}_initial.svg")))
        .and_then(|_| emit_snapshot(last, out_dir.join(format!("{stem}_final.svg"))))
    {
        row.status = format!("snapshot write failed: {e}");
        return row;
    }

    let sum_dist: Vec<f64> = records.iter().map(|m| m.sum_dist).collect();
    let mean_dist: Vec<f64> = records.iter().map(|m| m.mean_dist).collect();
    let cost_full: Vec<f64> = records.iter().map(|m| m.cost_full).collect();
    if let Some(s) = steady_state(&sum_dist) {
        row.converged = s.converged;
        if s.converged {
            row.steady_sum_dist = Some(s.mean);
        }
    }
    if let Some(s) = steady_state(&mean_dist) {
        if s.converged {
            row.steady_mean_dist = Some(s.mean);
        }
    }
    if let Some(s) = steady_state(&cost_full) {
        if s.converged {
            row.steady_cost_full = Some(s.mean);
        }
    }
    row.worst_min_tree_slack = records
        .iter()
        .map(|m| m.min_tree_slack)
        .fold(None, |acc: Option<f64>, v| {
            Some(acc.map_or(v, |a| a.min(v)))
        });
    row
}
