//! Experiment harness: scenario files, parametric sweeps, CSV and SVG
//! emission, and the verification suite behind the `verify` CLI command.

pub mod config;
pub mod output;
pub mod snapshot;
pub mod sweep;
pub mod verify;

pub use config::{load_config, AgentSpec, ConfigError, ScenarioConfig, ValidationError};
pub use output::{metrics_csv_string, read_metrics_csv, write_metrics_csv};
pub use snapshot::{emit_snapshot, svg_document};
pub use sweep::{apply_axis, load_sweep, run_sweep, steady_state, SweepAxis, SweepSpec, SweepValue};
