//! Metrics CSV emission with a fixed schema:
//! `step,cost_core,cost_full,sum_dist,mean_dist,covered_targets,min_tree_slack`.

use crate::metrics::MetricsRecord;
use std::io;
use std::path::Path;

/// Serializes records to CSV text; shortest-round-trip float formatting keeps
/// reruns byte-identical.
pub fn metrics_csv_string(records: &[MetricsRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for record in records {
        writer.serialize(record).expect("in-memory CSV write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory CSV flush"))
        .expect("CSV output is UTF-8")
}

pub fn write_metrics_csv(path: impl AsRef<Path>, records: &[MetricsRecord]) -> io::Result<()> {
    std::fs::write(path, metrics_csv_string(records))
}

pub fn read_metrics_csv(path: impl AsRef<Path>) -> Result<Vec<MetricsRecord>, csv::Error> {
    let mut reader = csv::Reader::from_path(path)?;
    reader.deserialize().collect()
}
