//! Per-snapshot measurement report and its text form.
//!
//! One line per time step, fields always in this order:
//! `t n e density diameter wiener avg_distance clustering degrees`.
//! Rationals are written `p/q`; `-` marks a value that was not requested or
//! does not exist, and `err:<reason>` a measurement that failed.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;

use super::distances::{average_from_wiener, distance_summary};
use super::{global_clustering, MetricsError};
use crate::graph::{FrustumGraph, GraphError};
use crate::{format_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MetricsOptions {
    pub distances: bool,
    pub clustering: bool,
}

impl Default for MetricsOptions {
    fn default() -> Self {
        MetricsOptions { distances: true, clustering: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceStats {
    pub diameter: u32,
    pub wiener: u128,
    /// Absent for a single vertex.
    pub average: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepMetrics {
    pub t: u32,
    pub n: u64,
    pub e: u64,
    pub density: Rational,
    pub distances: Option<Result<DistanceStats, MetricsError>>,
    pub clustering: Option<Rational>,
    pub degree_histogram: BTreeMap<usize, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetricsReport {
    pub steps: Vec<StepMetrics>,
}

pub fn metrics_report(g: &FrustumGraph, options: MetricsOptions) -> Result<MetricsReport, GraphError> {
    let mut steps = Vec::with_capacity(g.horizon() as usize + 1);
    for s in 0..=g.horizon() {
        let snap = g.snapshot_at(s)?;
        steps.push(step_metrics(&snap, s, options));
    }
    Ok(MetricsReport { steps })
}

fn step_metrics(snap: &FrustumGraph, t: u32, options: MetricsOptions) -> StepMetrics {
    let n = snap.order() as u64;
    let e = snap.edge_count();
    let density = if n == 0 {
        Rational::from_integer(BigInt::from(0))
    } else {
        Rational::new(BigInt::from(e), BigInt::from(n))
    };
    let distances = options.distances.then(|| {
        distance_summary(snap).map(|s| DistanceStats {
            diameter: s.diameter,
            wiener: s.wiener,
            average: (n >= 2).then(|| average_from_wiener(s.wiener, n as usize)),
        })
    });
    let clustering = options.clustering.then(|| global_clustering(snap));
    let mut degree_histogram = BTreeMap::new();
    for v in 0..snap.order() as u32 {
        *degree_histogram.entry(snap.degree(v)).or_insert(0) += 1;
    }
    StepMetrics { t, n, e, density, distances, clustering, degree_histogram }
}

impl MetricsReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            let _ = write!(out, "t={} n={} e={} density={}", step.t, step.n, step.e, format_rational(&step.density));
            match &step.distances {
                None => out.push_str(" diameter=- wiener=- avg_distance=-"),
                Some(Err(err)) => {
                    let tag = error_tag(err);
                    let _ = write!(out, " diameter={tag} wiener={tag} avg_distance={tag}");
                }
                Some(Ok(d)) => {
                    let avg = d.average.as_ref().map_or_else(|| "-".to_string(), format_rational);
                    let _ = write!(out, " diameter={} wiener={} avg_distance={avg}", d.diameter, d.wiener);
                }
            }
            let clustering = step.clustering.as_ref().map_or_else(|| "-".to_string(), format_rational);
            let degrees: Vec<String> = step
                .degree_histogram
                .iter()
                .map(|(d, c)| format!("{d}:{c}"))
                .collect();
            let _ = writeln!(out, " clustering={clustering} degrees={}", degrees.join(","));
        }
        out
    }
}

fn error_tag(err: &MetricsError) -> String {
    match err {
        MetricsError::Disconnected => "err:disconnected".into(),
        other => format!("err:{}", other.to_string().replace(' ', "_")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;
    use crate::params::ModelParams;
    use crate::sequence::SequenceSpec;

    #[test]
    fn cone_report_lines() {
        let g = generate(&ModelParams::cone(SequenceSpec::Table(vec![1, 1]), 2)).unwrap();
        let report = metrics_report(&g, MetricsOptions::default()).unwrap();
        let text = report.to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(
            lines[0],
            "t=0 n=1 e=0 density=0/1 diameter=0 wiener=0 avg_distance=- clustering=0/1 degrees=0:1"
        );
        assert_eq!(
            lines[2],
            "t=2 n=4 e=3 density=3/4 diameter=3 wiener=10 avg_distance=5/3 clustering=0/1 degrees=1:2,2:2"
        );
    }

    #[test]
    fn disconnected_snapshot_is_not_fatal() {
        let g = FrustumGraph::from_edges(3, &[(0, 1)]).unwrap();
        let report = metrics_report(&g, MetricsOptions::default()).unwrap();
        assert!(report.to_text().contains("diameter=err:disconnected"));
        assert!(report.to_text().contains("clustering=0/1"));
    }

    #[test]
    fn skipped_groups_print_dashes() {
        let g = FrustumGraph::complete(3);
        let report = metrics_report(&g, MetricsOptions { distances: false, clustering: false }).unwrap();
        assert_eq!(
            report.to_text(),
            "t=0 n=3 e=3 density=1/1 diameter=- wiener=- avg_distance=- clustering=- degrees=2:3\n"
        );
    }
}
