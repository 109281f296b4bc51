//! Direct measurements on generated graphs.

mod clustering;
mod distances;
mod report;

pub use clustering::{global_clustering, local_clustering, neighbor_edges};
pub use distances::{
    all_pairs_distances, average_distance, bfs, diameter, distance_summary, wiener_index,
    DistanceSummary, DistanceTable,
};
pub use report::{metrics_report, DistanceStats, MetricsOptions, MetricsReport, StepMetrics};

pub use crate::cliques::clique_count_containing;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{FrustumGraph, GraphError, VertexId};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("need at least two vertices, found {n}")]
    TooFewVertices { n: usize },
    #[error("vertex {vertex} is not present at time {s}")]
    NotBorn { vertex: VertexId, s: u32 },
    #[error("no vertices were added at step {t}")]
    NoGrowth { t: u32 },
    #[error("a trajectory needs at least two snapshots")]
    ShortTrajectory,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Degree of `x` in the snapshot at time `s`.
pub fn degree_at(g: &FrustumGraph, x: VertexId, s: u32) -> Result<usize, MetricsError> {
    if s > g.horizon() {
        return Err(GraphError::SnapshotOutOfRange { requested: s, horizon: g.horizon() }.into());
    }
    let meta = g.vertices().get(x as usize).ok_or(GraphError::UnknownVertex(x))?;
    if meta.birth_time > s {
        return Err(MetricsError::NotBorn { vertex: x, s });
    }
    let cutoff = g.order_at(s) as VertexId;
    Ok(g.neighbors(x).partition_point(|&w| w < cutoff))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCounts {
    pub t: u32,
    pub n: u64,
    pub e: u64,
}

/// `(t, n_t, e_t)` for every snapshot of `g`.
pub fn trajectory(g: &FrustumGraph) -> Vec<StepCounts> {
    g.counts_by_time()
        .into_iter()
        .enumerate()
        .map(|(t, (n, e))| StepCounts { t: t as u32, n, e })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Increment {
    pub t: u32,
    pub delta_n: u64,
    pub delta_e: u64,
    pub ratio: Rational,
}

/// Per-step growth `(Δn_t, Δe_t, Δe_t / Δn_t)` along a trajectory.
pub fn increment_series(steps: &[StepCounts]) -> Result<Vec<Increment>, MetricsError> {
    if steps.len() < 2 {
        return Err(MetricsError::ShortTrajectory);
    }
    steps
        .windows(2)
        .map(|w| {
            let (prev, cur) = (w[0], w[1]);
            let delta_n = cur.n - prev.n;
            let delta_e = cur.e - prev.e;
            if delta_n == 0 {
                return Err(MetricsError::NoGrowth { t: cur.t });
            }
            Ok(Increment {
                t: cur.t,
                delta_n,
                delta_e,
                ratio: Rational::new(BigInt::from(delta_e), BigInt::from(delta_n)),
            })
        })
        .collect()
}
