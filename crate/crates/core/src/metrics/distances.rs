//! Unweighted shortest paths by breadth-first search.

use num_bigint::BigInt;
use rayon::prelude::*;

use super::MetricsError;
use crate::graph::{FrustumGraph, VertexId};
use crate::Rational;

const UNSEEN: u32 = u32::MAX;

/// Distances from one source; `None` marks an unreachable vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: VertexId,
    pub distances: Vec<Option<u32>>,
}

impl DistanceTable {
    pub fn get(&self, v: VertexId) -> Option<u32> {
        self.distances[v as usize]
    }
}

struct Bfs {
    dist: Vec<u32>,
    queue: Vec<VertexId>,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Bfs { dist: vec![UNSEEN; n], queue: Vec::with_capacity(n) }
    }

    /// Fills `dist` from `source`; returns how many vertices were reached.
    fn run(&mut self, g: &FrustumGraph, source: VertexId) -> usize {
        self.dist.fill(UNSEEN);
        self.queue.clear();
        self.dist[source as usize] = 0;
        self.queue.push(source);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u as usize] + 1;
            for &w in g.neighbors(u) {
                if self.dist[w as usize] == UNSEEN {
                    self.dist[w as usize] = next;
                    self.queue.push(w);
                }
            }
        }
        self.queue.len()
    }
}

pub fn bfs(g: &FrustumGraph, source: VertexId) -> DistanceTable {
    let mut state = Bfs::new(g.order());
    state.run(g, source);
    DistanceTable {
        source,
        distances: state.dist.iter().map(|&d| (d != UNSEEN).then_some(d)).collect(),
    }
}

pub fn all_pairs_distances(g: &FrustumGraph) -> Vec<DistanceTable> {
    (0..g.order() as VertexId).into_par_iter().map(|s| bfs(g, s)).collect()
}

/// Diameter and Wiener index from a single all-sources sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceSummary {
    pub diameter: u32,
    pub wiener: u128,
}

pub fn distance_summary(g: &FrustumGraph) -> Result<DistanceSummary, MetricsError> {
    let n = g.order();
    if n == 0 {
        return Ok(DistanceSummary { diameter: 0, wiener: 0 });
    }
    let per_source: Vec<Option<(u32, u128)>> = (0..n as VertexId)
        .into_par_iter()
        .map_init(
            || Bfs::new(n),
            |state, s| {
                if state.run(g, s) != n {
                    return None;
                }
                let ecc = state.dist.iter().copied().max().unwrap_or(0);
                let total: u128 = state.dist.iter().map(|&d| u128::from(d)).sum();
                Some((ecc, total))
            },
        )
        .collect();
    let mut diameter = 0;
    let mut ordered_sum = 0u128;
    for entry in per_source {
        let (ecc, total) = entry.ok_or(MetricsError::Disconnected)?;
        diameter = diameter.max(ecc);
        ordered_sum += total;
    }
    Ok(DistanceSummary { diameter, wiener: ordered_sum / 2 })
}

pub fn diameter(g: &FrustumGraph) -> Result<u32, MetricsError> {
    distance_summary(g).map(|s| s.diameter)
}

/// Sum of distances over unordered pairs.
pub fn wiener_index(g: &FrustumGraph) -> Result<u128, MetricsError> {
    distance_summary(g).map(|s| s.wiener)
}

/// `W / binom(n, 2)`, exact.
pub fn average_distance(g: &FrustumGraph) -> Result<Rational, MetricsError> {
    let n = g.order();
    if n < 2 {
        return Err(MetricsError::TooFewVertices { n });
    }
    let w = wiener_index(g)?;
    Ok(average_from_wiener(w, n))
}

pub(crate) fn average_from_wiener(wiener: u128, n: usize) -> Rational {
    let pairs = (n as u128) * (n as u128 - 1) / 2;
    Rational::new(BigInt::from(wiener), BigInt::from(pairs))
}
