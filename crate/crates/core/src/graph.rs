//! Simple undirected graphs carrying per-vertex birth times and cap provenance.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = u32;
pub type CapId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexMeta {
    pub id: VertexId,
    pub birth_time: u32,
    /// `None` for seed vertices.
    pub cap_id: Option<CapId>,
}

/// One clique extension: the `f_t`-clique `parent_clique` of the previous
/// snapshot grew the `g_t` vertices in `new_vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CapRecord {
    pub cap_id: CapId,
    pub time: u32,
    pub parent_clique: Vec<VertexId>,
    pub new_vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("snapshot time {requested} is past the graph horizon {horizon}")]
    SnapshotOutOfRange { requested: u32, horizon: u32 },
    #[error("vertex {0} does not exist")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex metadata is inconsistent: {0}")]
    BadMetadata(String),
    #[error("cap record {cap_id} is inconsistent: {reason}")]
    BadCap { cap_id: CapId, reason: String },
}

/// A frustum graph together with the provenance needed to rebuild every
/// earlier snapshot.
///
/// Vertex ids are dense and assigned in creation order, so birth times are
/// non-decreasing in the id and every snapshot is an id prefix. Adjacency
/// lists are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrustumGraph {
    adjacency: Vec<Vec<VertexId>>,
    vertices: Vec<VertexMeta>,
    caps: Vec<CapRecord>,
    edge_count: u64,
    horizon: u32,
}

impl FrustumGraph {
    /// The complete graph `K_n`, all vertices born at time 0.
    pub fn complete(n: usize) -> Self {
        let adjacency = (0..n)
            .map(|v| (0..n as VertexId).filter(|&u| u as usize != v).collect())
            .collect();
        let vertices = (0..n as VertexId)
            .map(|id| VertexMeta { id, birth_time: 0, cap_id: None })
            .collect();
        FrustumGraph {
            adjacency,
            vertices,
            caps: Vec::new(),
            edge_count: (n * n.saturating_sub(1) / 2) as u64,
            horizon: 0,
        }
    }

    /// An arbitrary simple graph with every vertex treated as a seed.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let vertices = (0..n as VertexId)
            .map(|id| VertexMeta { id, birth_time: 0, cap_id: None })
            .collect();
        Self::from_parts(vertices, edges, Vec::new())
    }

    /// Rebuilds a graph from exported parts, checking every structural
    /// invariant that does not require regeneration.
    pub fn from_parts(
        vertices: Vec<VertexMeta>,
        edges: &[(VertexId, VertexId)],
        caps: Vec<CapRecord>,
    ) -> Result<Self, GraphError> {
        let n = vertices.len();
        for (i, meta) in vertices.iter().enumerate() {
            if meta.id as usize != i {
                return Err(GraphError::BadMetadata(format!("id {} at position {i}", meta.id)));
            }
            if i > 0 && meta.birth_time < vertices[i - 1].birth_time {
                return Err(GraphError::BadMetadata(format!("birth time decreases at id {i}")));
            }
            if (meta.birth_time == 0) != meta.cap_id.is_none() {
                return Err(GraphError::BadMetadata(format!(
                    "vertex {i}: only seeds (birth 0) lack a cap"
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(GraphError::UnknownVertex(u));
            }
            if v as usize >= n {
                return Err(GraphError::UnknownVertex(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(u as VertexId, w[0]));
            }
        }
        let horizon = vertices
            .iter()
            .map(|m| m.birth_time)
            .chain(caps.iter().map(|c| c.time))
            .max()
            .unwrap_or(0);
        for (i, cap) in caps.iter().enumerate() {
            let bad = |reason: &str| GraphError::BadCap { cap_id: cap.cap_id, reason: reason.into() };
            if cap.cap_id as usize != i {
                return Err(bad("cap ids must be dense and ordered"));
            }
            if cap.time == 0 {
                return Err(bad("caps start at t=1"));
            }
            for &v in &cap.new_vertices {
                let meta = vertices.get(v as usize).ok_or(GraphError::UnknownVertex(v))?;
                if meta.cap_id != Some(cap.cap_id) || meta.birth_time != cap.time {
                    return Err(bad("new vertex metadata disagrees with the cap"));
                }
            }
            for &v in &cap.parent_clique {
                let meta = vertices.get(v as usize).ok_or(GraphError::UnknownVertex(v))?;
                if meta.birth_time >= cap.time {
                    return Err(bad("parent vertex is not older than the cap"));
                }
            }
        }
        for meta in &vertices {
            if let Some(cap_id) = meta.cap_id {
                let known = caps
                    .get(cap_id as usize)
                    .is_some_and(|c| c.new_vertices.contains(&meta.id));
                if !known {
                    return Err(GraphError::BadMetadata(format!(
                        "vertex {} refers to missing cap {cap_id}",
                        meta.id
                    )));
                }
            }
        }
        Ok(FrustumGraph {
            adjacency,
            vertices,
            caps,
            edge_count: edges.len() as u64,
            horizon,
        })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> &[VertexMeta] {
        &self.vertices
    }

    pub fn caps(&self) -> &[CapRecord] {
        &self.caps
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            let u = u as VertexId;
            list.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Number of vertices born at or before `s`.
    pub fn order_at(&self, s: u32) -> usize {
        self.vertices.partition_point(|m| m.birth_time <= s)
    }

    /// Vertices born exactly at `s`.
    pub fn born_at(&self, s: u32) -> std::ops::Range<VertexId> {
        let start = if s == 0 { 0 } else { self.order_at(s - 1) };
        start as VertexId..self.order_at(s) as VertexId
    }

    /// Induced subgraph on the vertices born at or before `s`.
    pub fn snapshot_at(&self, s: u32) -> Result<FrustumGraph, GraphError> {
        if s > self.horizon {
            return Err(GraphError::SnapshotOutOfRange { requested: s, horizon: self.horizon });
        }
        if s == self.horizon {
            return Ok(self.clone());
        }
        let cutoff = self.order_at(s);
        let adjacency: Vec<Vec<VertexId>> = self.adjacency[..cutoff]
            .iter()
            .map(|list| {
                let end = list.partition_point(|&v| (v as usize) < cutoff);
                list[..end].to_vec()
            })
            .collect();
        let edge_count = adjacency.iter().map(|l| l.len() as u64).sum::<u64>() / 2;
        let caps_end = self.caps.partition_point(|c| c.time <= s);
        Ok(FrustumGraph {
            adjacency,
            vertices: self.vertices[..cutoff].to_vec(),
            caps: self.caps[..caps_end].to_vec(),
            edge_count,
            horizon: s,
        })
    }

    /// `(n_s, e_s)` for every `s` in `0..=horizon`, without materialising snapshots.
    pub fn counts_by_time(&self) -> Vec<(u64, u64)> {
        let steps = self.horizon as usize + 1;
        let mut new_vertices = vec![0u64; steps];
        let mut new_edges = vec![0u64; steps];
        for meta in &self.vertices {
            new_vertices[meta.birth_time as usize] += 1;
        }
        for (_, v) in self.edges() {
            // v > u, so v is the younger endpoint
            new_edges[self.vertices[v as usize].birth_time as usize] += 1;
        }
        let mut out = Vec::with_capacity(steps);
        let (mut n, mut e) = (0, 0);
        for s in 0..steps {
            n += new_vertices[s];
            e += new_edges[s];
            out.push((n, e));
        }
        out
    }

    // Used by the generator, which guarantees ids are appended in order.
    pub(crate) fn push_cap(
        &mut self,
        time: u32,
        parent_clique: &[VertexId],
        size: usize,
    ) -> CapId {
        let cap_id = self.caps.len() as CapId;
        let first = self.adjacency.len() as VertexId;
        let new_vertices: Vec<VertexId> = (first..first + size as VertexId).collect();
        for &p in parent_clique {
            self.adjacency[p as usize].extend_from_slice(&new_vertices);
        }
        for &v in &new_vertices {
            let mut list = Vec::with_capacity(parent_clique.len() + size - 1);
            list.extend_from_slice(parent_clique);
            list.extend(new_vertices.iter().copied().filter(|&w| w != v));
            self.adjacency.push(list);
            self.vertices.push(VertexMeta { id: v, birth_time: time, cap_id: Some(cap_id) });
        }
        let f = parent_clique.len() as u64;
        let g = size as u64;
        self.edge_count += f * g + g * g.saturating_sub(1) / 2;
        self.caps.push(CapRecord {
            cap_id,
            time,
            parent_clique: parent_clique.to_vec(),
            new_vertices,
        });
        cap_id
    }

    pub(crate) fn set_horizon(&mut self, horizon: u32) {
        self.horizon = horizon;
    }
}
