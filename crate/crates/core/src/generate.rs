//! The iterative clique-extension step and the full generator.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cliques::{count_k_cliques, enumerate_flat};
use crate::graph::{FrustumGraph, VertexId};
use crate::params::{validate_params, ModelParams, Violation};
use crate::sequence::SequenceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid model parameters: {}", join(.0))]
    InvalidParams(Vec<Violation>),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error("step {t} would grow the graph to {projected_order} vertices, over the budget of {budget}")]
    BudgetExceeded { t: u32, projected_order: u128, budget: u64 },
    #[error("step {t}: projected vertex or edge count overflows")]
    Overflow { t: u32 },
    #[error("step {t} must follow horizon {horizon}")]
    OutOfSequence { t: u32, horizon: u32 },
    #[error("step {t}: clique orders must be positive (f={f}, g={g})")]
    ZeroOrder { t: u32, f: u64, g: u64 },
}

fn join(violations: &[Violation]) -> String {
    violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

impl GenerateError {
    /// True for budget and overflow failures, as opposed to bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, GenerateError::BudgetExceeded { .. } | GenerateError::Overflow { .. })
    }
}

/// What one extension step did.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub t: u32,
    pub f: u64,
    pub g: u64,
    pub cliques_extended: u64,
    pub new_vertices: u64,
    pub new_edges: u64,
}

impl StepReport {
    /// No `f_t`-clique existed, so the step added nothing.
    pub fn is_stalled(&self) -> bool {
        self.cliques_extended == 0
    }
}

#[derive(Debug, Clone)]
pub struct Generation {
    pub graph: FrustumGraph,
    pub steps: Vec<StepReport>,
}

impl Generation {
    pub fn warnings(&self) -> Vec<String> {
        self.steps
            .iter()
            .filter(|s| s.is_stalled())
            .map(|s| format!("step {}: no clique of order {} exists; growth stalled", s.t, s.f))
            .collect()
    }
}

fn binom2(x: u128) -> Option<u128> {
    x.checked_mul(x.saturating_sub(1)).map(|v| v / 2)
}

impl FrustumGraph {
    /// Extends every `f`-clique of the current graph by `g` new vertices, in
    /// place. The graph must currently be the snapshot at `t - 1`.
    pub fn extend(&mut self, t: u32, f: u64, g: u64, vertex_budget: u64) -> Result<StepReport, GenerateError> {
        if t != self.horizon() + 1 {
            return Err(GenerateError::OutOfSequence { t, horizon: self.horizon() });
        }
        if f == 0 || g == 0 {
            return Err(GenerateError::ZeroOrder { t, f, g });
        }
        let cliques = count_k_cliques(self, f as usize);
        let overflow = GenerateError::Overflow { t };
        let (f_w, g_w) = (u128::from(f), u128::from(g));
        let new_vertices = g_w.checked_mul(cliques).ok_or(overflow.clone())?;
        let projected_order = (self.order() as u128).checked_add(new_vertices).ok_or(overflow.clone())?;
        let per_cap_edges = binom2(f_w + g_w).ok_or(overflow.clone())? - binom2(f_w).ok_or(overflow.clone())?;
        let new_edges = per_cap_edges.checked_mul(cliques).ok_or(overflow.clone())?;
        let projected_edges = u128::from(self.edge_count()).checked_add(new_edges).ok_or(overflow.clone())?;
        if projected_order > u128::from(vertex_budget) {
            return Err(GenerateError::BudgetExceeded { t, projected_order, budget: vertex_budget });
        }
        if projected_order > u128::from(VertexId::MAX) || projected_edges > u128::from(u64::MAX) {
            return Err(overflow);
        }

        let k = f as usize;
        let parents = enumerate_flat(self, k);
        for parent in parents.chunks_exact(k) {
            self.push_cap(t, parent, g as usize);
        }
        self.set_horizon(t);
        Ok(StepReport {
            t,
            f,
            g,
            cliques_extended: cliques as u64,
            new_vertices: new_vertices as u64,
            new_edges: new_edges as u64,
        })
    }
}

/// One step applied to a copy of `g`.
pub fn extend_step(
    g: &FrustumGraph,
    t: u32,
    f_t: u64,
    g_t: u64,
    vertex_budget: u64,
) -> Result<FrustumGraph, GenerateError> {
    let mut next = g.clone();
    next.extend(t, f_t, g_t, vertex_budget)?;
    Ok(next)
}

pub fn generate(p: &ModelParams) -> Result<FrustumGraph, GenerateError> {
    generate_logged(p).map(|run| run.graph)
}

/// Runs the model from `K_n` through `p.horizon` steps, keeping per-step reports.
pub fn generate_logged(p: &ModelParams) -> Result<Generation, GenerateError> {
    validate_params(p).map_err(GenerateError::InvalidParams)?;
    let mut graph = FrustumGraph::complete(p.n as usize);
    let mut steps = Vec::with_capacity(p.horizon as usize);
    for t in 1..=p.horizon {
        let (f, g) = p.step_values(t)?;
        steps.push(graph.extend(t, f, g, p.vertex_budget)?);
    }
    Ok(Generation { graph, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::enumerate_k_cliques;
    use crate::sequence::SequenceSpec;

    #[test]
    fn single_vertex_becomes_edge() {
        let g = extend_step(&FrustumGraph::complete(1), 1, 1, 1, 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn edge_becomes_k4() {
        let g = extend_step(&FrustumGraph::complete(2), 1, 2, 2, 100).unwrap();
        assert_eq!((g.order(), g.edge_count()), (4, 6));
        assert_eq!(enumerate_k_cliques(&g, 4).len(), 1);
    }

    #[test]
    fn triangle_edges_extended() {
        // three edges, each closed into a K4 by two new vertices
        let g = extend_step(&FrustumGraph::complete(3), 1, 2, 2, 100).unwrap();
        assert_eq!((g.order(), g.edge_count()), (9, 18));
        assert_eq!(g.caps().len(), 3);
        assert_eq!(g.caps()[0].parent_clique, vec![0, 1]);
        assert_eq!(g.caps()[0].new_vertices, vec![3, 4]);
        assert_eq!(g.caps()[2].parent_clique, vec![1, 2]);
        assert_eq!(g.caps()[2].new_vertices, vec![7, 8]);
    }

    #[test]
    fn cone_orders() {
        let p = ModelParams::cone(SequenceSpec::identity(), 3);
        assert_eq!(generate(&p).unwrap().order(), 24);
        let seed = generate(&p.with_horizon(0)).unwrap();
        assert_eq!(seed, FrustumGraph::complete(1));
        let k4 = generate(&ModelParams::new(2, SequenceSpec::Constant(2), SequenceSpec::Constant(2), 1)).unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
    }

    #[test]
    fn budget_is_enforced_before_allocation() {
        let p = ModelParams::cone(SequenceSpec::identity(), 6).with_budget(1000);
        match generate(&p) {
            Err(GenerateError::BudgetExceeded { t, projected_order, budget }) => {
                assert_eq!((t, projected_order, budget), (6, 5040, 1000));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_params_are_refused() {
        let p = ModelParams::new(1, SequenceSpec::Constant(2), SequenceSpec::Constant(1), 1);
        assert!(matches!(generate(&p), Err(GenerateError::InvalidParams(_))));
    }

    #[test]
    fn oversized_clique_stalls() {
        let mut g = FrustumGraph::complete(2);
        let report = g.extend(1, 3, 1, 100).unwrap();
        assert!(report.is_stalled());
        assert_eq!(g.order(), 2);
        assert_eq!(g.horizon(), 1);
    }

    #[test]
    fn steps_must_be_consecutive() {
        let mut g = FrustumGraph::complete(2);
        assert_eq!(g.extend(2, 1, 1, 100), Err(GenerateError::OutOfSequence { t: 2, horizon: 0 }));
    }
}
