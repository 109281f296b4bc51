use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::cliques::intersection_size;
use crate::graph::{FrustumGraph, VertexId};
use crate::Rational;

/// Number of edges among the neighbours of `x`.
pub fn neighbor_edges(g: &FrustumGraph, x: VertexId) -> u64 {
    let nbrs = g.neighbors(x);
    let twice: usize = nbrs.iter().map(|&w| intersection_size(nbrs, g.neighbors(w))).sum();
    (twice / 2) as u64
}

/// `e(x) / binom(deg x, 2)`; vertices of degree below 2 get 0.
pub fn local_clustering(g: &FrustumGraph, x: VertexId) -> Rational {
    let d = g.degree(x) as u64;
    if d < 2 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(neighbor_edges(g, x)), BigInt::from(d * (d - 1) / 2))
}

/// Mean of the local coefficients over all vertices.
pub fn global_clustering(g: &FrustumGraph) -> Rational {
    let n = g.order();
    if n == 0 {
        return Rational::zero();
    }
    let locals: Vec<Rational> = (0..n as VertexId)
        .into_par_iter()
        .map(|x| local_clustering(g, x))
        .collect();
    let total = locals.into_iter().fold(Rational::zero(), |acc, c| acc + c);
    total / Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;
    use crate::params::ModelParams;
    use crate::sequence::SequenceSpec;

    fn ratio(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn complete_graph_is_fully_clustered() {
        let k4 = FrustumGraph::complete(4);
        for x in 0..4 {
            assert_eq!(local_clustering(&k4, x), ratio(1, 1));
        }
        assert_eq!(global_clustering(&k4), ratio(1, 1));
    }

    #[test]
    fn path_middle_vertex() {
        let path = FrustumGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(local_clustering(&path, 1), ratio(0, 1));
        assert_eq!(local_clustering(&path, 0), ratio(0, 1));
        assert_eq!(global_clustering(&path), ratio(0, 1));
    }

    #[test]
    fn seed_of_cone_with_pairs() {
        let g = generate(&ModelParams::cone(SequenceSpec::Constant(2), 2)).unwrap();
        assert_eq!(neighbor_edges(&g, 0), 2);
        assert_eq!(local_clustering(&g, 0), ratio(1, 3));
    }
}
