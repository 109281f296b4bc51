//! Ordered `k`-clique enumeration.
//!
//! Each clique is grown from its smallest vertex through candidates that are
//! larger than every current member, so cliques come out as sorted id lists in
//! lexicographic order. Work is split per root vertex and re-concatenated in
//! root order, which keeps the output independent of the thread count.

use rayon::prelude::*;

use crate::graph::{FrustumGraph, VertexId};

/// All `k`-cliques as sorted id lists, lexicographically ordered.
pub fn enumerate_k_cliques(g: &FrustumGraph, k: usize) -> Vec<Vec<VertexId>> {
    if k == 0 {
        return Vec::new();
    }
    enumerate_flat(g, k).chunks_exact(k).map(<[VertexId]>::to_vec).collect()
}

/// Same cliques as [`enumerate_k_cliques`], packed back to back with stride `k`.
pub fn enumerate_flat(g: &FrustumGraph, k: usize) -> Vec<VertexId> {
    if k == 0 {
        return Vec::new();
    }
    let per_root: Vec<Vec<VertexId>> = (0..g.order() as VertexId)
        .into_par_iter()
        .map(|root| {
            let mut out = Vec::new();
            let mut clique = Vec::with_capacity(k);
            clique.push(root);
            let cand = larger_neighbors(g, root);
            extend(g, &mut clique, cand, k, &mut |c| out.extend_from_slice(c));
            out
        })
        .collect();
    per_root.concat()
}

pub fn count_k_cliques(g: &FrustumGraph, k: usize) -> u128 {
    if k == 0 {
        return 0;
    }
    (0..g.order() as VertexId)
        .into_par_iter()
        .map(|root| {
            let mut clique = vec![root];
            count_extensions(g, &mut clique, larger_neighbors(g, root), k)
        })
        .sum()
}

/// `result[u]` is the number of `k`-cliques containing `u`.
pub fn clique_counts_per_vertex(g: &FrustumGraph, k: usize) -> Vec<u64> {
    let mut counts = vec![0u64; g.order()];
    if k == 0 {
        return counts;
    }
    for v in enumerate_flat(g, k) {
        counts[v as usize] += 1;
    }
    counts
}

/// Number of `k`-cliques that contain `u`; counts `(k-1)`-cliques inside the
/// neighbourhood of `u`.
pub fn clique_count_containing(g: &FrustumGraph, k: usize, u: VertexId) -> u64 {
    match k {
        0 => 0,
        1 => 1,
        _ => {
            let nbrs = g.neighbors(u);
            nbrs.iter()
                .enumerate()
                .map(|(i, &w)| {
                    let cand = intersect(&nbrs[i + 1..], g.neighbors(w));
                    let mut clique = vec![w];
                    count_extensions(g, &mut clique, cand, k - 1) as u64
                })
                .sum()
        }
    }
}

fn larger_neighbors(g: &FrustumGraph, v: VertexId) -> Vec<VertexId> {
    let nbrs = g.neighbors(v);
    let start = nbrs.partition_point(|&w| w <= v);
    nbrs[start..].to_vec()
}

fn extend(
    g: &FrustumGraph,
    clique: &mut Vec<VertexId>,
    cand: Vec<VertexId>,
    k: usize,
    emit: &mut impl FnMut(&[VertexId]),
) {
    if clique.len() == k {
        emit(clique);
        return;
    }
    if clique.len() + cand.len() < k {
        return;
    }
    for (i, &w) in cand.iter().enumerate() {
        if clique.len() + 1 + (cand.len() - i - 1) < k {
            break;
        }
        let next = intersect(&cand[i + 1..], g.neighbors(w));
        clique.push(w);
        extend(g, clique, next, k, emit);
        clique.pop();
    }
}

fn count_extensions(g: &FrustumGraph, clique: &mut Vec<VertexId>, cand: Vec<VertexId>, k: usize) -> u128 {
    if clique.len() == k {
        return 1;
    }
    if clique.len() + 1 == k {
        return cand.len() as u128;
    }
    let mut total = 0;
    for (i, &w) in cand.iter().enumerate() {
        if clique.len() + 1 + (cand.len() - i - 1) < k {
            break;
        }
        let next = intersect(&cand[i + 1..], g.neighbors(w));
        clique.push(w);
        total += count_extensions(g, clique, next, k);
        clique.pop();
    }
    total
}

/// Intersection of two sorted slices.
pub(crate) fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn intersection_size(a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}
