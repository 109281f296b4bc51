//! Normalized Laplacian spectrum, spectral gap and the expander mixing
//! inequality.
//!
//! Eigenvalues are double precision; volumes and edge counts stay exact.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{FrustumGraph, VertexId};
use crate::metrics::bfs;
use crate::Rational;

/// Slack applied to every floating-point comparison.
pub const TOLERANCE: f64 = 1e-9;

/// Largest order accepted for the dense eigensolve.
pub const MAX_DENSE_ORDER: usize = 4096;

/// Largest order for which [`mixing_all_subsets`] enumerates every subset.
pub const MAX_SUBSET_ORDER: usize = 20;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("vertex {0} is isolated; the normalized Laplacian is undefined")]
    IsolatedVertex(VertexId),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("eigensolve residual {residual:e} exceeds {limit:e}")]
    Convergence { residual: f64, limit: f64 },
    #[error("spectral gap needs at least two vertices")]
    TooSmall,
    #[error("spectral gap needs a connected graph")]
    Disconnected,
    #[error("order {0} is too large for a dense eigensolve")]
    TooLarge(usize),
}

/// `I - D^{-1/2} A D^{-1/2}`.
pub fn normalized_laplacian(g: &FrustumGraph) -> Result<DMatrix<f64>, SpectralError> {
    let n = g.order();
    if n > MAX_DENSE_ORDER {
        return Err(SpectralError::TooLarge(n));
    }
    let mut inv_sqrt = Vec::with_capacity(n);
    for v in 0..n as VertexId {
        let d = g.degree(v);
        if d == 0 {
            return Err(SpectralError::IsolatedVertex(v));
        }
        inv_sqrt.push(1.0 / (d as f64).sqrt());
    }
    let mut m = DMatrix::<f64>::identity(n, n);
    for (u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        let w = -inv_sqrt[u] * inv_sqrt[v];
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Largest `||M v - lambda v||` over the computed eigenpairs.
    pub residual: f64,
}

/// Full spectrum of a symmetric matrix, ascending, with its worst residual.
pub fn eigenvalues_symmetric(m: &DMatrix<f64>) -> Result<Spectrum, SpectralError> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(SpectralError::NotSymmetric);
    }
    let scale = m.norm().max(1.0);
    if (m - m.transpose()).amax() > f64::EPSILON * scale * 4.0 {
        return Err(SpectralError::NotSymmetric);
    }
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new(), residual: 0.0 });
    }
    let eig = SymmetricEigen::new(m.clone());
    let mut residual: f64 = 0.0;
    for (i, &lambda) in eig.eigenvalues.iter().enumerate() {
        let v = eig.eigenvectors.column(i);
        residual = residual.max((m * v - v * lambda).norm());
    }
    let limit = TOLERANCE * scale;
    if residual.is_nan() || residual > limit {
        return Err(SpectralError::Convergence { residual, limit });
    }
    let mut eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues, residual })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    /// `max(|lambda_1 - 1|, |lambda_{n-1} - 1|)`.
    pub lambda_gap: f64,
    pub residual: f64,
}

impl SpectralReport {
    /// One eigenvalue per line, ascending.
    pub fn eigenvalue_dump(&self) -> String {
        self.eigenvalues.iter().map(|l| format!("{l:.17e}\n")).collect()
    }
}

pub fn spectral_report(g: &FrustumGraph) -> Result<SpectralReport, SpectralError> {
    let n = g.order();
    if n < 2 {
        return Err(SpectralError::TooSmall);
    }
    if bfs(g, 0).distances.iter().any(Option::is_none) {
        return Err(SpectralError::Disconnected);
    }
    let spectrum = eigenvalues_symmetric(&normalized_laplacian(g)?)?;
    let second = spectrum.eigenvalues[1];
    let largest = spectrum.eigenvalues[n - 1];
    Ok(SpectralReport {
        lambda_gap: (second - 1.0).abs().max((largest - 1.0).abs()),
        eigenvalues: spectrum.eigenvalues,
        residual: spectrum.residual,
    })
}

pub fn spectral_gap(g: &FrustumGraph) -> Result<f64, SpectralError> {
    spectral_report(g).map(|r| r.lambda_gap)
}

/// One instance of `|e(X,X) - vol(X)^2 / vol(G)| <= lambda vol(X) vol(X̄) / vol(G)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingCheck {
    pub set: Vec<VertexId>,
    /// Ordered pairs inside `X`: twice the number of edges of `G[X]`.
    pub e_xx: u64,
    pub vol_x: u64,
    pub vol_complement: u64,
    pub vol_g: u64,
    pub lhs: Rational,
    pub rhs: f64,
    pub holds: bool,
}

pub fn mixing_check(g: &FrustumGraph, set: &[VertexId], lambda: f64) -> MixingCheck {
    let mut inside = vec![false; g.order()];
    for &v in set {
        inside[v as usize] = true;
    }
    let mut members: Vec<VertexId> = (0..g.order() as VertexId).filter(|&v| inside[v as usize]).collect();
    members.dedup();
    let vol_g: u64 = (0..g.order() as VertexId).map(|v| g.degree(v) as u64).sum();
    let vol_x: u64 = members.iter().map(|&v| g.degree(v) as u64).sum();
    let e_xx: u64 = members
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w as usize]).count() as u64)
        .sum();
    mixing_from_counts(members, e_xx, vol_x, vol_g, lambda)
}

fn mixing_from_counts(set: Vec<VertexId>, e_xx: u64, vol_x: u64, vol_g: u64, lambda: f64) -> MixingCheck {
    let vol_complement = vol_g - vol_x;
    let (lhs, rhs) = if vol_g == 0 {
        (Rational::from_integer(BigInt::from(0)), 0.0)
    } else {
        let vg = BigInt::from(vol_g);
        let lhs = (Rational::from_integer(BigInt::from(e_xx))
            - Rational::new(BigInt::from(vol_x) * BigInt::from(vol_x), vg))
        .abs();
        (lhs, lambda * vol_x as f64 * vol_complement as f64 / vol_g as f64)
    };
    let holds = lhs.to_f64().unwrap_or(f64::INFINITY) <= rhs + TOLERANCE;
    MixingCheck { set, e_xx, vol_x, vol_complement, vol_g, lhs, rhs, holds }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubsetSweep {
    pub subsets_checked: u64,
    /// Subsets violating the inequality, as bit masks over vertex ids.
    pub failures: Vec<u64>,
}

/// Checks the mixing inequality on all `2^n` vertex subsets.
pub fn mixing_all_subsets(g: &FrustumGraph, lambda: f64) -> Result<SubsetSweep, SpectralError> {
    let n = g.order();
    if n > MAX_SUBSET_ORDER {
        return Err(SpectralError::TooLarge(n));
    }
    let masks: Vec<u64> = (0..n as VertexId)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect();
    let degrees: Vec<u64> = (0..n as VertexId).map(|v| g.degree(v) as u64).collect();
    let vol_g: u64 = degrees.iter().sum();
    let mut failures = Vec::new();
    for set in 0u64..(1u64 << n) {
        let mut vol_x = 0;
        let mut e_xx = 0;
        for v in 0..n {
            if set >> v & 1 == 1 {
                vol_x += degrees[v];
                e_xx += u64::from((masks[v] & set).count_ones());
            }
        }
        let check = mixing_from_counts(Vec::new(), e_xx, vol_x, vol_g, lambda);
        if !check.holds {
            failures.push(set);
        }
    }
    Ok(SubsetSweep { subsets_checked: 1 << n, failures })
}

/// Number of connected components, by repeated BFS.
pub fn component_count(g: &FrustumGraph) -> usize {
    let mut seen = vec![false; g.order()];
    let mut count = 0;
    for v in 0..g.order() as VertexId {
        if seen[v as usize] {
            continue;
        }
        count += 1;
        for (w, d) in bfs(g, v).distances.iter().enumerate() {
            if d.is_some() {
                seen[w] = true;
            }
        }
    }
    count
}
