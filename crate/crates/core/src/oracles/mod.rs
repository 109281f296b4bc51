//! Closed-form predictions for frustum graphs, kept in arbitrary-width
//! integers and exact rationals so every comparison with a measurement is an
//! equality test.

mod cone;
mod cylinder;
mod densification;

pub use cone::{
    calibrate_wiener, cone_average_distance_proxy, cone_closed_forms, cone_clustering_bound,
    cone_degree_closed, cone_diameter_closed, cone_edges_closed, cone_edges_printed_sum,
    cone_order_closed, cone_wiener_closed, ConeClosedForms, WienerCandidate, WienerEvaluation,
};
pub use cylinder::{cylinder_constant_closed, CylinderClosedForms};
pub use densification::{
    clique_recurrence_check, densification_diagnostic, CliqueBoundCheck, DensificationDiagnostic,
    DensificationStep, HypothesisVerdict, RecurrenceCheck,
};

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::generate::GenerateError;
use crate::graph::GraphError;
use crate::metrics::MetricsError;
use crate::sequence::SequenceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error("the diameter formula needs t >= 1")]
    DiameterAtZero,
    #[error("birth step j={j} must satisfy 1 <= j <= t={t}")]
    BirthOutOfRange { j: u32, t: u32 },
    #[error("the bound needs t >= 1")]
    NeedsPositiveStep,
    #[error("the check needs t >= 2, got {t}")]
    NeedsTwoSteps { t: u32 },
    #[error("seed order must be positive")]
    EmptySeed,
    #[error("no Wiener candidate matched brute force: {0}")]
    WienerCalibration(String),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_table() {
        // Pascal's rule as an independent check
        let mut row = vec![BigUint::one()];
        for n in 1..30u64 {
            let mut next = vec![BigUint::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
            assert_eq!(binomial(n, n + 1), BigUint::from(0u32));
        }
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
