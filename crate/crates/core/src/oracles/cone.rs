//! Cone model (`n = 1`, `f_t = 1`): order, size, diameter, Wiener index,
//! degrees and clustering.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{binomial, OracleError};
use crate::generate::generate;
use crate::metrics::wiener_index;
use crate::params::ModelParams;
use crate::sequence::SequenceSpec;
use crate::Rational;

fn caps(g: &SequenceSpec, t: u32) -> Result<Vec<u64>, OracleError> {
    Ok(g.values(t)?)
}

/// `prod_{i=1}^{t} (1 + g_i)`.
pub fn cone_order_closed(g: &SequenceSpec, t: u32) -> Result<BigUint, OracleError> {
    Ok(caps(g, t)?.iter().map(|&gi| BigUint::from(gi) + 1u32).product())
}

/// `e_t = e_{t-1} + n_{t-1} binom(g_t + 1, 2)`, `e_0 = 0`.
pub fn cone_edges_closed(g: &SequenceSpec, t: u32) -> Result<BigUint, OracleError> {
    let mut order = BigUint::one();
    let mut edges = BigUint::zero();
    for gi in caps(g, t)? {
        edges += &order * binomial(gi + 1, 2);
        order *= gi + 1;
    }
    Ok(edges)
}

/// The sum `sum_{i=1}^{t-1} binom(g_{i+1}+1, 2) prod_{j=1}^{i} (1+g_j)` exactly as
/// printed; it omits the first step's edges.
pub fn cone_edges_printed_sum(g: &SequenceSpec, t: u32) -> Result<BigUint, OracleError> {
    let values = caps(g, t)?;
    let mut total = BigUint::zero();
    let mut prefix = BigUint::one();
    for i in 1..t as usize {
        prefix *= values[i - 1] + 1;
        total += binomial(values[i] + 1, 2) * &prefix;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WienerCandidate {
    /// `prod_i (1+g_i) * sum_i g_{t-i} prod_{j<t-i} (1+g_j) prod_{j>t-i} (1+g_j)`.
    ProductSum,
    /// `ProductSum` plus `g_t prod_i (1+g_i) / 2`.
    ProductSumPlusHalf,
    /// `W_t = (1+g_t)^2 W_{t-1} + g_t(1+g_t) n_{t-1}(n_{t-1}-1) + g_t(1+g_t) n_{t-1} / 2`,
    /// from splitting pairs into old/old, old/new and new/new classes.
    Recurrence,
}

impl WienerCandidate {
    pub const ALL: [WienerCandidate; 3] =
        [WienerCandidate::ProductSum, WienerCandidate::ProductSumPlusHalf, WienerCandidate::Recurrence];

    pub fn label(self) -> &'static str {
        match self {
            WienerCandidate::ProductSum => "product-sum",
            WienerCandidate::ProductSumPlusHalf => "product-sum-plus-half",
            WienerCandidate::Recurrence => "recurrence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WienerEvaluation {
    pub candidates: Vec<(WienerCandidate, BigUint)>,
    pub recommended: WienerCandidate,
}

impl WienerEvaluation {
    pub fn value(&self, which: WienerCandidate) -> &BigUint {
        &self.candidates.iter().find(|(c, _)| *c == which).expect("all candidates evaluated").1
    }

    pub fn recommended_value(&self) -> &BigUint {
        self.value(self.recommended)
    }
}

fn wiener_product_sum(values: &[u64]) -> BigUint {
    let t = values.len();
    let one_plus = |j: usize| BigUint::from(values[j - 1] + 1);
    let total: BigUint = (1..=t).map(&one_plus).product();
    let mut sum = BigUint::zero();
    for i in 0..t {
        let k = t - i;
        let left: BigUint = (1..k).map(&one_plus).product();
        let right: BigUint = (k + 1..=t).map(&one_plus).product();
        sum += BigUint::from(values[k - 1]) * left * right;
    }
    total * sum
}

fn wiener_recurrence(values: &[u64]) -> BigUint {
    let mut w = BigUint::zero();
    let mut order = BigUint::one();
    for &gi in values {
        let g = BigUint::from(gi);
        let g1 = &g + 1u32;
        let pairs_ordered = &order * (&order - 1u32);
        let cap_weight = &g * &g1;
        w = &g1 * &g1 * &w + &cap_weight * pairs_ordered + (&cap_weight * &order) / 2u32;
        order *= g1;
    }
    w
}

fn evaluate_candidates(g: &SequenceSpec, t: u32) -> Result<Vec<(WienerCandidate, BigUint)>, OracleError> {
    let values = caps(g, t)?;
    let product_sum = wiener_product_sum(&values);
    let plus_half = match values.last() {
        // g_t (1 + g_t) is even, so the half term is an integer
        Some(&gt) => &product_sum + BigUint::from(gt) * cone_order_closed(g, t)? / 2u32,
        None => product_sum.clone(),
    };
    Ok(vec![
        (WienerCandidate::ProductSum, product_sum),
        (WienerCandidate::ProductSumPlusHalf, plus_half),
        (WienerCandidate::Recurrence, wiener_recurrence(&values)),
    ])
}

/// Cone runs used to decide which Wiener candidate to trust.
pub fn wiener_calibration_runs() -> Vec<(SequenceSpec, u32)> {
    let mut runs = vec![
        (SequenceSpec::Table(vec![1, 1]), 2),
        (SequenceSpec::Table(vec![2]), 1),
    ];
    for t in 0..=3 {
        runs.push((SequenceSpec::Constant(2), t));
        runs.push((SequenceSpec::identity(), t));
    }
    runs
}

/// Compares every candidate with brute-force Wiener indices on the calibration
/// runs and returns the first candidate that matched all of them.
pub fn calibrate_wiener() -> Result<WienerCandidate, OracleError> {
    let mut matched = WienerCandidate::ALL.to_vec();
    for (g, t) in wiener_calibration_runs() {
        let graph = generate(&ModelParams::cone(g.clone(), t))?;
        let measured = BigUint::from(wiener_index(&graph)?);
        let candidates = evaluate_candidates(&g, t)?;
        matched.retain(|c| candidates.iter().any(|(k, v)| k == c && *v == measured));
    }
    matched
        .first()
        .copied()
        .ok_or_else(|| OracleError::WienerCalibration("all candidates disagree".into()))
}

fn calibrated_wiener() -> Result<WienerCandidate, OracleError> {
    static CHOICE: OnceLock<Result<WienerCandidate, OracleError>> = OnceLock::new();
    CHOICE.get_or_init(calibrate_wiener).clone()
}

/// Evaluates all Wiener candidates; the recommendation comes from a one-time
/// brute-force calibration.
pub fn cone_wiener_closed(g: &SequenceSpec, t: u32) -> Result<WienerEvaluation, OracleError> {
    let candidates = evaluate_candidates(g, t)?;
    Ok(WienerEvaluation { candidates, recommended: calibrated_wiener()? })
}

pub fn cone_diameter_closed(t: u32) -> Result<u64, OracleError> {
    if t == 0 {
        return Err(OracleError::DiameterAtZero);
    }
    Ok(2 * u64::from(t) - 1)
}

/// Degree at time `t` of a vertex born at step `j`: `sum_{i=j}^{t} g_i`.
pub fn cone_degree_closed(g: &SequenceSpec, j: u32, t: u32) -> Result<u64, OracleError> {
    if j == 0 || j > t {
        return Err(OracleError::BirthOutOfRange { j, t });
    }
    (j..=t).map(|i| g.eval(i).map_err(OracleError::from)).sum()
}

/// Lower bound `g_t / (2 (1 + g_t))` on the clustering coefficient.
pub fn cone_clustering_bound(g: &SequenceSpec, t: u32) -> Result<Rational, OracleError> {
    if t == 0 {
        return Err(OracleError::NeedsPositiveStep);
    }
    let gt = g.eval(t)?;
    Ok(Rational::new(BigInt::from(gt), BigInt::from(2 * (1 + gt))))
}

/// `g_t + t - sum_{i=1}^{t} 1/(g_i + 1)`, the growth rate of the average distance.
pub fn cone_average_distance_proxy(g: &SequenceSpec, t: u32) -> Result<Rational, OracleError> {
    if t == 0 {
        return Err(OracleError::NeedsPositiveStep);
    }
    let values = caps(g, t)?;
    let mut acc = Rational::from_integer(BigInt::from(values[t as usize - 1] + u64::from(t)));
    for gi in values {
        acc -= Rational::new(BigInt::one(), BigInt::from(gi + 1));
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeClosedForms {
    pub t: u32,
    pub order: BigUint,
    pub edges: BigUint,
    pub diameter: Option<u64>,
    pub wiener: WienerEvaluation,
    pub clustering_lower_bound: Option<Rational>,
}

pub fn cone_closed_forms(g: &SequenceSpec, t: u32) -> Result<ConeClosedForms, OracleError> {
    Ok(ConeClosedForms {
        t,
        order: cone_order_closed(g, t)?,
        edges: cone_edges_closed(g, t)?,
        diameter: cone_diameter_closed(t).ok(),
        wiener: cone_wiener_closed(g, t)?,
        clustering_lower_bound: cone_clustering_bound(g, t).ok(),
    })
}
