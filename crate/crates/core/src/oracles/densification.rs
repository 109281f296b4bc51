//! Finite-horizon diagnostics for the growth and densification conditions.
//!
//! The underlying statements are asymptotic; everything here reports
//! per-step values and trends over the generated horizon only.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{binomial, OracleError};
use crate::cliques::clique_counts_per_vertex;
use crate::graph::FrustumGraph;
use crate::params::ModelParams;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HypothesisVerdict {
    /// Holds on every step of the horizon (finite-horizon evidence only).
    Supported,
    NotSupported,
    /// Horizon too short to say anything.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueBoundCheck {
    pub bound: BigInt,
    pub min_count: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensificationStep {
    pub t: u32,
    pub f: u64,
    pub g: u64,
    /// Minimum over `u` in the previous snapshot of the number of `f_t`-cliques containing `u`.
    pub clique_min: u64,
    /// `clique_min * g_t / f_t`.
    pub growth_factor: Rational,
    pub order_ratio: Rational,
    /// `(n_t - n_{t-1}) f_t >= n_{t-1} clique_min g_t`.
    pub growth_inequality: bool,
    pub density: Rational,
    /// Lower bound on `clique_min` from the previous step's parameters (`t >= 2`).
    pub clique_bound: Option<CliqueBoundCheck>,
    /// `g_{t-1} + f_{t-1}` is `f_t - 1` or `f_t - 2` (`t >= 2`).
    pub excluded_by_sufficient_condition: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensificationDiagnostic {
    pub steps: Vec<DensificationStep>,
    pub growth_inequality_every_step: bool,
    /// Minimum growth factor over steps `t >= 2` (step 1 when the horizon is 1).
    pub tail_growth_factor_min: Option<Rational>,
    pub densification_hypothesis: HypothesisVerdict,
    pub sufficient_condition: HypothesisVerdict,
}

fn clique_lower_bound(f_prev: u64, g_prev: u64, f_t: u64) -> BigInt {
    let k = f_t - 1;
    BigInt::from(binomial(g_prev + f_prev - 1, k)) - BigInt::from(binomial(f_prev - 1, k))
}

/// Step-by-step growth diagnostics for `g`, which must have been generated from `p`.
pub fn densification_diagnostic(
    g: &FrustumGraph,
    p: &ModelParams,
) -> Result<DensificationDiagnostic, OracleError> {
    let counts = g.counts_by_time();
    let mut steps = Vec::new();
    let mut previous: Option<(u64, u64)> = None;
    for t in 1..=g.horizon() {
        let (f, gt) = p.step_values(t)?;
        let snap = g.snapshot_at(t - 1)?;
        let clique_min = clique_counts_per_vertex(&snap, f as usize)
            .into_iter()
            .min()
            .unwrap_or(0);
        let (n_prev, _) = counts[t as usize - 1];
        let (n_t, e_t) = counts[t as usize];
        let clique_bound = previous.map(|(f_prev, g_prev)| {
            let bound = clique_lower_bound(f_prev, g_prev, f);
            CliqueBoundCheck { holds: BigInt::from(clique_min) >= bound, bound, min_count: clique_min }
        });
        let excluded_by_sufficient_condition = previous.map(|(f_prev, g_prev)| {
            let s = u128::from(f_prev) + u128::from(g_prev);
            let f = u128::from(f);
            s + 1 == f || s + 2 == f
        });
        steps.push(DensificationStep {
            t,
            f,
            g: gt,
            clique_min,
            growth_factor: Rational::new(BigInt::from(clique_min) * gt, BigInt::from(f)),
            order_ratio: Rational::new(BigInt::from(n_t), BigInt::from(n_prev)),
            growth_inequality: u128::from(n_t - n_prev) * u128::from(f)
                >= u128::from(n_prev) * u128::from(clique_min) * u128::from(gt),
            density: Rational::new(BigInt::from(e_t), BigInt::from(n_t)),
            clique_bound,
            excluded_by_sufficient_condition,
        });
        previous = Some((f, gt));
    }

    let tail: Vec<&DensificationStep> = if steps.len() >= 2 {
        steps.iter().filter(|s| s.t >= 2).collect()
    } else {
        steps.iter().collect()
    };
    let tail_growth_factor_min = tail.iter().map(|s| s.growth_factor.clone()).min();
    let one = Rational::from_integer(BigInt::from(1));
    let orders_grow = match (steps.first(), steps.last()) {
        (Some(a), Some(b)) if steps.len() >= 2 => b.f + b.g > a.f + a.g,
        _ => false,
    };

    let densification_hypothesis = if steps.len() < 2 {
        HypothesisVerdict::Undetermined
    } else if orders_grow && tail.iter().all(|s| s.growth_factor > one) {
        HypothesisVerdict::Supported
    } else {
        HypothesisVerdict::NotSupported
    };
    let sufficient_condition = if steps.len() < 2 {
        HypothesisVerdict::Undetermined
    } else {
        let large_step = steps.iter().any(|s| s.f >= 3 && s.g >= 2);
        let last_clear = steps.last().and_then(|s| s.excluded_by_sufficient_condition) == Some(false);
        if orders_grow && large_step && last_clear {
            HypothesisVerdict::Supported
        } else {
            HypothesisVerdict::NotSupported
        }
    };

    Ok(DensificationDiagnostic {
        growth_inequality_every_step: steps.iter().all(|s| s.growth_inequality),
        steps,
        tail_growth_factor_min,
        densification_hypothesis,
        sufficient_condition,
    })
}

/// Result of checking the exact clique-count recurrence between snapshots
/// `t - 2` and `t - 1` for `k = f_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    pub t: u32,
    pub k: u64,
    pub vertices_checked: usize,
    /// `(u, predicted, measured)` for every vertex where the identity fails.
    pub failures: Vec<(u32, BigInt, u64)>,
}

impl RecurrenceCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `u` present at `t - 2`, checks
/// `C_{t-1}^k(u) = C_{t-2}^k(u) + (binom(g+f-1, k-1) - binom(f-1, k-1)) C_{t-2}^{f}(u)`
/// with `f = f_{t-1}`, `g = g_{t-1}` and `k = f_t`.
pub fn clique_recurrence_check(
    g: &FrustumGraph,
    p: &ModelParams,
    t: u32,
) -> Result<RecurrenceCheck, OracleError> {
    if t < 2 {
        return Err(OracleError::NeedsTwoSteps { t });
    }
    let k = p.f.eval(t)?;
    let (f_prev, g_prev) = p.step_values(t - 1)?;
    let older = g.snapshot_at(t - 2)?;
    let newer = g.snapshot_at(t - 1)?;
    let old_k = clique_counts_per_vertex(&older, k as usize);
    let old_f = clique_counts_per_vertex(&older, f_prev as usize);
    let new_k = clique_counts_per_vertex(&newer, k as usize);
    let factor = BigInt::from(binomial(g_prev + f_prev - 1, k - 1)) - BigInt::from(binomial(f_prev - 1, k - 1));
    let mut failures = Vec::new();
    for u in 0..older.order() {
        let predicted = BigInt::from(old_k[u]) + &factor * old_f[u];
        if predicted != BigInt::from(new_k[u]) {
            failures.push((u as u32, predicted, new_k[u]));
        }
    }
    Ok(RecurrenceCheck { t, k, vertices_checked: older.order(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;
    use crate::sequence::SequenceSpec;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p.into(), q.into())
    }

    #[test]
    fn growing_cone_factors() {
        let p = ModelParams::cone(SequenceSpec::identity(), 4);
        let d = densification_diagnostic(&generate(&p).unwrap(), &p).unwrap();
        for s in &d.steps {
            assert_eq!(s.clique_min, 1);
            assert_eq!(s.growth_factor, r(s.t as i64, 1));
            assert!(s.growth_inequality);
        }
        assert_eq!(d.tail_growth_factor_min, Some(r(2, 1)));
        assert_eq!(d.densification_hypothesis, HypothesisVerdict::Supported);
        // f never reaches 3
        assert_eq!(d.sufficient_condition, HypothesisVerdict::NotSupported);
    }

    #[test]
    fn constant_cylinder_does_not_meet_hypothesis() {
        let p = ModelParams::new(2, SequenceSpec::Constant(2), SequenceSpec::Constant(2), 3);
        let d = densification_diagnostic(&generate(&p).unwrap(), &p).unwrap();
        assert_eq!(d.densification_hypothesis, HypothesisVerdict::NotSupported);
        assert!(d.steps.windows(2).all(|w| w[0].density < w[1].density));
        assert!(d.steps.iter().all(|s| s.density < r(5, 2)));
    }

    #[test]
    fn edge_extension_bound() {
        let p = ModelParams::new(3, SequenceSpec::Constant(2), SequenceSpec::Constant(2), 3);
        let graph = generate(&p).unwrap();
        let d = densification_diagnostic(&graph, &p).unwrap();
        for s in d.steps.iter().filter(|s| s.t >= 2) {
            let check = s.clique_bound.as_ref().unwrap();
            assert_eq!(check.bound, BigInt::from(2));
            assert!(check.holds);
            assert!(s.growth_factor >= r(2, 1));
            assert_eq!(s.excluded_by_sufficient_condition, Some(false));
        }
        for t in 2..=3 {
            let rec = clique_recurrence_check(&graph, &p, t).unwrap();
            assert!(rec.holds(), "{rec:?}");
        }
        assert!(clique_recurrence_check(&graph, &p, 1).is_err());
    }

    #[test]
    fn cylinder_identity_meets_sufficient_condition() {
        let p = ModelParams::new(1, SequenceSpec::identity(), SequenceSpec::identity(), 4);
        let d = densification_diagnostic(&generate(&p).unwrap(), &p).unwrap();
        assert_eq!(d.sufficient_condition, HypothesisVerdict::Supported);
        assert!(d.growth_inequality_every_step);
    }
}
