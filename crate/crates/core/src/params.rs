//! Model instances and their admissibility conditions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::sequence::{SequenceError, SequenceSpec};

pub const DEFAULT_VERTEX_BUDGET: u64 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SeqName {
    F,
    G,
}

impl fmt::Display for SeqName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeqName::F => "f",
            SeqName::G => "g",
        })
    }
}

/// A full model instance: seed clique order `n`, the two sequences, the number
/// of steps and a hard cap on the final vertex count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelParams {
    pub n: u64,
    pub f: SequenceSpec,
    pub g: SequenceSpec,
    pub horizon: u32,
    pub vertex_budget: u64,
}

impl ModelParams {
    pub fn new(n: u64, f: SequenceSpec, g: SequenceSpec, horizon: u32) -> Self {
        ModelParams { n, f, g, horizon, vertex_budget: DEFAULT_VERTEX_BUDGET }
    }

    /// Single-vertex seed, `f = 1` at every step.
    pub fn cone(g: SequenceSpec, horizon: u32) -> Self {
        Self::new(1, SequenceSpec::Constant(1), g, horizon)
    }

    pub fn with_horizon(&self, horizon: u32) -> Self {
        ModelParams { horizon, ..self.clone() }
    }

    pub fn with_budget(self, vertex_budget: u64) -> Self {
        ModelParams { vertex_budget, ..self }
    }

    /// True when `n = 1` and `f_t = 1` on every step of the horizon.
    pub fn is_cone(&self) -> bool {
        self.n == 1
            && self
                .f
                .values(self.horizon)
                .map(|v| v.iter().all(|&x| x == 1))
                .unwrap_or(false)
    }

    /// `(f_t, g_t)` for one step; errors are reported by [`validate_params`].
    pub fn step_values(&self, t: u32) -> Result<(u64, u64), SequenceError> {
        Ok((self.f.eval(t)?, self.g.eval(t)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    EmptySeed,
    SeedExceedsBudget { n: u64, budget: u64 },
    BadValue { seq: SeqName, t: u32, reason: String },
    Decreasing { seq: SeqName, t: u32, previous: u64, value: u64 },
    /// `f_1` must fit inside the seed clique.
    SeedTooSmall { f1: u64, n: u64 },
    /// `f_t` must not exceed `f_{t-1} + g_{t-1}`, the order of the cliques built at `t - 1`.
    CliqueUnavailable { t: u32, f_t: u64, available: u64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptySeed => write!(f, "n must be at least 1"),
            Violation::SeedExceedsBudget { n, budget } => {
                write!(f, "seed order n={n} exceeds the vertex budget {budget}")
            }
            Violation::BadValue { seq, t, reason } => write!(f, "{seq}_{t}: {reason}"),
            Violation::Decreasing { seq, t, previous, value } => {
                write!(f, "{seq} decreases at t={t} ({previous} -> {value})")
            }
            Violation::SeedTooSmall { f1, n } => write!(f, "f_1={f1} exceeds the seed order n={n}"),
            Violation::CliqueUnavailable { t, f_t, available } => {
                write!(f, "f_{t}={f_t} exceeds f_{{t-1}}+g_{{t-1}}={available}")
            }
        }
    }
}

/// Collects every violated condition over `1..=horizon`.
pub fn validate_params(p: &ModelParams) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if p.n == 0 {
        violations.push(Violation::EmptySeed);
    }
    if p.n > p.vertex_budget {
        violations.push(Violation::SeedExceedsBudget { n: p.n, budget: p.vertex_budget });
    }

    let f = evaluate_all(SeqName::F, &p.f, p.horizon, &mut violations);
    let g = evaluate_all(SeqName::G, &p.g, p.horizon, &mut violations);

    for (seq, values) in [(SeqName::F, &f), (SeqName::G, &g)] {
        for t in 2..=p.horizon {
            if let (Some(previous), Some(value)) = (values[t as usize - 1], values[t as usize]) {
                if value < previous {
                    violations.push(Violation::Decreasing { seq, t, previous, value });
                }
            }
        }
    }

    if p.horizon >= 1 {
        if let Some(f1) = f[1] {
            if f1 > p.n && p.n > 0 {
                violations.push(Violation::SeedTooSmall { f1, n: p.n });
            }
        }
    }
    for t in 2..=p.horizon as usize {
        if let (Some(f_t), Some(f_prev), Some(g_prev)) = (f[t], f[t - 1], g[t - 1]) {
            let available = f_prev.saturating_add(g_prev);
            if f_t > available {
                violations.push(Violation::CliqueUnavailable { t: t as u32, f_t, available });
            }
        }
    }

    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

// Index 0 is unused so that `values[t]` reads naturally.
fn evaluate_all(
    seq: SeqName,
    spec: &SequenceSpec,
    horizon: u32,
    violations: &mut Vec<Violation>,
) -> Vec<Option<u64>> {
    let mut values = vec![None];
    for t in 1..=horizon {
        match spec.eval(t) {
            Ok(v) => values.push(Some(v)),
            Err(e) => {
                violations.push(Violation::BadValue { seq, t, reason: e.to_string() });
                values.push(None);
            }
        }
    }
    values
}
