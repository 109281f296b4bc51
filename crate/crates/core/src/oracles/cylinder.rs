//! Constant cylinder: seed `K_n`, `f_t = g_t = n` for every step.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use super::{binomial, OracleError};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderClosedForms {
    /// Number of `n`-cliques, `binom(2n, n)^t`.
    pub cliques: BigUint,
    pub order: BigUint,
    pub edges: BigUint,
    /// Limit of `e_t / n_t`, `(3n - 1) / 2`.
    pub limit_ratio: Rational,
}

pub fn cylinder_constant_closed(n: u64, t: u32) -> Result<CylinderClosedForms, OracleError> {
    if n == 0 {
        return Err(OracleError::EmptySeed);
    }
    let base = binomial(2 * n, n);
    // (base^t - 1) / (base - 1) as a geometric sum, so n = 1 (base 2) needs no special case
    let mut geometric = BigUint::zero();
    let mut power = BigUint::one();
    for _ in 0..t {
        geometric += &power;
        power *= &base;
    }
    let per_clique_edges = BigUint::from(n * (3 * n - 1) / 2);
    Ok(CylinderClosedForms {
        cliques: power,
        order: BigUint::from(n) + BigUint::from(n) * &geometric,
        edges: binomial(n, 2) + per_clique_edges * geometric,
        limit_ratio: Rational::new(BigInt::from(3 * n - 1), BigInt::from(2)),
    })
}
