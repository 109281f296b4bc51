//! Generator and analysis toolkit for frustum graphs: starting from `K_n`,
//! every clique of order `f_t` is extended at step `t` by `g_t` new vertices
//! into a clique of order `f_t + g_t`.
//!
//! The crate is split into the generator ([`generate`]), exact measurements
//! ([`metrics`]), closed-form predictions ([`oracles`]), normalized Laplacian
//! analysis ([`spectral`]) and a harness that compares predictions with
//! measurements ([`validate`]).

pub mod cliques;
pub mod generate;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod oracles;
pub mod params;
pub mod sequence;
pub mod spectral;
pub mod validate;

pub use cliques::enumerate_k_cliques;
pub use generate::{extend_step, generate, generate_logged, GenerateError};
pub use graph::{CapRecord, FrustumGraph, VertexId, VertexMeta};
pub use params::{validate_params, ModelParams, Violation};
pub use sequence::SequenceSpec;

pub type Rational = num_rational::BigRational;

/// Writes a rational as `p/q`, even when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
