//! Minimization of |Σ b_k sin((2k+1)π/n)| over sign vectors b, the scalar
//! σ = 2 sin(π/n)·M derived from the minimum, and the turning angle δ
//! obtained from σ. Three engines solve the same discrete problem at
//! different scales; where two of them can both run they agree bit for bit.

mod bound;
mod delta;
mod engine;
mod types;

pub use bound::{m_upper_bound, m_upper_bound_closed};
pub use delta::{solve_delta, DeltaSolution, DELTA_RESIDUAL_TOL};
pub use engine::{
    block_pattern_result, block_pattern_vector, derive_block_pattern, objective, search,
    search_exhaustive, search_mitm, search_mitm_with_budget, DEFAULT_MITM_BUDGET_MB,
};
pub use types::{Engine, SignSearchResult, SignVector};

#[derive(Debug, thiserror::Error)]
pub enum SignOptError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}
