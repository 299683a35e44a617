//! Vertex-level construction of the mirror-symmetric diameter-chain
//! polygons, the regular and Reinhardt baselines they are measured
//! against, and closed-form metric evaluation for all families.

mod baselines;
mod chain;
mod closed_form;
mod dn;
mod serialize;
mod spec;

pub use baselines::{build_regular, build_reinhardt};
pub use chain::{
    apply_pattern_step, rotate_cw, ChainState, CHAIN_UNIT_TOL, SEGMENT_FAIL_TOL,
};
pub use closed_form::{
    closed_form_gaps, closed_form_reference, dn_closed_form, ClosedFormGaps, Family,
};
pub use dn::{
    build_chain, build_dn, build_dn_delta_zero, build_dn_from_result, CLOSURE_TOL,
    GEO_CLOSED_AGREE_TOL, MIRROR_TOL, SCHEDULE_SUM_TOL,
};
pub use serialize::{polygon_from_json, polygon_to_json};
pub use spec::{angle_schedule, PolygonSpec};

use geom_core::GeomError;
use signopt::SignOptError;

#[derive(Debug, thiserror::Error)]
pub enum ConstructError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("construction invariant {check} violated: {detail}")]
    Invariant { check: String, detail: String },
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    SignOpt(#[from] SignOptError),
}

impl ConstructError {
    pub(crate) fn invariant(check: &str, detail: String) -> Self {
        ConstructError::Invariant {
            check: check.to_string(),
            detail,
        }
    }
}
