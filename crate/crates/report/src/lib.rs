//! Comparison tables and asymptotic diagnostics for the polygon
//! families: one row per n with the perimeters and widths of R_n, C_n,
//! and D_n against the bounds, CSV and JSON emission, and the scaled
//! gap ratios with their limits.

mod csv;
mod gaps;
mod table;

pub use csv::{emit_csv, parse_csv, CSV_HEADER};
pub use gaps::{gap_diagnostics, GapReport, RatioCheck};
pub use table::{emit_json, make_table, row_for_result, TableRow, GEOMETRY_AGREE_TOL};

use construct::ConstructError;
use signopt::SignOptError;
use thiserror::Error;

/// Errors from table assembly, diagnostics, and report parsing.
#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    SignOpt(#[from] SignOptError),
    /// A serialized report that does not parse back into rows.
    #[error("malformed table document: {0}")]
    Parse(String),
    /// A row whose columns violate the family ordering.
    #[error("column ordering violated: {0}")]
    Ordering(String),
}
