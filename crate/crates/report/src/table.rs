use construct::{build_dn_from_result, closed_form_reference, dn_closed_form, Family};
use serde::Serialize;
use signopt::{block_pattern_result, SignSearchResult};

use crate::gaps::GapReport;
use crate::ReportError;

/// Maximum allowed disagreement between the measured polygon metrics
/// and the closed forms before a row may be emitted.
pub const GEOMETRY_AGREE_TOL: f64 = 1e-10;

/// One comparison row: perimeters of the regular n-gon, the composed
/// closed-form competitor, and the chain polygon against the perimeter
/// bound, then the same four widths, then the scalars behind the chain
/// polygon and the engine that chose its sign vector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub l_rn: f64,
    pub l_cn: f64,
    pub l_dn: f64,
    pub l_upper: f64,
    pub w_rn: f64,
    pub w_cn: f64,
    pub w_dn: f64,
    pub w_upper: f64,
    pub m_value: f64,
    pub sigma: f64,
    pub delta: f64,
    pub engine: String,
}

impl TableRow {
    /// The family ordering both tables exhibit: R below C below D below
    /// the bound, with C = D possible at small n.
    pub fn check(&self) -> Result<(), ReportError> {
        let slack = 1e-12;
        let perims = [self.l_rn, self.l_cn, self.l_dn, self.l_upper + slack];
        let widths = [self.w_rn, self.w_cn, self.w_dn, self.w_upper + slack];
        for seq in [perims, widths] {
            if seq.windows(2).any(|w| w[0] > w[1]) {
                return Err(ReportError::Ordering(format!(
                    "row n = {} is not ordered: {seq:?}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Build the row backed by one sign-search result. The chain polygon is
/// constructed and fully validated first; its measured perimeter and
/// width must agree with the closed forms before the row is accepted.
pub fn row_for_result(result: &SignSearchResult) -> Result<TableRow, ReportError> {
    let n = result.best.n();
    let (_, _, measured) = build_dn_from_result(result)?;
    let (closed, sol) = dn_closed_form(result)?;
    for (got, want, what) in [
        (measured.perimeter, closed.perimeter, "perimeter"),
        (measured.width, closed.width, "width"),
    ] {
        if (got - want).abs() > GEOMETRY_AGREE_TOL {
            return Err(ReportError::Ordering(format!(
                "measured {what} {got} disagrees with closed form {want} at n = {n}"
            )));
        }
    }
    let regular = closed_form_reference(n, Family::Rn)?;
    let composed = closed_form_reference(n, Family::Cn)?;
    let upper = closed_form_reference(n, Family::Upper)?;
    let row = TableRow {
        n,
        l_rn: regular.perimeter,
        l_cn: composed.perimeter,
        l_dn: closed.perimeter,
        l_upper: upper.perimeter,
        w_rn: regular.width,
        w_cn: composed.width,
        w_dn: closed.width,
        w_upper: upper.width,
        m_value: result.m_value,
        sigma: result.sigma,
        delta: sol.delta,
        engine: result.engine.to_string(),
    };
    row.check()?;
    Ok(row)
}

/// Rows for each n in order, using the repeated-block-expansion sign
/// vectors that the published reference values correspond to.
pub fn make_table(n_list: &[u32]) -> Result<Vec<TableRow>, ReportError> {
    n_list
        .iter()
        .map(|&n| row_for_result(&block_pattern_result(n)?))
        .collect()
}

#[derive(Serialize)]
struct JsonReport<'a> {
    rows: &'a [TableRow],
    diagnostics: &'a [GapReport],
}

/// The full report as pretty-printed JSON: every row field by name,
/// followed by the gap diagnostics.
pub fn emit_json(rows: &[TableRow], diagnostics: &[GapReport]) -> String {
    let report = JsonReport { rows, diagnostics };
    serde_json::to_string_pretty(&report).expect("report serialization cannot fail")
}
