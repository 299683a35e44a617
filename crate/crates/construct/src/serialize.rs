//! Polygon exchange format: one JSON document per polygon, numbers
//! printed at 17 significant digits so coordinates survive a round
//! trip bit for bit.

use std::fmt::Write as _;

use geom_core::{fmt_sig17, ConvexPolygon, Point2};

use crate::spec::PolygonSpec;
use crate::ConstructError;

pub fn polygon_to_json(polygon: &ConvexPolygon, spec: Option<&PolygonSpec>) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(
        out,
        "  \"label\": {},",
        serde_json::Value::String(polygon.label.clone())
    );
    let _ = writeln!(out, "  \"n\": {},", polygon.vertices.len());
    out.push_str("  \"vertices\": [\n");
    for (i, v) in polygon.vertices.iter().enumerate() {
        let comma = if i + 1 < polygon.vertices.len() { "," } else { "" };
        let _ = writeln!(out, "    [{}, {}]{comma}", fmt_sig17(v.x), fmt_sig17(v.y));
    }
    out.push_str("  ],\n");
    out.push_str("  \"diameter_pairs\": [");
    for (i, &(a, b)) in polygon.diameter_pairs.iter().enumerate() {
        let comma = if i + 1 < polygon.diameter_pairs.len() { ", " } else { "" };
        let _ = write!(out, "[{a}, {b}]{comma}");
    }
    out.push_str("]");
    if let Some(spec) = spec {
        out.push_str(",\n  \"spec\": {\n    \"b\": [");
        for (i, e) in spec.b.entries().iter().enumerate() {
            let comma = if i + 1 < spec.b.len() { ", " } else { "" };
            let _ = write!(out, "{e}{comma}");
        }
        let _ = write!(out, "],\n    \"delta\": {}\n  }}", fmt_sig17(spec.delta));
    }
    out.push_str("\n}\n");
    out
}

/// Parse a polygon document back into a validated polygon plus the
/// chain parameters when the document carries them.
pub fn polygon_from_json(
    text: &str,
) -> Result<(ConvexPolygon, Option<(Vec<i8>, f64)>), ConstructError> {
    let malformed = |what: &str| ConstructError::Parameter(format!("polygon document: {what}"));
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| malformed(&e.to_string()))?;
    let label = value
        .get("label")
        .and_then(|v| v.as_str())
        .ok_or_else(|| malformed("missing label"))?;
    let n = value
        .get("n")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| malformed("missing n"))?;
    let vertices: Vec<Point2> = value
        .get("vertices")
        .and_then(|v| v.as_array())
        .ok_or_else(|| malformed("missing vertices"))?
        .iter()
        .map(|pair| {
            let xy = pair.as_array().filter(|a| a.len() == 2)?;
            Some(Point2::new(xy[0].as_f64()?, xy[1].as_f64()?))
        })
        .collect::<Option<_>>()
        .ok_or_else(|| malformed("vertices must be [x, y] number pairs"))?;
    if vertices.len() != n as usize {
        return Err(malformed("vertex count disagrees with n"));
    }
    let pairs: Vec<(usize, usize)> = value
        .get("diameter_pairs")
        .and_then(|v| v.as_array())
        .ok_or_else(|| malformed("missing diameter_pairs"))?
        .iter()
        .map(|pair| {
            let ij = pair.as_array().filter(|a| a.len() == 2)?;
            Some((ij[0].as_u64()? as usize, ij[1].as_u64()? as usize))
        })
        .collect::<Option<_>>()
        .ok_or_else(|| malformed("diameter_pairs must be [i, j] index pairs"))?;
    let polygon = ConvexPolygon::new(vertices, pairs, label)?;
    let chain_spec = match value.get("spec") {
        None | Some(serde_json::Value::Null) => None,
        Some(spec) => {
            let b: Vec<i8> = spec
                .get("b")
                .and_then(|v| v.as_array())
                .ok_or_else(|| malformed("spec.b must be a sign list"))?
                .iter()
                .map(|e| {
                    let x = e.as_i64()?;
                    (x == 1 || x == -1).then_some(x as i8)
                })
                .collect::<Option<_>>()
                .ok_or_else(|| malformed("spec.b entries must be +1 or -1"))?;
            let delta = spec
                .get("delta")
                .and_then(|v| v.as_f64())
                .ok_or_else(|| malformed("spec.delta must be a number"))?;
            Some((b, delta))
        }
    };
    Ok((polygon, chain_spec))
}
