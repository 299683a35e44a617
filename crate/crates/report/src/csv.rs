use geom_core::fmt_sig17;

use crate::{ReportError, TableRow};

/// Fixed column order of the table report.
pub const CSV_HEADER: &str = "n,L_Rn,L_Cn,L_Dn,L_upper,W_Rn,W_Cn,W_Dn,W_upper,M,sigma,delta,engine";

/// Serialize rows as CSV with CRLF line endings and 17-significant-digit
/// decimals. No field is ever quoted: every value this report emits is
/// free of separators (numbers, and engine names drawn from a fixed
/// set).
pub fn emit_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push_str("\r\n");
    for row in rows {
        let fields = [
            row.n.to_string(),
            fmt_sig17(row.l_rn),
            fmt_sig17(row.l_cn),
            fmt_sig17(row.l_dn),
            fmt_sig17(row.l_upper),
            fmt_sig17(row.w_rn),
            fmt_sig17(row.w_cn),
            fmt_sig17(row.w_dn),
            fmt_sig17(row.w_upper),
            fmt_sig17(row.m_value),
            fmt_sig17(row.sigma),
            fmt_sig17(row.delta),
            row.engine.clone(),
        ];
        out.push_str(&fields.join(","));
        out.push_str("\r\n");
    }
    out
}

fn parse_field<T: std::str::FromStr>(raw: &str, line: usize, name: &str) -> Result<T, ReportError> {
    raw.parse().map_err(|_| {
        ReportError::Parse(format!("line {line}: cannot read {name} from {raw:?}"))
    })
}

/// Parse a document produced by `emit_csv`. Numeric fields survive the
/// round trip bit for bit because emission keeps 17 significant digits.
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, ReportError> {
    let mut lines = text.split("\r\n");
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => {
            return Err(ReportError::Parse(format!(
                "expected header {CSV_HEADER:?}, found {other:?}"
            )))
        }
    }
    let mut rows = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 13 {
            return Err(ReportError::Parse(format!(
                "line {}: expected 13 fields, found {}",
                i + 2,
                fields.len()
            )));
        }
        let ln = i + 2;
        rows.push(TableRow {
            n: parse_field(fields[0], ln, "n")?,
            l_rn: parse_field(fields[1], ln, "L_Rn")?,
            l_cn: parse_field(fields[2], ln, "L_Cn")?,
            l_dn: parse_field(fields[3], ln, "L_Dn")?,
            l_upper: parse_field(fields[4], ln, "L_upper")?,
            w_rn: parse_field(fields[5], ln, "W_Rn")?,
            w_cn: parse_field(fields[6], ln, "W_Cn")?,
            w_dn: parse_field(fields[7], ln, "W_Dn")?,
            w_upper: parse_field(fields[8], ln, "W_upper")?,
            m_value: parse_field(fields[9], ln, "M")?,
            sigma: parse_field(fields[10], ln, "sigma")?,
            delta: parse_field(fields[11], ln, "delta")?,
            engine: fields[12].to_string(),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_only_documents_parse_to_nothing() {
        assert!(parse_csv("n,L_Rn,L_Cn,L_Dn,L_upper,W_Rn,W_Cn,W_Dn,W_upper,M,sigma,delta,engine\r\n")
            .unwrap()
            .is_empty());
    }

    #[test]
    fn wrong_header_is_rejected() {
        assert!(matches!(parse_csv("a,b,c\r\n"), Err(ReportError::Parse(_))));
    }

    #[test]
    fn short_lines_are_rejected() {
        let doc = format!("{CSV_HEADER}\r\n16,1.0\r\n");
        assert!(matches!(parse_csv(&doc), Err(ReportError::Parse(_))));
    }

    #[test]
    fn unreadable_numbers_are_rejected() {
        let doc = format!(
            "{CSV_HEADER}\r\n16,x,0,0,0,0,0,0,0,0,0,0,block_pattern\r\n"
        );
        let err = parse_csv(&doc).unwrap_err();
        assert!(err.to_string().contains("L_Rn"));
    }
}
