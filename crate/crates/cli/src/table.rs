//! Table rendering: CSV with minimal quoting, or pretty JSON.
//!
//! Both renderers are deterministic — row order is fixed by the caller
//! and every cell is produced by exact formatting, so repeated runs of
//! the same command line emit identical bytes.

use serde::Serialize;

/// Renders a header and rows as CSV, quoting only when a cell needs it.
pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.iter().map(|h| quote(h)).collect::<Vec<_>>().join(","));
    out.push('\n');
    for row in rows {
        debug_assert_eq!(row.len(), header.len());
        out.push_str(&row.iter().map(|c| quote(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

/// RFC 4180 quoting, applied only when the cell contains , " or newline.
fn quote(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

/// Renders rows as a pretty-printed JSON array.
pub fn to_json<T: Serialize>(rows: &[T]) -> Result<String, String> {
    let mut text = serde_json::to_string_pretty(rows).map_err(|e| e.to_string())?;
    text.push('\n');
    Ok(text)
}
