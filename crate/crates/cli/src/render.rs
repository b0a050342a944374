//! Shared output helpers.

use fairdom::{Count, VertexSet};
use serde_json::{Number, Value};

/// Exact JSON number for a big count.
pub fn num(c: &Count) -> Value {
    Value::Number(c.to_string().parse::<Number>().expect("decimal digits form a JSON number"))
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values are serialisable");
    s.push('\n');
    s
}

/// CSV document from a header and rows; fields are quoted when needed.
pub fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

/// Vertex labels as printed: 1-based unless `zero_based`.
pub fn labels(s: VertexSet, zero_based: bool) -> Vec<usize> {
    let shift = usize::from(!zero_based);
    s.iter().map(|v| v + shift).collect()
}

pub fn braces(s: VertexSet, zero_based: bool) -> String {
    let l: Vec<String> = labels(s, zero_based).iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", l.join(","))
}

pub fn spaced(s: VertexSet, zero_based: bool) -> String {
    let l: Vec<String> = labels(s, zero_based).iter().map(|v| v.to_string()).collect();
    l.join(" ")
}

/// Right-aligned text table.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(String::len).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
