//! Edge-list text format.
//!
//! ```text
//! # comment
//! n 5
//! 1 2
//! 2 3
//! ```
//!
//! Vertices are 1-based in the file and 0-based in memory. The `n <count>`
//! header is mandatory so isolated vertices survive.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields[0] == "n" {
            if n.is_some() {
                return Err(err("duplicate `n` header".into()));
            }
            let [_, count] = fields.as_slice() else {
                return Err(err("expected `n <count>`".into()));
            };
            n = Some(
                count
                    .parse()
                    .map_err(|_| err(format!("invalid vertex count `{count}`")))?,
            );
            continue;
        }
        let Some(order) = n else {
            return Err(err("edge before the `n <count>` header".into()));
        };
        let [a, b] = fields.as_slice() else {
            return Err(err(format!("expected two vertex labels, got `{line}`")));
        };
        let label = |s: &str| -> Result<usize> {
            let v: usize = s.parse().map_err(|_| err(format!("invalid vertex `{s}`")))?;
            if v == 0 || v > order {
                return Err(err(format!("vertex {v} outside 1..={order}")));
            }
            Ok(v - 1)
        };
        edges.push((label(a)?, label(b)?));
    }
    let n = n.ok_or(Error::Parse {
        line: 0,
        msg: "missing `n <count>` header".into(),
    })?;
    Graph::new(n, &edges)
}

/// Inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_header_comments_and_isolated_vertices() {
        let g = parse_edge_list("# bowtie plus an isolated vertex\nn 6\n1 2\n2 3\n3 1\n\n3 4\n4 5\n5 3\n").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.neighbors(5).unwrap().is_empty());
        assert_eq!(g.neighbors(2).unwrap().to_vec(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn round_trips() {
        let g = crate::families::triangular_cactus(4).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list("1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n1 4\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\n1 2 3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::Parse { line: 0, .. })));
        assert!(matches!(parse_edge_list("n 3\n2 2\n"), Err(Error::Input(_))));
    }
}
