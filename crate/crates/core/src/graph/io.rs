//! Edge-list text format and DOT export.
//!
//! ```text
//! # P4
//! n 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line declares the order; each following line is one
//! whitespace-separated edge. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut order = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected a non-negative integer, got `{s}`"),
            })
        };
        match order {
            None => match fields.as_slice() {
                ["n", count] => order = Some(parse(count)?),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected header `n <count>`".into(),
                    })
                }
            },
            Some(_) => match fields.as_slice() {
                [u, v] => edges.push((parse(u)?, parse(v)?)),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: "expected an edge `u v`".into(),
                    })
                }
            },
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        msg: "missing header `n <count>`".into(),
    })?;
    Graph::new(n, edges)
}

/// Reads either the edge-list format or the JSON form `{"n":..,"edges":..}`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            msg: e.to_string(),
        })
    } else {
        parse_edge_list(text)
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.order() {
        if g.degree(v) == 0 {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# path\n\nn 4  # order\n0 1\n1 2\n  2 3\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("n 3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert_eq!(parse_edge_list("n 3\n1 1\n"), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn round_trips() {
        let g = Graph::new(5, [(0, 4), (1, 2), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(parse_graph(&json).unwrap(), g);
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(to_dot(&g), "graph {\n  2;\n  0 -- 1;\n}\n");
    }
}
