//! One-line text format for labeled multigraphs:
//!
//! ```text
//! n=<int> labels=<l0>,...,<l{n-1}> e=<a>-<b>[,<a>-<b>...]
//! ```
//!
//! Repeated pairs are parallel edges and `a-a` is a self-loop. Blank lines
//! and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Parses exactly one graph from `text`.
pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut graphs = parse_edge_lists(text)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(Error::Parse {
            line: 1,
            message: "no graph line found".into(),
        }),
        k => Err(Error::Parse {
            line: 1,
            message: format!("expected one graph, found {k}"),
        }),
    }
}

/// Parses one graph per non-comment line.
pub fn parse_edge_lists(text: &str) -> Result<Vec<LabeledGraph>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line, i + 1)?);
    }
    Ok(out)
}

fn parse_line(line: &str, lineno: usize) -> Result<LabeledGraph> {
    let err = |message: String| Error::Parse {
        line: lineno,
        message,
    };
    let mut n = None;
    let mut labels = None;
    let mut edges = None;
    for field in line.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| err(format!("field '{field}' is not key=value")))?;
        match key {
            "n" => {
                let v: usize = value
                    .parse()
                    .map_err(|_| err(format!("bad vertex count '{value}'")))?;
                n = Some(v);
            }
            "labels" => {
                let ls = split_list(value)
                    .map(|tok| {
                        tok.parse::<u64>()
                            .map_err(|_| err(format!("bad label '{tok}'")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                labels = Some(ls);
            }
            "e" => {
                let es = split_list(value)
                    .map(|tok| {
                        let (a, b) = tok
                            .split_once('-')
                            .ok_or_else(|| err(format!("bad edge '{tok}'")))?;
                        let a = a.parse().map_err(|_| err(format!("bad endpoint '{a}'")))?;
                        let b = b.parse().map_err(|_| err(format!("bad endpoint '{b}'")))?;
                        Ok((a, b))
                    })
                    .collect::<Result<Vec<_>>>()?;
                edges = Some(es);
            }
            other => return Err(err(format!("unknown field '{other}'"))),
        }
    }
    let n = n.ok_or_else(|| err("missing n=".into()))?;
    let labels = labels.ok_or_else(|| err("missing labels=".into()))?;
    let edges = edges.unwrap_or_default();
    LabeledGraph::new(n, labels, edges).map_err(|e| err(e.to_string()))
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').filter(|s| !s.is_empty())
}

/// Serializes in stored edge order. Always emits all three fields.
pub fn serialize_edge_list(g: &LabeledGraph) -> String {
    let mut out = String::new();
    write!(out, "n={} labels=", g.num_vertices()).unwrap();
    for (i, l) in g.labels().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{l}").unwrap();
    }
    out.push_str(" e=");
    for (i, (a, b)) in g.edges().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{a}-{b}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_k2() {
        let g = parse_edge_list("n=2 labels=1,1 e=0-1").unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!(g.labels(), &[1, 1]);
    }

    #[test]
    fn parses_double_self_loop() {
        let g = parse_edge_list("n=1 labels=5 e=0-0,0-0").unwrap();
        assert_eq!(g.edges(), &[(0, 0), (0, 0)]);
        assert_eq!(g.degrees(), vec![4]);
    }

    #[test]
    fn edgeless_graph_round_trips() {
        let text = "n=3 labels=1,2,3 e=";
        assert_eq!(serialize_edge_list(&parse_edge_list(text).unwrap()), text);
        let g = parse_edge_list("n=3 labels=1,2,3").unwrap();
        assert_eq!(g.num_edges(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("# header\n\nn=2 labels=1,0 e=0-1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
        let err = parse_edge_list("n=2 labels=1,1 e=0-2").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_edge_list("n=2 labels=1,1 e=0_1").unwrap_err();
        assert!(err.to_string().contains("bad edge"));
        let err = parse_edge_list("n=x labels=1").unwrap_err();
        assert!(err.to_string().contains("bad vertex count"));
    }

    fn arb_graph() -> impl Strategy<Value = LabeledGraph> {
        (1usize..=10).prop_flat_map(|n| {
            (
                proptest::collection::vec(1u64..=5, n),
                proptest::collection::vec((0..n, 0..n), 0..20),
            )
                .prop_map(move |(labels, edges)| LabeledGraph::new(n, labels, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn text_round_trip_is_identity(g in arb_graph()) {
            let text = serialize_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(serialize_edge_list(&back), text);
        }
    }
}
