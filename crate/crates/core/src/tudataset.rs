//! Reader for the TU Dortmund graph-classification text format.
//!
//! A dataset `DS` lives in a directory holding `DS_A.txt` (one directed arc
//! `a, b` per line, 1-indexed global vertex ids), `DS_graph_indicator.txt`
//! (graph id per vertex), `DS_graph_labels.txt` (class per graph) and an
//! optional `DS_node_labels.txt`.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A graph together with its class id as found in the label file.
pub type ClassifiedGraph = (LabeledGraph, i64);

pub fn load_tudataset(dir: impl AsRef<Path>, name: &str) -> Result<Vec<ClassifiedGraph>> {
    let dir = dir.as_ref();
    let file = |suffix: &str| dir.join(format!("{name}_{suffix}.txt"));

    let indicator_path = file("graph_indicator");
    let indicator = read_ints(&indicator_path, 1)?;
    if indicator.is_empty() {
        return Err(Error::FileParse {
            path: indicator_path,
            line: 1,
            message: "graph indicator file is empty".into(),
        });
    }
    let classes_path = file("graph_labels");
    let classes = read_ints(&classes_path, 1)?;
    let arcs_path = file("A");
    let arcs = read_ints(&arcs_path, 2)?;

    let labels_path = file("node_labels");
    let node_labels: Vec<u64> = if labels_path.exists() {
        let raw = read_ints(&labels_path, 1)?;
        if raw.len() != indicator.len() {
            return Err(Error::FileParse {
                path: labels_path,
                line: raw.len().min(indicator.len()) + 1,
                message: format!("{} node labels for {} vertices", raw.len(), indicator.len()),
            });
        }
        let values: Vec<i64> = raw.iter().map(|r| r.values[0]).collect();
        let min = values.iter().copied().min().unwrap_or(1);
        let shift = if min == 0 { 1 } else { 0 };
        values
            .iter()
            .zip(&raw)
            .map(|(&v, r)| {
                let l = v + shift;
                if l < 1 {
                    Err(Error::FileParse {
                        path: labels_path.clone(),
                        line: r.line,
                        message: format!("node label {v} cannot be made positive"),
                    })
                } else {
                    Ok(l as u64)
                }
            })
            .collect::<Result<_>>()?
    } else {
        vec![1; indicator.len()]
    };

    // Graph ids are 1..=G and vertices of one graph are contiguous.
    let num_graphs = classes.len();
    let mut graph_of = Vec::with_capacity(indicator.len());
    let mut local_index = Vec::with_capacity(indicator.len());
    let mut sizes = vec![0usize; num_graphs];
    for r in &indicator {
        let gid = r.values[0];
        if gid < 1 || gid as usize > num_graphs {
            return Err(Error::FileParse {
                path: indicator_path.clone(),
                line: r.line,
                message: format!("graph id {gid} outside 1..={num_graphs}"),
            });
        }
        let g = gid as usize - 1;
        graph_of.push(g);
        local_index.push(sizes[g]);
        sizes[g] += 1;
    }

    // Collapse the two arcs of each undirected edge: an unordered pair gets
    // max(#(a,b), #(b,a)) edges; a self-loop arc counts once.
    let mut arc_counts: Vec<HashMap<(usize, usize), (usize, usize)>> =
        vec![HashMap::new(); num_graphs];
    let mut first_seen: Vec<Vec<(usize, usize)>> = vec![Vec::new(); num_graphs];
    for r in &arcs {
        let (a, b) = (r.values[0], r.values[1]);
        for v in [a, b] {
            if v < 1 || v as usize > indicator.len() {
                return Err(Error::FileParse {
                    path: arcs_path.clone(),
                    line: r.line,
                    message: format!("vertex {v} outside 1..={}", indicator.len()),
                });
            }
        }
        let (a, b) = (a as usize - 1, b as usize - 1);
        let g = graph_of[a];
        if graph_of[b] != g {
            return Err(Error::FileParse {
                path: arcs_path.clone(),
                line: r.line,
                message: format!("edge {}-{} crosses graphs", a + 1, b + 1),
            });
        }
        let (la, lb) = (local_index[a], local_index[b]);
        let key = (la.min(lb), la.max(lb));
        let entry = arc_counts[g].entry(key).or_insert_with(|| {
            first_seen[g].push(key);
            (0, 0)
        });
        if la <= lb {
            entry.0 += 1;
        } else {
            entry.1 += 1;
        }
    }

    let mut label_cursor = 0;
    let mut out = Vec::with_capacity(num_graphs);
    for g in 0..num_graphs {
        let n = sizes[g];
        let labels = node_labels[label_cursor..label_cursor + n].to_vec();
        label_cursor += n;
        let mut edges = Vec::new();
        for &key in &first_seen[g] {
            let (fwd, bwd) = arc_counts[g][&key];
            let count = if key.0 == key.1 {
                fwd + bwd
            } else {
                fwd.max(bwd)
            };
            edges.extend(std::iter::repeat_n(key, count));
        }
        let graph = LabeledGraph::new(n, labels, edges)?;
        out.push((graph, classes[g].values[0]));
    }
    Ok(out)
}

struct Row {
    line: usize,
    values: Vec<i64>,
}

fn read_ints(path: &PathBuf, arity: usize) -> Result<Vec<Row>> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return Err(Error::MissingFile(path.clone()))
        }
        Err(e) => return Err(e.into()),
    };
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let values = line
            .split(',')
            .map(|tok| {
                tok.trim().parse::<i64>().map_err(|_| Error::FileParse {
                    path: path.clone(),
                    line: i + 1,
                    message: format!("'{}' is not an integer", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if values.len() != arity {
            return Err(Error::FileParse {
                path: path.clone(),
                line: i + 1,
                message: format!("expected {arity} values, found {}", values.len()),
            });
        }
        rows.push(Row {
            line: i + 1,
            values,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(dir: &Path, name: &str, body: &str) {
        fs::write(dir.join(name), body).unwrap();
    }

    fn scratch(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("nodeparse_tu_{tag}_{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        fs::create_dir_all(&dir).unwrap();
        dir
    }

    fn toy(dir: &Path) {
        // Graph 1: triangle 1-2-3. Graph 2: vertex 4 with a self-loop, 5 isolated.
        write(dir, "T_A.txt", "1, 2\n2, 1\n2, 3\n3, 2\n1, 3\n3, 1\n4, 4\n");
        write(dir, "T_graph_indicator.txt", "1\n1\n1\n2\n2\n");
        write(dir, "T_graph_labels.txt", "1\n-1\n");
    }

    #[test]
    fn loads_and_collapses_symmetric_arcs() {
        let dir = scratch("toy");
        toy(&dir);
        write(&dir, "T_node_labels.txt", "0\n2\n0\n1\n1\n");
        let graphs = load_tudataset(&dir, "T").unwrap();
        assert_eq!(graphs.len(), 2);
        let (g0, c0) = &graphs[0];
        assert_eq!(*c0, 1);
        assert_eq!(g0.num_vertices(), 3);
        assert_eq!(g0.num_edges(), 3);
        assert_eq!(g0.labels(), &[1, 3, 1]);
        let (g1, c1) = &graphs[1];
        assert_eq!(*c1, -1);
        assert_eq!(g1.edges(), &[(0, 0)]);
        assert_eq!(g1.labels(), &[2, 2]);
    }

    #[test]
    fn missing_node_labels_default_to_one() {
        let dir = scratch("nolabels");
        toy(&dir);
        let graphs = load_tudataset(&dir, "T").unwrap();
        assert!(graphs
            .iter()
            .all(|(g, _)| g.labels().iter().all(|&l| l == 1)));
    }

    #[test]
    fn missing_mandatory_file_is_an_error() {
        let dir = scratch("missing");
        write(&dir, "T_graph_indicator.txt", "1\n");
        write(&dir, "T_graph_labels.txt", "1\n");
        assert!(matches!(
            load_tudataset(&dir, "T"),
            Err(Error::MissingFile(_))
        ));
    }

    #[test]
    fn empty_indicator_is_an_error() {
        let dir = scratch("empty");
        write(&dir, "T_A.txt", "");
        write(&dir, "T_graph_indicator.txt", "");
        write(&dir, "T_graph_labels.txt", "");
        assert!(load_tudataset(&dir, "T").is_err());
    }

    #[test]
    fn cross_graph_edge_is_rejected() {
        let dir = scratch("cross");
        toy(&dir);
        write(&dir, "T_A.txt", "1, 2\n3, 4\n");
        let err = load_tudataset(&dir, "T").unwrap_err();
        assert!(matches!(err, Error::FileParse { line: 2, .. }), "{err}");
    }

    #[test]
    fn non_integer_token_reports_line() {
        let dir = scratch("token");
        toy(&dir);
        write(&dir, "T_A.txt", "1, 2\n2, x\n");
        let err = load_tudataset(&dir, "T").unwrap_err();
        assert!(matches!(err, Error::FileParse { line: 2, .. }), "{err}");
    }
}
