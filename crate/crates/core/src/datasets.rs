//! Generators for the synthetic hard instances.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edgelist::serialize_edge_list;
use crate::error::{Error, Result};
use crate::graph::shapes::{cycle, disjoint_union};
use crate::graph::LabeledGraph;
use crate::iso::are_isomorphic_bruteforce;

/// Draws per requested graph before a generator gives up.
pub const MAX_ATTEMPTS_PER_GRAPH: usize = 5000;

/// A graph with its class id (1-based).
pub type Labeled = (LabeledGraph, usize);

/// `n = 2, 4, ..., 32`: class 1 is two disjoint cycles of length `n/2`,
/// class 2 one cycle of length `n`. Length 1 is a self-loop and length 2 a
/// parallel pair.
pub fn gen_gnn_hard() -> Vec<Labeled> {
    let mut out = Vec::with_capacity(32);
    for n in (2..=32).step_by(2) {
        out.push((disjoint_union(&cycle(n / 2), &cycle(n / 2)), 1));
        out.push((cycle(n), 2));
    }
    out
}

/// `m = 2..=19`: class 1 is two vertices joined by `m` parallel edges,
/// class 2 has `m` self-loops on one vertex, plus an isolated second vertex
/// unless `one_node` is set.
pub fn gen_npba_hard(one_node: bool) -> Vec<Labeled> {
    let mut out = Vec::with_capacity(36);
    for m in 2..=19 {
        let double = LabeledGraph::unlabeled(2, vec![(0, 1); m]).expect("valid");
        let n = if one_node { 1 } else { 2 };
        let loops = LabeledGraph::unlabeled(n, vec![(0, 0); m]).expect("valid");
        out.push((double, 1));
        out.push((loops, 2));
    }
    out
}

/// `count` pairwise non-isomorphic simple G(n, p) graphs, each its own
/// class. Labels are uniform on `1..=n` when `labeled`, else 1.
pub fn gen_erdos(count: usize, n: usize, p: f64, labeled: bool, seed: u64) -> Result<Vec<Labeled>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    collect_distinct(count, "no new isomorphism class", || {
        let labels = (0..n)
            .map(|_| {
                if labeled {
                    rng.random_range(1..=n as u64)
                } else {
                    1
                }
            })
            .collect();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        Some(LabeledGraph::new(n, labels, edges).expect("valid"))
    })
}

/// `count` pairwise non-isomorphic `degree`-regular graphs on `n` vertices
/// by uniform stub matching. With `simple`, draws containing loops or
/// parallel edges are rejected; otherwise they are kept, a loop adding 2
/// to its vertex's degree.
pub fn gen_random_regular(
    count: usize,
    n: usize,
    degree: usize,
    seed: u64,
    simple: bool,
) -> Result<Vec<Labeled>> {
    if (n * degree) % 2 == 1 {
        return Err(Error::GenerationExhausted {
            attempts: 0,
            reason: format!("n * degree = {} is odd", n * degree),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reason = if simple {
        "no new simple isomorphism class"
    } else {
        "no new isomorphism class"
    };
    collect_distinct(count, reason, || {
        let mut stubs: Vec<usize> = (0..n)
            .flat_map(|v| std::iter::repeat_n(v, degree))
            .collect();
        stubs.shuffle(&mut rng);
        let mut edges: Vec<(usize, usize)> = stubs
            .chunks(2)
            .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
            .collect();
        if simple {
            edges.sort_unstable();
            let repeated = edges.windows(2).any(|w| w[0] == w[1]);
            if repeated || edges.iter().any(|&(a, b)| a == b) {
                return None;
            }
        }
        Some(LabeledGraph::unlabeled(n, edges).expect("valid"))
    })
}

fn collect_distinct(
    count: usize,
    reason: &str,
    mut draw: impl FnMut() -> Option<LabeledGraph>,
) -> Result<Vec<Labeled>> {
    let limit = MAX_ATTEMPTS_PER_GRAPH * count.max(1);
    let mut out: Vec<Labeled> = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == limit {
            return Err(Error::GenerationExhausted {
                attempts,
                reason: format!("{reason} ({} of {count} found)", out.len()),
            });
        }
        attempts += 1;
        let Some(g) = draw() else { continue };
        let mut fresh = true;
        for (h, _) in &out {
            if are_isomorphic_bruteforce(h, &g)? {
                fresh = false;
                break;
            }
        }
        if fresh {
            let class = out.len() + 1;
            out.push((g, class));
        }
    }
    Ok(out)
}

/// A generator family with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    GnnHard,
    NpbaHard {
        one_node: bool,
    },
    Erdos {
        count: usize,
        n: usize,
        p: f64,
        labeled: bool,
    },
    RandomRegular {
        count: usize,
        n: usize,
        degree: usize,
        simple: bool,
    },
}

/// Everything that determines a generated dataset.
#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticSpec {
    pub family: Family,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn name(&self) -> &'static str {
        match self.family {
            Family::GnnHard => "gnn-hard",
            Family::NpbaHard { .. } => "npba-hard",
            Family::Erdos { labeled: false, .. } => "erdos",
            Family::Erdos { labeled: true, .. } => "erdos-labels",
            Family::RandomRegular { .. } => "random-regular",
        }
    }

    /// `key=value` pairs, seed last.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        let mut out = match &self.family {
            Family::GnnHard => vec![],
            Family::NpbaHard { one_node } => vec![("one_node", one_node.to_string())],
            Family::Erdos {
                count,
                n,
                p,
                labeled,
            } => vec![
                ("count", count.to_string()),
                ("n", n.to_string()),
                ("p", p.to_string()),
                ("labeled", labeled.to_string()),
            ],
            Family::RandomRegular {
                count,
                n,
                degree,
                simple,
            } => vec![
                ("count", count.to_string()),
                ("n", n.to_string()),
                ("degree", degree.to_string()),
                ("simple", simple.to_string()),
            ],
        };
        out.push(("seed", self.seed.to_string()));
        out
    }

    pub fn generate(&self) -> Result<Vec<Labeled>> {
        match self.family {
            Family::GnnHard => Ok(gen_gnn_hard()),
            Family::NpbaHard { one_node } => Ok(gen_npba_hard(one_node)),
            Family::Erdos {
                count,
                n,
                p,
                labeled,
            } => gen_erdos(count, n, p, labeled, self.seed),
            Family::RandomRegular {
                count,
                n,
                degree,
                simple,
            } => gen_random_regular(count, n, degree, self.seed, simple),
        }
    }
}

/// Manifest text: a `family=... key=value ...` header, then one
/// `<file> class=<id>` line per graph.
pub fn manifest(spec: &SyntheticSpec, files: &[(String, usize)]) -> String {
    let mut out = format!("family={}", spec.name());
    for (k, v) in spec.params() {
        write!(out, " {k}={v}").unwrap();
    }
    out.push('\n');
    for (file, class) in files {
        writeln!(out, "{file} class={class}").unwrap();
    }
    out
}

/// Writes `graph_<i>.txt` per graph in edge-list format and `manifest.txt`
/// into `dir`, returning the graph file names.
pub fn write_dataset(dir: &Path, spec: &SyntheticSpec, graphs: &[Labeled]) -> Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let width = graphs.len().saturating_sub(1).to_string().len().max(3);
    let mut files = Vec::with_capacity(graphs.len());
    for (i, (g, class)) in graphs.iter().enumerate() {
        let name = format!("graph_{i:0width$}.txt");
        fs::write(dir.join(&name), serialize_edge_list(g) + "\n")?;
        files.push((name, *class));
    }
    fs::write(dir.join("manifest.txt"), manifest(spec, &files))?;
    Ok(files.into_iter().map(|(f, _)| f).collect())
}
