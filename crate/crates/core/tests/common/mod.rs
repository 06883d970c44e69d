#![allow(dead_code)]

use std::collections::HashMap;

use nodeparse::engine::{EdgeSortMode, EndpointMode, SortConfig, Variant};
use nodeparse::iso::are_isomorphic_bruteforce;
use nodeparse::LabeledGraph;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

pub fn random_graph<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_edges: usize,
    max_label: u64,
) -> LabeledGraph {
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=max_edges);
    random_graph_sized(rng, n, m, max_label)
}

pub fn random_graph_sized<R: Rng>(rng: &mut R, n: usize, m: usize, max_label: u64) -> LabeledGraph {
    let labels = (0..n).map(|_| rng.random_range(1..=max_label)).collect();
    let edges = (0..m)
        .map(|_| (rng.random_range(0..n), rng.random_range(0..n)))
        .collect();
    LabeledGraph::new(n, labels, edges).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn random_config<R: Rng>(rng: &mut R) -> SortConfig {
    SortConfig {
        edge_mode: *EdgeSortMode::ALL.choose(rng).unwrap(),
        endpoint_mode: if rng.random_bool(0.5) {
            EndpointMode::Random
        } else {
            EndpointMode::ByLevel
        },
        variant: Variant::Npa,
        seed: rng.random(),
    }
}

/// Moves one endpoint of one edge, keeping sizes and labels.
pub fn perturbed<R: Rng>(rng: &mut R, g: &LabeledGraph) -> LabeledGraph {
    let mut edges = g.edges().to_vec();
    if !edges.is_empty() {
        let i = rng.random_range(0..edges.len());
        edges[i].1 = rng.random_range(0..g.num_vertices());
    }
    LabeledGraph::new(g.num_vertices(), g.labels().to_vec(), edges).unwrap()
}

pub type Invariant = (usize, usize, Vec<(u64, usize, usize, Vec<u64>)>);

/// Isomorphism-invariant bucket key: sizes plus the sorted per-vertex
/// (label, degree, loops, sorted neighbor labels).
pub fn invariant(g: &LabeledGraph) -> Invariant {
    let deg = g.degrees();
    let adj = g.adjacency();
    let mut sig: Vec<(u64, usize, usize, Vec<u64>)> = (0..g.num_vertices())
        .map(|v| {
            let loops = adj[v].iter().filter(|&&u| u == v).count() / 2;
            let mut nl: Vec<u64> = adj[v].iter().map(|&u| g.label(u)).collect();
            nl.sort_unstable();
            (g.label(v), deg[v], loops, nl)
        })
        .collect();
    sig.sort();
    (g.num_vertices(), g.num_edges(), sig)
}

/// Assigns isomorphism class ids through the brute-force oracle.
#[derive(Default)]
pub struct ClassIndex {
    buckets: HashMap<Invariant, Vec<(LabeledGraph, usize)>>,
    pub reps: Vec<LabeledGraph>,
}

impl ClassIndex {
    /// Class id of `g` and whether it is new.
    pub fn classify(&mut self, g: &LabeledGraph) -> (usize, bool) {
        let bucket = self.buckets.entry(invariant(g)).or_default();
        for (rep, id) in bucket.iter() {
            if are_isomorphic_bruteforce(rep, g).unwrap() {
                return (*id, false);
            }
        }
        let id = self.reps.len();
        bucket.push((g.clone(), id));
        self.reps.push(g.clone());
        (id, true)
    }
}

/// One representative per isomorphism class of multigraphs with at most
/// `max_edges` edges and labels in `1..=max_label`: every graph without
/// isolated vertices, plus isolated vertices up to `max_vertices` in total.
pub fn catalog(max_edges: usize, max_vertices: usize, max_label: u64) -> Vec<LabeledGraph> {
    let mut shapes: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    let mut current = Vec::new();
    edge_shapes(max_edges, 0, &mut current, &mut shapes);
    let mut index = ClassIndex::default();
    for (used, edges) in shapes {
        for n in used.max(1)..=used.max(max_vertices) {
            let total = (max_label as usize).pow(n as u32);
            for code in 0..total {
                let mut c = code;
                let labels = (0..n)
                    .map(|_| {
                        let l = (c % max_label as usize) as u64 + 1;
                        c /= max_label as usize;
                        l
                    })
                    .collect();
                let g = LabeledGraph::new(n, labels, edges.clone()).unwrap();
                index.classify(&g);
            }
        }
    }
    index.reps
}

/// Non-decreasing edge lists whose vertices appear in first-use order.
fn edge_shapes(
    max_edges: usize,
    used: usize,
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<(usize, Vec<(usize, usize)>)>,
) {
    out.push((used, current.clone()));
    if current.len() == max_edges {
        return;
    }
    for a in 0..=used {
        for b in a..=used + usize::from(a == used) {
            let edge = (a, b);
            if current.last().is_some_and(|&last| edge < last) {
                continue;
            }
            let next_used = used.max(a + 1).max(b + 1);
            current.push(edge);
            edge_shapes(max_edges, next_used, current, out);
            current.pop();
        }
    }
}
