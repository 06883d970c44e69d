use rand::seq::SliceRandom;
use rand::Rng;

use super::config::{EdgeSortMode, SortConfig};
use crate::graph::LabeledGraph;
use crate::seeds::graph_rng;

/// One step of the parse plan: an edge index with its endpoints in
/// processing orientation. Under by-level endpoint sorting this
/// orientation is only the tie-break; the run reorders by level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PlannedEdge {
    pub edge: usize,
    pub first: usize,
    pub second: usize,
}

/// `[deg1, deg2, label1, label2]` truncated to the mode's prefix.
pub fn edge_key(g: &LabeledGraph, degrees: &[usize], edge: usize, mode: EdgeSortMode) -> Vec<u64> {
    let (a, b) = g.edges()[edge];
    let (da, db) = (degrees[a] as u64, degrees[b] as u64);
    let (la, lb) = (g.label(a), g.label(b));
    let full = [da.max(db), da.min(db), la.max(lb), la.min(lb)];
    full[..mode.key_len()].to_vec()
}

pub fn edge_keys(g: &LabeledGraph, mode: EdgeSortMode) -> Vec<Vec<u64>> {
    let degrees = g.degrees();
    (0..g.num_edges())
        .map(|e| edge_key(g, &degrees, e, mode))
        .collect()
}

/// Orders edges ascending by key, permuting ties uniformly, and orients
/// each edge uniformly at random. Fully determined by the seed and graph.
pub fn sort_edges(g: &LabeledGraph, config: &SortConfig) -> Vec<PlannedEdge> {
    let mut rng = graph_rng(config.seed, g);
    let keys = edge_keys(g, config.edge_mode);
    let mut order: Vec<usize> = (0..g.num_edges()).collect();
    order.shuffle(&mut rng);
    // Stable sort keeps the shuffled order inside each tie block.
    order.sort_by(|&x, &y| keys[x].cmp(&keys[y]));
    order
        .into_iter()
        .map(|edge| {
            let (a, b) = g.edges()[edge];
            let (first, second) = if rng.random::<bool>() { (b, a) } else { (a, b) };
            PlannedEdge {
                edge,
                first,
                second,
            }
        })
        .collect()
}

/// Maximal runs of equal keys in a sorted plan, as index ranges into it.
pub fn tie_blocks(plan: &[PlannedEdge], keys: &[Vec<u64>]) -> Vec<std::ops::Range<usize>> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=plan.len() {
        if i == plan.len() || keys[plan[i].edge] != keys[plan[start].edge] {
            if i > start {
                blocks.push(start..i);
            }
            start = i;
        }
    }
    blocks
}
