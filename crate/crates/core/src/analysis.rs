//! Isomorphism tests, shared-subgraph bounds and ordering statistics built
//! on encoding runs.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::encoding::CEncoding;
use crate::engine::{
    edge_keys, sort_edges, tie_blocks, EdgeSortMode, Encoder, EncodingKey, EncodingRun,
    EndpointMode, SortConfig, Variant,
};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::iso::{are_isomorphic_bruteforce, is_subgraph_bruteforce};
use crate::seeds::derive_seed;

/// Edge count up to which [`iso_test`] and [`detect_subgraph_class`]
/// enumerate every ordering.
pub const EXHAUSTIVE_GUARD: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// Some C multiset of one graph equals one of the other's.
    Isomorphic { witness: Vec<CEncoding> },
    /// The complete encoding classes are disjoint.
    NonIsomorphic,
    /// No sampled pair matched.
    Unknown { samples_tried: usize },
}

impl IsoVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            IsoVerdict::Isomorphic { .. } => "isomorphic",
            IsoVerdict::NonIsomorphic => "non-isomorphic",
            IsoVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// Exact when both graphs have at most [`EXHAUSTIVE_GUARD`] edges;
/// otherwise compares `k` sampled runs of each and never answers
/// [`IsoVerdict::NonIsomorphic`].
pub fn iso_test(
    enc: &mut Encoder,
    g: &LabeledGraph,
    h: &LabeledGraph,
    config: &SortConfig,
    k: usize,
) -> IsoVerdict {
    iso_test_with_guard(enc, g, h, config, k, EXHAUSTIVE_GUARD)
}

/// [`iso_test`] with the exhaustive threshold set to `guard` edges.
pub fn iso_test_with_guard(
    enc: &mut Encoder,
    g: &LabeledGraph,
    h: &LabeledGraph,
    config: &SortConfig,
    k: usize,
    guard: usize,
) -> IsoVerdict {
    if g.num_edges() <= guard && h.num_edges() <= guard {
        let a = enc
            .enumerate_encoding_class(g, config.variant, config.endpoint_mode, guard)
            .expect("within guard");
        let b = enc
            .enumerate_encoding_class(h, config.variant, config.endpoint_mode, guard)
            .expect("within guard");
        return match a.intersection(&b).next() {
            Some(key) => IsoVerdict::Isomorphic {
                witness: key.iter().map(|&y| enc.store().encoding(y)).collect(),
            },
            None => IsoVerdict::NonIsomorphic,
        };
    }
    let a: BTreeSet<EncodingKey> = enc
        .sample_orderings(g, config, k)
        .iter()
        .map(EncodingRun::c_key)
        .collect();
    for run in enc.sample_orderings(h, config, k) {
        if a.contains(&run.c_key()) {
            return IsoVerdict::Isomorphic {
                witness: run.c_encodings().cloned().collect(),
            };
        }
    }
    IsoVerdict::Unknown { samples_tried: k }
}

/// Multiset intersection of two W multisets, as sorted encoding ids.
pub fn w_intersection(a: &EncodingRun, b: &EncodingRun) -> EncodingKey {
    let (x, y) = (a.w_key(), b.w_key());
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < x.len() && j < y.len() {
        match x[i].cmp(&y[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(x[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Largest `|W(G) ∩ W(H)|` over `k` paired runs sharing derived seeds.
/// Every matched encoding stands for a connected subgraph of G isomorphic
/// to one of H.
pub fn shared_subgraph_bound(
    enc: &mut Encoder,
    g: &LabeledGraph,
    h: &LabeledGraph,
    config: &SortConfig,
    k: usize,
) -> usize {
    (0..k.max(1))
        .map(|i| {
            let cfg = config.with_seed(derive_seed(config.seed, i as u64));
            let a = enc.run(g, &cfg);
            let b = enc.run(h, &cfg);
            w_intersection(&a, &b).len()
        })
        .max()
        .unwrap_or(0)
}

/// Connected subgraphs of `g` as (vertices, edge indices): every single
/// vertex and every connected nonempty edge subset with its endpoints.
pub fn connected_subgraphs(
    g: &LabeledGraph,
    max_edges: usize,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let m = g.num_edges();
    if m > max_edges {
        return Err(Error::GuardExceeded {
            what: "edges for connected-subgraph enumeration",
            limit: max_edges,
            actual: m,
        });
    }
    let mut out: Vec<(Vec<usize>, Vec<usize>)> =
        (0..g.num_vertices()).map(|v| (vec![v], vec![])).collect();
    for mask in 1u32..(1u32 << m) {
        let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        let mut vertices: Vec<usize> = edges
            .iter()
            .flat_map(|&e| {
                let (a, b) = g.edges()[e];
                [a, b]
            })
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        if g.restricted(&vertices, &edges).num_components() == 1 {
            out.push((vertices, edges));
        }
    }
    Ok(out)
}

/// Brute-force count of matchable connected-subgraph pairs: the sum over
/// isomorphism classes of `min(occurrences in G, occurrences in H)`.
pub fn shared_subgraph_count_bruteforce(
    g: &LabeledGraph,
    h: &LabeledGraph,
    max_edges: usize,
) -> Result<usize> {
    let mut classes: Vec<(LabeledGraph, [usize; 2])> = Vec::new();
    for (side, graph) in [g, h].into_iter().enumerate() {
        for (vertices, edges) in connected_subgraphs(graph, max_edges)? {
            let sub = graph.restricted(&vertices, &edges);
            let mut found = false;
            for (rep, counts) in classes.iter_mut() {
                if are_isomorphic_bruteforce(rep, &sub)? {
                    counts[side] += 1;
                    found = true;
                    break;
                }
            }
            if !found {
                let mut counts = [0, 0];
                counts[side] = 1;
                classes.push((sub, counts));
            }
        }
    }
    Ok(classes.iter().map(|(_, c)| c[0].min(c[1])).sum())
}

/// Whether some ordering of `g` produces a W containing the W of some
/// ordering of `s`. Both graphs must have at most [`EXHAUSTIVE_GUARD`]
/// edges. Runs use [`EndpointMode::Canonical`]. In debug builds the answer
/// is checked against the direct subgraph-isomorphism search.
pub fn detect_subgraph_class(
    enc: &mut Encoder,
    s: &LabeledGraph,
    g: &LabeledGraph,
) -> Result<bool> {
    let ws = w_keys(enc, s)?;
    let wg = w_keys(enc, g)?;
    let found = ws.iter().any(|a| wg.iter().any(|b| is_sub_multiset(a, b)));
    if cfg!(debug_assertions) {
        if let Ok(expected) = is_subgraph_bruteforce(s, g) {
            debug_assert_eq!(
                found, expected,
                "encoding and brute-force subgraph tests disagree"
            );
        }
    }
    Ok(found)
}

fn w_keys(enc: &mut Encoder, g: &LabeledGraph) -> Result<BTreeSet<EncodingKey>> {
    let mut out = BTreeSet::new();
    enc.for_each_ordering(
        g,
        Variant::Npa,
        EndpointMode::Canonical,
        EXHAUSTIVE_GUARD,
        |run| {
            out.insert(run.w_key());
        },
    )?;
    Ok(out)
}

fn is_sub_multiset(a: &[crate::encoding::TermId], b: &[crate::encoding::TermId]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Class-redundancy bound of one sorted edge order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RedundancyReport {
    /// `Σ log10(t!)` over interacting groups inside tie blocks.
    pub log10_edge_orders: f64,
    /// `p · log10(2)`, `p` the edges joining distinct components at the
    /// start of their tie block.
    pub log10_orientation_factor: f64,
    pub levels: usize,
}

impl fmt::Display for RedundancyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "log10_edge_orders={:.4} log10_orientation_factor={:.4} levels={}",
            self.log10_edge_orders, self.log10_orientation_factor, self.levels
        )
    }
}

pub fn log10_factorial(t: usize) -> f64 {
    (2..=t).map(|k| (k as f64).log10()).sum()
}

/// Splits the sorted order into tie blocks, groups each block's edges by
/// transitive overlap of their endpoint components as they stand at the
/// block's start, and sums `log10(t!)` over group sizes. Levels follow the
/// same order as the run would.
pub fn redundancy_report(g: &LabeledGraph, config: &SortConfig) -> RedundancyReport {
    let plan = sort_edges(g, config);
    let keys = edge_keys(g, config.edge_mode);
    let n = g.num_vertices();
    let mut comp = UnionFind::new(n);
    let mut level = vec![0usize; n];
    let mut levels = 0;
    let mut log10_edge_orders = 0.0;
    let mut p = 0usize;

    for block in tie_blocks(&plan, &keys) {
        let steps = &plan[block];
        let roots: Vec<(usize, usize)> = steps
            .iter()
            .map(|s| (comp.find(s.first), comp.find(s.second)))
            .collect();
        p += roots.iter().filter(|(a, b)| a != b).count();
        let mut groups = UnionFind::new(steps.len());
        let mut owner: HashMap<usize, usize> = HashMap::new();
        for (i, &(a, b)) in roots.iter().enumerate() {
            for r in [a, b] {
                match owner.get(&r) {
                    Some(&j) => groups.union(i, j),
                    None => {
                        owner.insert(r, i);
                    }
                }
            }
        }
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for i in 0..steps.len() {
            *sizes.entry(groups.find(i)).or_default() += 1;
        }
        log10_edge_orders += sizes.values().map(|&t| log10_factorial(t)).sum::<f64>();

        for s in steps {
            let (a, b) = (comp.find(s.first), comp.find(s.second));
            let l = 1 + level[a].max(level[b]);
            comp.union(a, b);
            level[comp.find(a)] = l;
            levels = levels.max(l);
        }
    }
    RedundancyReport {
        log10_edge_orders,
        log10_orientation_factor: p as f64 * 2f64.log10(),
        levels,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a] = b;
        }
    }
}

/// Aggregate of [`redundancy_report`] over a collection.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DatasetStats {
    pub graphs: usize,
    pub mean_nodes: f64,
    pub mean_edges: f64,
    pub median_log10_edge_orders: f64,
    pub median_log10_orientation_factor: f64,
    pub mean_levels: f64,
}

/// Graph `i` is sorted with seed `derive_seed(config.seed, i)`.
pub fn dataset_stats(graphs: &[LabeledGraph], config: &SortConfig) -> Result<DatasetStats> {
    if graphs.is_empty() {
        return Err(Error::Empty("dataset_stats needs at least one graph"));
    }
    let reports: Vec<RedundancyReport> = graphs
        .iter()
        .enumerate()
        .map(|(i, g)| redundancy_report(g, &config.with_seed(derive_seed(config.seed, i as u64))))
        .collect();
    let count = graphs.len() as f64;
    Ok(DatasetStats {
        graphs: graphs.len(),
        mean_nodes: graphs.iter().map(|g| g.num_vertices() as f64).sum::<f64>() / count,
        mean_edges: graphs.iter().map(|g| g.num_edges() as f64).sum::<f64>() / count,
        median_log10_edge_orders: median(reports.iter().map(|r| r.log10_edge_orders).collect()),
        median_log10_orientation_factor: median(
            reports.iter().map(|r| r.log10_orientation_factor).collect(),
        ),
        mean_levels: reports.iter().map(|r| r.levels as f64).sum::<f64>() / count,
    })
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Text table with one column per dataset: averages, then the median
/// edge-order magnitude and mean levels per sort mode.
pub fn format_stats_table(columns: &[(String, Vec<(EdgeSortMode, DatasetStats)>)]) -> String {
    let mut rows: Vec<Vec<String>> = Vec::new();
    let header = std::iter::once("Datasets:".to_string())
        .chain(std::iter::once(String::new()))
        .chain(columns.iter().map(|(name, _)| name.clone()))
        .collect();
    rows.push(header);
    let first = |f: fn(&DatasetStats) -> f64| -> Vec<String> {
        columns
            .iter()
            .map(|(_, stats)| {
                stats
                    .first()
                    .map_or("-".into(), |(_, s)| format!("{:.0}", f(s)))
            })
            .collect()
    };
    for (label, f) in [
        (
            "Avg # nodes:",
            (|s: &DatasetStats| s.mean_nodes) as fn(&DatasetStats) -> f64,
        ),
        ("Avg # edges:", |s: &DatasetStats| s.mean_edges),
    ] {
        let mut row = vec![label.to_string(), String::new()];
        row.extend(first(f));
        rows.push(row);
    }
    let modes: Vec<EdgeSortMode> = EdgeSortMode::ALL
        .into_iter()
        .filter(|m| columns.iter().any(|(_, s)| s.iter().any(|(x, _)| x == m)))
        .collect();
    let cell = |stats: &[(EdgeSortMode, DatasetStats)],
                mode: EdgeSortMode,
                f: &dyn Fn(&DatasetStats) -> String| {
        stats
            .iter()
            .find(|(m, _)| *m == mode)
            .map_or("-".to_string(), |(_, s)| f(s))
    };
    for mode in &modes {
        let mut row = vec!["median # edge-orders:".to_string(), mode.name().to_string()];
        row.extend(columns.iter().map(|(_, s)| {
            cell(s, *mode, &|s| {
                format!("10^{:.1}", s.median_log10_edge_orders)
            })
        }));
        rows.push(row);
    }
    for mode in &modes {
        let mut row = vec!["mean # levels:".to_string(), mode.name().to_string()];
        row.extend(
            columns
                .iter()
                .map(|(_, s)| cell(s, *mode, &|s| format!("{:.1}", s.mean_levels))),
        );
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shapes::{cycle, disjoint_union, path};

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let g =
            LabeledGraph::new(4, vec![1, 2, 1, 3], vec![(0, 1), (1, 2), (2, 3), (0, 0)]).unwrap();
        let h = g.permuted(&[3, 1, 0, 2]);
        let mut enc = Encoder::new();
        let v = iso_test(&mut enc, &g, &h, &SortConfig::default(), 5);
        assert!(matches!(v, IsoVerdict::Isomorphic { .. }));
    }

    #[test]
    fn c4_versus_two_double_edges() {
        let two = disjoint_union(&cycle(2), &cycle(2));
        let mut enc = Encoder::new();
        let v = iso_test(&mut enc, &cycle(4), &two, &SortConfig::default(), 5);
        assert_eq!(v, IsoVerdict::NonIsomorphic);
    }

    #[test]
    fn sampled_verdict_is_one_sided() {
        let a = cycle(8);
        let b = disjoint_union(&cycle(4), &cycle(4));
        let mut enc = Encoder::new();
        let v = iso_test(&mut enc, &a, &b, &SortConfig::default(), 3);
        assert_eq!(v, IsoVerdict::Unknown { samples_tried: 3 });
        // Separate self-loops leave no ordering freedom, so one sample matches.
        let loops =
            LabeledGraph::new(6, vec![1, 2, 3, 1, 2, 3], (0..6).map(|v| (v, v)).collect()).unwrap();
        let v = iso_test(
            &mut enc,
            &loops,
            &loops.permuted(&[5, 4, 3, 2, 1, 0]),
            &SortConfig::default(),
            1,
        );
        assert!(matches!(v, IsoVerdict::Isomorphic { .. }));
    }

    #[test]
    fn self_pair_shares_everything() {
        let g = LabeledGraph::new(
            4,
            vec![1, 2, 2, 1],
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 1)],
        )
        .unwrap();
        let mut enc = Encoder::new();
        let b = shared_subgraph_bound(&mut enc, &g, &g, &SortConfig::default(), 3);
        assert_eq!(b, g.num_vertices() + g.num_edges());
    }

    #[test]
    fn disjoint_alphabets_share_nothing() {
        let g = LabeledGraph::new(2, vec![1, 1], vec![(0, 1)]).unwrap();
        let h = LabeledGraph::new(2, vec![2, 2], vec![(0, 1)]).unwrap();
        let mut enc = Encoder::new();
        assert_eq!(
            shared_subgraph_bound(&mut enc, &g, &h, &SortConfig::default(), 4),
            0
        );
    }

    #[test]
    fn p3_versus_triangle() {
        let (g, h) = (path(3), cycle(3));
        let mut enc = Encoder::new();
        let bound = shared_subgraph_bound(&mut enc, &g, &h, &SortConfig::default(), 5);
        // Three leaves and one K2 always match.
        assert!(bound >= 4);
        let count = shared_subgraph_count_bruteforce(&g, &h, 8).unwrap();
        assert_eq!(count, 3 + 2 + 1);
        assert!(bound <= count);
    }

    #[test]
    fn subgraph_class_examples() {
        let mut enc = Encoder::new();
        let v = LabeledGraph::new(1, vec![2], vec![]).unwrap();
        let g = LabeledGraph::new(3, vec![1, 2, 1], vec![(0, 1), (1, 2)]).unwrap();
        assert!(detect_subgraph_class(&mut enc, &v, &g).unwrap());
        let pendant = LabeledGraph::unlabeled(4, vec![(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        assert!(detect_subgraph_class(&mut enc, &cycle(3), &pendant).unwrap());
        assert!(!detect_subgraph_class(&mut enc, &cycle(3), &path(4)).unwrap());
        assert!(detect_subgraph_class(&mut enc, &cycle(3), &path(9)).is_err());
    }

    #[test]
    fn redundancy_examples() {
        let asym = LabeledGraph::new(3, vec![1, 2, 3], vec![(0, 1), (1, 2)]).unwrap();
        let r = redundancy_report(&asym, &SortConfig::default());
        assert_eq!(r.log10_edge_orders, 0.0);
        let tri = cycle(3);
        for mode in EdgeSortMode::ALL {
            let cfg = SortConfig {
                edge_mode: mode,
                ..SortConfig::default()
            };
            let r = redundancy_report(&tri, &cfg);
            assert!((r.log10_edge_orders - 6f64.log10()).abs() < 1e-12);
            assert!((r.log10_orientation_factor - 3.0 * 2f64.log10()).abs() < 1e-12);
        }
        let k2 = path(2);
        let s = dataset_stats(&[k2], &SortConfig::default()).unwrap();
        assert_eq!(s.median_log10_edge_orders, 0.0);
        assert_eq!(s.mean_levels, 1.0);
    }

    #[test]
    fn disconnected_ties_do_not_multiply() {
        let g = disjoint_union(&path(2), &path(2));
        let r = redundancy_report(&g, &SortConfig::default());
        assert_eq!(r.log10_edge_orders, 0.0);
        assert_eq!(r.levels, 1);
    }

    #[test]
    fn levels_agree_with_run() {
        let g = LabeledGraph::new(
            6,
            vec![1, 2, 1, 3, 1, 2],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)],
        )
        .unwrap();
        let mut enc = Encoder::new();
        for seed in 0..20 {
            for mode in EdgeSortMode::ALL {
                let cfg = SortConfig {
                    edge_mode: mode,
                    seed,
                    ..SortConfig::default()
                };
                assert_eq!(redundancy_report(&g, &cfg).levels, enc.run(&g, &cfg).levels);
            }
        }
    }

    #[test]
    fn empty_collection_refused() {
        assert!(dataset_stats(&[], &SortConfig::default()).is_err());
    }

    #[test]
    fn table_lists_modes() {
        let g = cycle(5);
        let rows: Vec<(EdgeSortMode, DatasetStats)> = EdgeSortMode::ALL
            .into_iter()
            .map(|m| {
                let cfg = SortConfig {
                    edge_mode: m,
                    ..SortConfig::default()
                };
                (m, dataset_stats(std::slice::from_ref(&g), &cfg).unwrap())
            })
            .collect();
        let t = format_stats_table(&[("C5".into(), rows)]);
        assert!(t.contains("degs-and-labels"));
        assert!(t.contains("none"));
        assert_eq!(t.lines().count(), 3 + 8);
    }
}
