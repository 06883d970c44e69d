use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::Zero;

use super::config::{EndpointMode, SortConfig, Variant};
use super::sort::{sort_edges, PlannedEdge};
use super::state::ParseState;
use crate::encoding::{CEncoding, ChildTuple, TermId, TermStore};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::seeds::derive_seed;

/// An edge as actually processed: `a` is the endpoint whose component
/// received the h-shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub edge: usize,
    pub a: usize,
    pub b: usize,
}

/// One merge of the parse forest. `left` and `right` index W entries of the
/// two merged components (equal when the edge closed a cycle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MergeRecord {
    pub left: usize,
    pub right: usize,
    pub bound: bool,
    pub level: usize,
}

/// Output of one parse.
#[derive(Clone, Debug)]
pub struct EncodingRun {
    pub variant: Variant,
    pub num_vertices: usize,
    /// `W[v]` for `v < n` is vertex `v`'s leaf; `W[n + i]` is the i-th merge.
    pub w: Vec<CEncoding>,
    /// Indices into `w` of the final components, by smallest member vertex.
    pub c: Vec<usize>,
    pub levels: usize,
    pub trace: Vec<TraceStep>,
    pub merges: Vec<MergeRecord>,
}

/// Multiset of encodings as a sorted id list. Encodings are functions of
/// their term, so this identifies the multiset within one [`TermStore`].
pub type EncodingKey = Vec<TermId>;

/// Largest edge count [`Encoder::enumerate_encoding_class`] accepts by
/// default.
pub const DEFAULT_ENUMERATION_GUARD: usize = 6;

impl EncodingRun {
    pub fn c_encodings(&self) -> impl Iterator<Item = &CEncoding> {
        self.c.iter().map(|&i| &self.w[i])
    }

    pub fn w_key(&self) -> EncodingKey {
        sorted_ids(self.w.iter())
    }

    pub fn c_key(&self) -> EncodingKey {
        sorted_ids(self.c_encodings())
    }

    /// W without the single-vertex entries.
    pub fn merge_key(&self) -> EncodingKey {
        sorted_ids(self.w[self.num_vertices..].iter())
    }

    /// Vertex and edge indices of the subgraph encoded by `W[index]`.
    pub fn subgraph_of(&self, index: usize) -> (Vec<usize>, Vec<usize>) {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let mut stack = vec![index];
        let mut visited = vec![false; self.w.len()];
        while let Some(i) = stack.pop() {
            if std::mem::replace(&mut visited[i], true) {
                continue;
            }
            if i < self.num_vertices {
                vertices.push(i);
            } else {
                let step = i - self.num_vertices;
                edges.push(self.trace[step].edge);
                let m = self.merges[step];
                stack.push(m.left);
                stack.push(m.right);
            }
        }
        vertices.sort_unstable();
        edges.sort_unstable();
        (vertices, edges)
    }
}

fn sorted_ids<'a>(it: impl Iterator<Item = &'a CEncoding>) -> EncodingKey {
    let mut ids: Vec<TermId> = it.map(|e| e.y).collect();
    ids.sort_unstable();
    ids
}

/// Runs the parser; owns the term store so encodings from all runs of one
/// encoder are directly comparable.
#[derive(Debug)]
pub struct Encoder {
    store: TermStore,
    checked: bool,
}

impl Default for Encoder {
    fn default() -> Self {
        Self::new()
    }
}

impl Encoder {
    /// Invariant checks are on in debug builds.
    pub fn new() -> Self {
        Self {
            store: TermStore::new(),
            checked: cfg!(debug_assertions),
        }
    }

    /// Enables or disables the per-step invariant assertions (component
    /// partition, distinct h-values below `m2`).
    pub fn with_checks(mut self, checked: bool) -> Self {
        self.checked = checked;
        self
    }

    pub fn store(&self) -> &TermStore {
        &self.store
    }

    pub fn store_mut(&mut self) -> &mut TermStore {
        &mut self.store
    }

    pub fn run(&mut self, g: &LabeledGraph, config: &SortConfig) -> EncodingRun {
        let plan = sort_edges(g, config);
        self.execute(g, &plan, config.endpoint_mode, config.variant)
    }

    pub fn run_npba(&mut self, g: &LabeledGraph, config: &SortConfig) -> EncodingRun {
        let config = SortConfig {
            variant: Variant::Npba,
            ..*config
        };
        self.run(g, &config)
    }

    /// Parses with an explicit edge order and orientation. `order` must be
    /// a rearrangement of the graph's edges, each given as `(a, b)` with `a`
    /// the endpoint processed first.
    pub fn run_ordered(
        &mut self,
        g: &LabeledGraph,
        order: &[(usize, usize)],
        variant: Variant,
    ) -> Result<EncodingRun> {
        let plan = plan_from_order(g, order)?;
        Ok(self.execute(g, &plan, EndpointMode::Random, variant))
    }

    /// `k` runs with seeds derived from `config.seed`; the first uses the
    /// seed itself.
    pub fn sample_orderings(
        &mut self,
        g: &LabeledGraph,
        config: &SortConfig,
        k: usize,
    ) -> Vec<EncodingRun> {
        (0..k)
            .map(|i| self.run(g, &config.with_seed(derive_seed(config.seed, i as u64))))
            .collect()
    }

    /// Every C multiset reachable by some edge order and orientation,
    /// ignoring sort keys. Refuses graphs with more than `max_edges` edges.
    /// With [`EndpointMode::Canonical`] the orientation is overridden per
    /// step as in a normal run.
    pub fn enumerate_encoding_class(
        &mut self,
        g: &LabeledGraph,
        variant: Variant,
        endpoint_mode: EndpointMode,
        max_edges: usize,
    ) -> Result<BTreeSet<EncodingKey>> {
        let mut out = BTreeSet::new();
        self.for_each_ordering(g, variant, endpoint_mode, max_edges, |run| {
            out.insert(run.c_key());
        })?;
        Ok(out)
    }

    /// Calls `visit` with the run of every distinct oriented edge order.
    pub fn for_each_ordering(
        &mut self,
        g: &LabeledGraph,
        variant: Variant,
        endpoint_mode: EndpointMode,
        max_edges: usize,
        mut visit: impl FnMut(&EncodingRun),
    ) -> Result<()> {
        let m = g.num_edges();
        if m > max_edges {
            return Err(Error::GuardExceeded {
                what: "edges for ordering enumeration",
                limit: max_edges,
                actual: m,
            });
        }
        let mut edges: Vec<usize> = (0..m).collect();
        edges.sort_by_key(|&e| g.edges()[e]);
        let mut orders = Vec::new();
        let mut used = vec![false; m];
        let mut current = Vec::with_capacity(m);
        multiset_permutations(g, &edges, &mut used, &mut current, &mut orders);

        for order in orders {
            let free: Vec<usize> = (0..m)
                .filter(|&i| {
                    let (a, b) = g.edges()[order[i]];
                    a != b
                })
                .collect();
            for mask in 0u64..(1u64 << free.len()) {
                let mut plan: Vec<PlannedEdge> = order
                    .iter()
                    .map(|&edge| {
                        let (first, second) = g.edges()[edge];
                        PlannedEdge {
                            edge,
                            first,
                            second,
                        }
                    })
                    .collect();
                for (bit, &i) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        let p = &mut plan[i];
                        std::mem::swap(&mut p.first, &mut p.second);
                    }
                }
                let run = self.execute(g, &plan, endpoint_mode, variant);
                visit(&run);
            }
        }
        Ok(())
    }

    pub(crate) fn execute(
        &mut self,
        g: &LabeledGraph,
        plan: &[PlannedEdge],
        endpoint_mode: EndpointMode,
        variant: Variant,
    ) -> EncodingRun {
        let n = g.num_vertices();
        let mut w: Vec<CEncoding> = Vec::with_capacity(n + plan.len());
        for v in 0..n {
            let y = self.store.leaf(g.label(v));
            w.push(self.store.encoding(y));
        }
        let h0 = match variant {
            Variant::Npa => g.labels().iter().map(|&l| BigUint::from(l)).collect(),
            Variant::Npba => vec![BigUint::zero(); n],
        };
        let mut state = ParseState::new(h0);
        let mut trace = Vec::with_capacity(plan.len());
        let mut merges = Vec::with_capacity(plan.len());
        let mut levels = 0;

        for step in plan {
            let (mut a, mut b) = (step.first, step.second);
            let (mut ra, mut rb) = (state.find(a), state.find(b));
            if endpoint_mode == EndpointMode::ByLevel && state.level(ra) > state.level(rb) {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut ra, &mut rb);
            }
            let same = ra == rb;
            let (ia, ib) = (state.encoding_index(ra), state.encoding_index(rb));
            let child = |enc: &CEncoding, h: &BigUint| ChildTuple {
                y: enc.y,
                h: h.clone(),
                m1: enc.m1.clone(),
                m2: enc.m2.clone(),
            };
            let (mut ca, mut cb, bound) = match variant {
                Variant::Npa => (child(&w[ia], &state.h[a]), child(&w[ib], &state.h[b]), same),
                Variant::Npba => {
                    let zero = BigUint::zero();
                    (child(&w[ia], &zero), child(&w[ib], &zero), false)
                }
            };
            let (mut ia, mut ib) = (ia, ib);
            if endpoint_mode == EndpointMode::Canonical
                && variant == Variant::Npa
                && self.store.compare_children(&ca, &cb) == Ordering::Greater
            {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut ra, &mut rb);
                std::mem::swap(&mut ia, &mut ib);
                std::mem::swap(&mut ca, &mut cb);
            }
            let y = self.store.merge(ca, cb, bound);
            let enc = self.store.encoding(y);

            if variant == Variant::Npa {
                // Shift the first endpoint's component only; when the edge
                // closes a cycle that is the whole merged component.
                let members = state.members(ra).to_vec();
                for v in members {
                    state.h[v] += &enc.m1;
                }
            }
            let level = 1 + state.level(ra).max(state.level(rb));
            levels = levels.max(level);
            let root = state.union(ra, rb, w.len(), level);
            if self.checked {
                state.check_partition();
                if variant == Variant::Npa {
                    state.check_h_values(root, &enc.m2);
                }
                assert!(!enc.m1.is_zero(), "merge produced the zero symbol");
            }
            trace.push(TraceStep {
                edge: step.edge,
                a,
                b,
            });
            merges.push(MergeRecord {
                left: ia,
                right: ib,
                bound: same,
                level,
            });
            w.push(enc);
        }

        let c = state
            .components()
            .into_iter()
            .map(|(root, _)| state.encoding_index(root))
            .collect();
        EncodingRun {
            variant,
            num_vertices: n,
            w,
            c,
            levels,
            trace,
            merges,
        }
    }
}

fn multiset_permutations(
    g: &LabeledGraph,
    sorted: &[usize],
    used: &mut [bool],
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() == sorted.len() {
        out.push(current.clone());
        return;
    }
    for i in 0..sorted.len() {
        if used[i] {
            continue;
        }
        // Parallel copies of an edge are interchangeable; take them in order.
        if i > 0 && !used[i - 1] && g.edges()[sorted[i]] == g.edges()[sorted[i - 1]] {
            continue;
        }
        used[i] = true;
        current.push(sorted[i]);
        multiset_permutations(g, sorted, used, current, out);
        current.pop();
        used[i] = false;
    }
}

fn plan_from_order(g: &LabeledGraph, order: &[(usize, usize)]) -> Result<Vec<PlannedEdge>> {
    if order.len() != g.num_edges() {
        return Err(Error::InvalidOrder(format!(
            "{} edges given, graph has {}",
            order.len(),
            g.num_edges()
        )));
    }
    let mut available: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (i, &e) in g.edges().iter().enumerate().rev() {
        available.entry(e).or_default().push(i);
    }
    order
        .iter()
        .map(|&(first, second)| {
            let key = (first.min(second), first.max(second));
            let edge = available.get_mut(&key).and_then(Vec::pop).ok_or_else(|| {
                Error::InvalidOrder(format!("edge {first}-{second} not available"))
            })?;
            Ok(PlannedEdge {
                edge,
                first,
                second,
            })
        })
        .collect()
}
