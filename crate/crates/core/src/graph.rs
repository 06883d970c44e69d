//! Undirected labeled multigraphs.
//!
//! Vertices are `0..n`. Edges are unordered pairs stored with the smaller
//! endpoint first; repeated pairs are parallel edges and `(v, v)` is a
//! self-loop. Every vertex carries a label `>= 1`.

use crate::error::{Error, Result};

/// An undirected multigraph with positive integer vertex labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    labels: Vec<u64>,
}

impl LabeledGraph {
    /// Builds a graph, validating endpoint ranges and labels. Edge endpoints
    /// are normalized so that `a <= b`; edge order is preserved.
    pub fn new(num_vertices: usize, labels: Vec<u64>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if labels.len() != num_vertices {
            return Err(Error::LabelCount {
                expected: num_vertices,
                found: labels.len(),
            });
        }
        if let Some((vertex, &label)) = labels.iter().enumerate().find(|(_, &l)| l == 0) {
            return Err(Error::InvalidLabel { vertex, label });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, (a, b)) in edges.into_iter().enumerate() {
            for endpoint in [a, b] {
                if endpoint >= num_vertices {
                    return Err(Error::EdgeOutOfRange {
                        index,
                        endpoint,
                        num_vertices,
                    });
                }
            }
            normalized.push((a.min(b), a.max(b)));
        }
        Ok(Self {
            num_vertices,
            edges: normalized,
            labels,
        })
    }

    /// A graph whose vertices all carry label 1.
    pub fn unlabeled(num_vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(num_vertices, vec![1; num_vertices], edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    /// `n + m + max label`, zero for the empty graph.
    pub fn size(&self) -> u64 {
        let max_label = self.labels.iter().copied().max().unwrap_or(0);
        self.num_vertices as u64 + self.edges.len() as u64 + max_label
    }

    /// Vertex degrees; a self-loop contributes 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Neighbor lists with multiplicity; a self-loop lists the vertex twice.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Dense edge-multiplicity matrix, symmetric. Diagonal entries count
    /// self-loops once each.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let n = self.num_vertices;
        let mut mat = vec![vec![0u32; n]; n];
        for &(a, b) in &self.edges {
            mat[a][b] += 1;
            if a != b {
                mat[b][a] += 1;
            }
        }
        mat
    }

    /// Component id per vertex, numbered in order of smallest member.
    pub fn component_ids(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.num_vertices];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..self.num_vertices {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            stack.push(start);
            while let Some(v) = stack.pop() {
                for &u in &adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        stack.push(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn num_components(&self) -> usize {
        self.component_ids().into_iter().max().map_or(0, |c| c + 1)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`. Edge order
    /// is preserved.
    ///
    /// Panics if `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.num_vertices, "permutation length");
        let mut labels = vec![0; self.num_vertices];
        let mut seen = vec![false; self.num_vertices];
        for (v, &p) in perm.iter().enumerate() {
            assert!(!seen[p], "not a permutation");
            seen[p] = true;
            labels[p] = self.labels[v];
        }
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (pa, pb) = (perm[a], perm[b]);
                (pa.min(pb), pa.max(pb))
            })
            .collect();
        Self {
            num_vertices: self.num_vertices,
            edges,
            labels,
        }
    }

    /// The same graph with edges sorted, so that equal graphs (same vertex
    /// numbering) compare equal regardless of input edge order.
    pub fn canonicalized(&self) -> Self {
        let mut g = self.clone();
        g.edges.sort_unstable();
        g
    }

    /// Stable 64-bit fingerprint of the vertex-numbered graph (FNV-1a over
    /// sizes, labels and edges). Not an isomorphism invariant.
    pub fn fingerprint(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0000_0100_0000_01b3;
        let mut hash = OFFSET;
        let mut feed = |x: u64| {
            for byte in x.to_le_bytes() {
                hash ^= u64::from(byte);
                hash = hash.wrapping_mul(PRIME);
            }
        };
        feed(self.num_vertices as u64);
        feed(self.edges.len() as u64);
        for &l in &self.labels {
            feed(l);
        }
        for &(a, b) in &self.edges {
            feed(a as u64);
            feed(b as u64);
        }
        hash
    }

    /// Subgraph induced by an edge subset: all vertices kept, only the
    /// listed edges (by index) retained.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> Self {
        Self {
            num_vertices: self.num_vertices,
            edges: edge_indices.iter().map(|&i| self.edges[i]).collect(),
            labels: self.labels.clone(),
        }
    }

    /// Restriction to a vertex subset (renumbered in the given order) with
    /// the listed edges, which must lie inside the subset.
    pub fn restricted(&self, vertices: &[usize], edge_indices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.num_vertices];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = edge_indices
            .iter()
            .map(|&e| {
                let (a, b) = self.edges[e];
                let (ia, ib) = (index[a], index[b]);
                assert!(ia != usize::MAX && ib != usize::MAX, "edge leaves subset");
                (ia.min(ib), ia.max(ib))
            })
            .collect();
        Self {
            num_vertices: vertices.len(),
            edges,
            labels: vertices.iter().map(|&v| self.labels[v]).collect(),
        }
    }
}

/// Convenience constructors for small fixed shapes used throughout tests
/// and generators.
pub mod shapes {
    use super::LabeledGraph;

    /// Cycle on `k` uniformly labeled vertices. `k = 1` is a self-loop and
    /// `k = 2` a pair of parallel edges.
    pub fn cycle(k: usize) -> LabeledGraph {
        assert!(k >= 1);
        let edges = (0..k).map(|i| (i, (i + 1) % k)).collect();
        LabeledGraph::unlabeled(k, edges).expect("cycle is valid")
    }

    pub fn path(n: usize) -> LabeledGraph {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        LabeledGraph::unlabeled(n, edges).expect("path is valid")
    }

    pub fn complete(n: usize) -> LabeledGraph {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        LabeledGraph::unlabeled(n, edges).expect("complete graph is valid")
    }

    /// Disjoint union, `g` first.
    pub fn disjoint_union(g: &LabeledGraph, h: &LabeledGraph) -> LabeledGraph {
        let off = g.num_vertices();
        let mut labels = g.labels().to_vec();
        labels.extend_from_slice(h.labels());
        let mut edges = g.edges().to_vec();
        edges.extend(h.edges().iter().map(|&(a, b)| (a + off, b + off)));
        LabeledGraph::new(off + h.num_vertices(), labels, edges).expect("union is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_label() {
        let err = LabeledGraph::new(2, vec![1, 0], vec![(0, 1)]).unwrap_err();
        assert!(matches!(
            err,
            Error::InvalidLabel {
                vertex: 1,
                label: 0
            }
        ));
    }

    #[test]
    fn rejects_out_of_range_endpoint() {
        let err = LabeledGraph::new(2, vec![1, 1], vec![(0, 2)]).unwrap_err();
        assert!(matches!(err, Error::EdgeOutOfRange { endpoint: 2, .. }));
    }

    #[test]
    fn self_loop_counts_twice() {
        let g = LabeledGraph::unlabeled(2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![3, 1]);
        assert_eq!(g.adjacency()[0], vec![0, 0, 1]);
    }

    #[test]
    fn size_is_vertices_edges_and_max_label() {
        let g = LabeledGraph::new(3, vec![1, 7, 2], vec![(0, 1), (1, 1)]).unwrap();
        assert_eq!(g.size(), 3 + 2 + 7);
    }

    #[test]
    fn components_of_cycle_pairs() {
        let g = shapes::disjoint_union(&shapes::cycle(3), &shapes::cycle(3));
        assert_eq!(g.num_components(), 2);
        assert_eq!(shapes::cycle(6).num_components(), 1);
        assert_eq!(
            LabeledGraph::unlabeled(3, vec![]).unwrap().num_components(),
            3
        );
    }

    #[test]
    fn permutation_moves_labels_with_vertices() {
        let g = LabeledGraph::new(3, vec![1, 2, 3], vec![(0, 1), (1, 2)]).unwrap();
        let p = g.permuted(&[2, 0, 1]);
        assert_eq!(p.labels(), &[2, 3, 1]);
        assert_eq!(p.edges(), &[(0, 2), (0, 1)]);
    }
}
