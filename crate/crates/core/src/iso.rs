//! Brute-force isomorphism and subgraph-isomorphism oracles.
//!
//! Plain backtracking over label- and degree-compatible assignments. These
//! are the ground truth the encoding machinery is checked against, so they
//! share no code with it.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// Default vertex limit for the oracles.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Label- and multiplicity-preserving bijection test, refusing inputs with
/// more than [`DEFAULT_MAX_VERTICES`] vertices.
pub fn are_isomorphic_bruteforce(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    are_isomorphic_bruteforce_with_limit(g, h, DEFAULT_MAX_VERTICES)
}

pub fn are_isomorphic_bruteforce_with_limit(
    g: &LabeledGraph,
    h: &LabeledGraph,
    max_vertices: usize,
) -> Result<bool> {
    let n = g.num_vertices().max(h.num_vertices());
    if n > max_vertices {
        return Err(Error::GuardExceeded {
            what: "brute-force isomorphism (vertices)",
            limit: max_vertices,
            actual: n,
        });
    }
    if g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges() {
        return Ok(false);
    }
    let sg = signatures(g);
    let sh = signatures(h);
    let (mut a, mut b) = (sg.clone(), sh.clone());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    let search = Search {
        order: search_order(g),
        mg: g.multiplicity_matrix(),
        mh: h.multiplicity_matrix(),
        sg,
        sh,
        exact: true,
    };
    Ok(search.run())
}

/// Whether `s` embeds into `g`: an injective, label-preserving vertex map
/// under which every edge multiplicity of `s` is at most that of `g`
/// (non-induced, self-loops included).
pub fn is_subgraph_bruteforce(s: &LabeledGraph, g: &LabeledGraph) -> Result<bool> {
    let n = s.num_vertices().max(g.num_vertices());
    if n > DEFAULT_MAX_VERTICES {
        return Err(Error::GuardExceeded {
            what: "brute-force subgraph isomorphism (vertices)",
            limit: DEFAULT_MAX_VERTICES,
            actual: n,
        });
    }
    if s.num_vertices() > g.num_vertices() || s.num_edges() > g.num_edges() {
        return Ok(false);
    }
    let search = Search {
        order: search_order(s),
        mg: s.multiplicity_matrix(),
        mh: g.multiplicity_matrix(),
        sg: signatures(s),
        sh: signatures(g),
        exact: false,
    };
    Ok(search.run())
}

/// (label, degree, self-loop count) per vertex.
fn signatures(g: &LabeledGraph) -> Vec<(u64, usize, u32)> {
    let deg = g.degrees();
    let mut loops = vec![0u32; g.num_vertices()];
    for &(a, b) in g.edges() {
        if a == b {
            loops[a] += 1;
        }
    }
    (0..g.num_vertices())
        .map(|v| (g.label(v), deg[v], loops[v]))
        .collect()
}

/// Greedy order: next vertex is the one with most edges into the already
/// ordered prefix, ties to higher degree.
fn search_order(g: &LabeledGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mat = g.multiplicity_matrix();
    let deg = g.degrees();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links: u32 = order.iter().map(|&u: &usize| mat[v][u]).sum();
                (links, deg[v], std::cmp::Reverse(v))
            })
            .expect("vertex left");
        placed[best] = true;
        order.push(best);
    }
    order
}

struct Search {
    order: Vec<usize>,
    mg: Vec<Vec<u32>>,
    mh: Vec<Vec<u32>>,
    sg: Vec<(u64, usize, u32)>,
    sh: Vec<(u64, usize, u32)>,
    /// Bijection with equal multiplicities, or embedding with `<=`.
    exact: bool,
}

impl Search {
    fn run(&self) -> bool {
        let mut map = vec![usize::MAX; self.sg.len()];
        let mut used = vec![false; self.sh.len()];
        self.extend(0, &mut map, &mut used)
    }

    fn compatible(&self, v: usize, w: usize) -> bool {
        let (lv, dv, pv) = self.sg[v];
        let (lw, dw, pw) = self.sh[w];
        if self.exact {
            (lv, dv, pv) == (lw, dw, pw)
        } else {
            lv == lw && dv <= dw && pv <= pw
        }
    }

    fn extend(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.sh.len() {
            if used[w] || !self.compatible(v, w) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let (a, b) = (self.mg[v][u], self.mh[w][map[u]]);
                if self.exact {
                    a == b
                } else {
                    a <= b
                }
            });
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if self.extend(depth + 1, map, used) {
                return true;
            }
            used[w] = false;
            map[v] = usize::MAX;
        }
        false
    }
}
