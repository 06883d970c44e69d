use std::collections::HashSet;

use num_bigint::BigUint;

/// Union-find over vertices with per-component bookkeeping for the parse:
/// member lists, index of the component's current encoding in W, level.
/// h-values live per vertex.
#[derive(Clone, Debug)]
pub struct ParseState {
    parent: Vec<usize>,
    members: Vec<Vec<usize>>,
    encoding_at: Vec<usize>,
    level: Vec<usize>,
    pub h: Vec<BigUint>,
}

impl ParseState {
    /// Each vertex is its own component with encoding `W[v]` and level 0.
    pub fn new(h: Vec<BigUint>) -> Self {
        let n = h.len();
        Self {
            parent: (0..n).collect(),
            members: (0..n).map(|v| vec![v]).collect(),
            encoding_at: (0..n).collect(),
            level: vec![0; n],
            h,
        }
    }

    pub fn find(&mut self, mut v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[v] != root {
            let next = self.parent[v];
            self.parent[v] = root;
            v = next;
        }
        root
    }

    pub fn members(&self, root: usize) -> &[usize] {
        &self.members[root]
    }

    pub fn encoding_index(&self, root: usize) -> usize {
        self.encoding_at[root]
    }

    pub fn level(&self, root: usize) -> usize {
        self.level[root]
    }

    /// Joins two roots (or keeps one, when equal) and records the merged
    /// component's encoding index and level. Returns the surviving root.
    pub fn union(&mut self, a: usize, b: usize, encoding_at: usize, level: usize) -> usize {
        let root = if a == b {
            a
        } else {
            let (big, small) = if self.members[a].len() >= self.members[b].len() {
                (a, b)
            } else {
                (b, a)
            };
            let moved = std::mem::take(&mut self.members[small]);
            self.members[big].extend(moved);
            self.parent[small] = big;
            big
        };
        self.encoding_at[root] = encoding_at;
        self.level[root] = level;
        root
    }

    /// Current components as sorted member lists, ordered by smallest member.
    pub fn components(&mut self) -> Vec<(usize, Vec<usize>)> {
        let n = self.parent.len();
        let mut out = Vec::new();
        for v in 0..n {
            if self.find(v) == v {
                let mut m = self.members[v].clone();
                m.sort_unstable();
                out.push((v, m));
            }
        }
        out.sort_by_key(|(_, m)| m[0]);
        out
    }

    /// Components partition the vertex set and member lists agree with the
    /// union-find.
    pub fn check_partition(&mut self) {
        let n = self.parent.len();
        let mut seen = vec![false; n];
        for v in 0..n {
            if self.parent[v] != v {
                assert!(self.members[v].is_empty(), "non-root {v} holds members");
                continue;
            }
            for &u in &self.members[v].clone() {
                assert!(!seen[u], "vertex {u} in two components");
                seen[u] = true;
                assert_eq!(self.find(u), v, "member list disagrees with union-find");
            }
        }
        assert!(seen.iter().all(|&s| s), "vertex outside every component");
    }

    /// h-values inside the component are pairwise distinct and all below
    /// `m2`.
    pub fn check_h_values(&self, root: usize, m2: &BigUint) {
        let mut seen = HashSet::with_capacity(self.members[root].len());
        for &v in &self.members[root] {
            assert!(
                seen.insert(&self.h[v]),
                "duplicate h-value in component of {root}"
            );
            assert!(&self.h[v] < m2, "h-value {} not below m2 {m2}", self.h[v]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_tracks_members() {
        let mut s = ParseState::new((1..=4u32).map(BigUint::from).collect());
        let r = s.union(0, 1, 4, 1);
        assert_eq!(s.find(0), r);
        assert_eq!(s.find(1), r);
        assert_eq!(s.level(r), 1);
        assert_eq!(s.encoding_index(r), 4);
        let r2 = s.union(r, 3, 5, 2);
        assert_eq!(s.members(r2).len(), 3);
        s.check_partition();
        let comps = s.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].1, vec![0, 1, 3]);
        assert_eq!(comps[1].1, vec![2]);
    }
}
