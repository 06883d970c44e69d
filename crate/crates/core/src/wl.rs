//! 1-dimensional Weisfeiler-Lehman color refinement, used as a baseline.

use std::collections::{BTreeMap, HashMap};

use crate::graph::LabeledGraph;

/// Color histogram after refinement, keyed by canonical color strings so
/// that histograms from separate calls are comparable.
///
/// A round-0 color is the vertex label; a round-`k` color is
/// `<previous>(<neighbor colors, sorted>)`. A self-loop puts the vertex's
/// own color in its neighbor list twice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WlHistogram {
    pub rounds: usize,
    pub colors: BTreeMap<String, usize>,
}

impl WlHistogram {
    pub fn num_colors(&self) -> usize {
        self.colors.len()
    }

    pub fn total(&self) -> usize {
        self.colors.values().sum()
    }
}

/// Runs up to `rounds` refinement rounds, stopping early once a round no
/// longer splits any color class.
pub fn wl_refine(g: &LabeledGraph, rounds: usize) -> WlHistogram {
    let n = g.num_vertices();
    let adj = g.adjacency();

    // Per-call interning: (previous color, sorted neighbor colors) -> id.
    let mut names: Vec<String> = Vec::new();
    let mut table: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let mut leaf_ids: HashMap<u64, usize> = HashMap::new();

    let mut colors: Vec<usize> = (0..n)
        .map(|v| {
            let label = g.label(v);
            *leaf_ids.entry(label).or_insert_with(|| {
                names.push(label.to_string());
                names.len() - 1
            })
        })
        .collect();
    let mut classes = distinct(&colors);
    let mut done = 0;

    for _ in 0..rounds {
        let next: Vec<usize> = (0..n)
            .map(|v| {
                let mut nbrs: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
                // Sort by canonical name so ids stay call-independent in meaning.
                nbrs.sort_unstable_by(|a, b| names[*a].cmp(&names[*b]));
                let key = (colors[v], nbrs);
                if let Some(&id) = table.get(&key) {
                    return id;
                }
                let mut name = names[key.0].clone();
                name.push('(');
                for (i, c) in key.1.iter().enumerate() {
                    if i > 0 {
                        name.push(',');
                    }
                    name.push_str(&names[*c]);
                }
                name.push(')');
                names.push(name);
                table.insert(key, names.len() - 1);
                names.len() - 1
            })
            .collect();
        let next_classes = distinct(&next);
        colors = next;
        done += 1;
        if next_classes == classes {
            break;
        }
        classes = next_classes;
    }

    let mut hist = BTreeMap::new();
    for c in colors {
        *hist.entry(names[c].clone()).or_insert(0) += 1;
    }
    WlHistogram {
        rounds: done,
        colors: hist,
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::shapes::{cycle, disjoint_union, path};

    #[test]
    fn single_vertex() {
        let g = LabeledGraph::new(1, vec![7], vec![]).unwrap();
        let h = wl_refine(&g, 3);
        assert_eq!(h.num_colors(), 1);
        assert_eq!(h.colors.values().copied().collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn c6_and_two_triangles_agree() {
        let two = disjoint_union(&cycle(3), &cycle(3));
        assert_eq!(wl_refine(&cycle(6), 10), wl_refine(&two, 10));
    }

    #[test]
    fn self_loop_counts_twice() {
        // A vertex with a loop and a pendant edge has degree 3, as does the
        // center of a 3-star.
        let g = LabeledGraph::unlabeled(2, vec![(0, 0), (0, 1)]).unwrap();
        let h = wl_refine(&g, 1);
        assert!(h.colors.contains_key("1(1,1,1)"), "{:?}", h.colors);
    }

    #[test]
    fn path_refines_until_stable() {
        let h = wl_refine(&path(5), 100);
        assert_eq!(h.num_colors(), 3);
        assert_eq!(h.total(), 5);
        assert!(h.rounds <= 3);
    }

    #[test]
    fn zero_rounds_is_label_histogram() {
        let g = LabeledGraph::new(3, vec![2, 1, 2], vec![(0, 1)]).unwrap();
        let h = wl_refine(&g, 0);
        assert_eq!(h.colors.get("2"), Some(&2));
        assert_eq!(h.colors.get("1"), Some(&1));
    }
}
