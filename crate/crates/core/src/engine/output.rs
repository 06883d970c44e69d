//! Line-oriented text form of a run.
//!
//! ```text
//! config --mode degs-and-labels --sv random --variant npa --seed 0
//! trace <edge>:<a>-<b> ...
//! term t0 L(1)
//! term t2 M(b=0; (t0,1,0,2), (t1,2,0,3))
//! w t0 0 2
//! c t2 6 12
//! levels 1
//! ```
//!
//! Terms are numbered in depth-first post-order over W sorted canonically,
//! so shared subterms are written once and the text depends only on the
//! encodings, not on store internals. W and C lines are in canonical order.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::config::SortConfig;
use super::run::EncodingRun;
use crate::encoding::{CEncoding, Term, TermId, TermStore};

pub fn write_run(store: &TermStore, run: &EncodingRun, config: &SortConfig) -> String {
    let mut out = String::new();
    writeln!(out, "config {config}").unwrap();
    out.push_str("trace");
    for t in &run.trace {
        write!(out, " {}:{}-{}", t.edge, t.a, t.b).unwrap();
    }
    out.push('\n');

    let w = sorted(store, run.w.iter());
    let c = sorted(store, run.c_encodings());
    let mut names: HashMap<TermId, usize> = HashMap::new();
    for e in &w {
        emit_terms(store, e.y, &mut names, &mut out);
    }
    for e in &w {
        writeln!(out, "w t{} {} {}", names[&e.y], e.m1, e.m2).unwrap();
    }
    for e in &c {
        writeln!(out, "c t{} {} {}", names[&e.y], e.m1, e.m2).unwrap();
    }
    writeln!(out, "levels {}", run.levels).unwrap();
    out
}

fn sorted<'a>(store: &TermStore, it: impl Iterator<Item = &'a CEncoding>) -> Vec<&'a CEncoding> {
    let mut v: Vec<&CEncoding> = it.collect();
    v.sort_by(|a, b| store.compare_encodings(a, b));
    v
}

fn emit_terms(
    store: &TermStore,
    root: TermId,
    names: &mut HashMap<TermId, usize>,
    out: &mut String,
) {
    let mut stack = vec![(root, false)];
    while let Some((id, expanded)) = stack.pop() {
        if names.contains_key(&id) {
            continue;
        }
        match store.get(id) {
            Term::Leaf { label } => {
                let k = names.len();
                names.insert(id, k);
                writeln!(out, "term t{k} L({label})").unwrap();
            }
            Term::Merge { children, bound } => {
                if !expanded {
                    stack.push((id, true));
                    stack.push((children[1].y, false));
                    stack.push((children[0].y, false));
                    continue;
                }
                let k = names.len();
                names.insert(id, k);
                write!(out, "term t{k} M(b={}; ", u8::from(*bound)).unwrap();
                for (i, ch) in children.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write!(out, "(t{},{},{},{})", names[&ch.y], ch.h, ch.m1, ch.m2).unwrap();
                }
                out.push_str(")\n");
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::config::Variant;
    use crate::engine::run::Encoder;
    use crate::graph::LabeledGraph;

    #[test]
    fn single_edge_text() {
        let g = LabeledGraph::new(2, vec![1, 2], vec![(0, 1)]).unwrap();
        let mut enc = Encoder::new();
        let run = enc.run_ordered(&g, &[(0, 1)], Variant::Npa).unwrap();
        let text = write_run(enc.store(), &run, &SortConfig::default());
        let expected = "\
config --mode degs-and-labels --sv random --variant npa --seed 0
trace 0:0-1
term t0 L(1)
term t1 L(2)
term t2 M(b=0; (t0,1,0,2), (t1,2,0,3))
w t0 0 2
w t1 0 3
w t2 6 12
c t2 6 12
levels 1
";
        assert_eq!(text, expected);
    }

    #[test]
    fn independent_of_store_history() {
        let g = crate::graph::shapes::cycle(4);
        let cfg = SortConfig::default();
        let mut fresh = Encoder::new();
        let a = fresh.run(&g, &cfg);
        let mut used = Encoder::new();
        used.run(&crate::graph::shapes::path(7), &cfg);
        let b = used.run(&g, &cfg);
        let ta = write_run(fresh.store(), &a, &cfg);
        let tb = write_run(used.store(), &b, &cfg);
        assert_eq!(ta, tb);
    }
}
