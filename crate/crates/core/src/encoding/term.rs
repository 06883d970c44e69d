//! Interned symbolic representation of component encodings.
//!
//! The `y` component of an encoding is kept as a term instead of a number:
//! each merge nests several pairings, so numeric `y` values grow by a large
//! factor in bit-length per edge. Because every pairing involved is
//! injective (and the symmetric pairing is injective on unordered pairs),
//! two terms are equal modulo child order exactly when their numeric values
//! are equal. Terms are hash-consed so that equality is an id comparison.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;

use super::pairing::{cantor_pair, sym_pair};

/// Handle to an interned term. Only meaningful within its [`TermStore`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One side of a merge: the child component's encoding plus the h-value of
/// the endpoint that lies in it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChildTuple {
    pub y: TermId,
    pub h: BigUint,
    pub m1: BigUint,
    pub m2: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// Encoding of a single vertex: `y = 0`, `m1 = 0`, `m2 = label + 1`.
    Leaf { label: u64 },
    /// Children are stored in canonical (ascending) order.
    Merge {
        children: Box<[ChildTuple; 2]>,
        bound: bool,
    },
}

/// A component encoding `(y, m1, m2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CEncoding {
    pub y: TermId,
    pub m1: BigUint,
    pub m2: BigUint,
}

impl CEncoding {
    /// `m1 = 0` marks edge-free encodings.
    pub fn is_leaf(&self) -> bool {
        self.m1.is_zero()
    }
}

/// Outcome of numeric evaluation under a bit budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Numeric {
    Value(BigUint),
    /// Some intermediate exceeded the budget.
    Refused,
}

/// Default budget for [`TermStore::eval_numeric`], in bits. Four-edge
/// components with parallel edges and cycles reach about 14.6 million bits.
pub const DEFAULT_BIT_BUDGET: u64 = 1 << 24;

/// Hash-consing table for terms.
#[derive(Debug, Default)]
pub struct TermStore {
    terms: Vec<Arc<Term>>,
    index: HashMap<Arc<Term>, TermId>,
}

impl TermStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All ids in interning order, which lists children before parents.
    pub fn ids(&self) -> impl Iterator<Item = TermId> {
        (0..self.terms.len() as u32).map(TermId)
    }

    pub fn get(&self, id: TermId) -> &Term {
        &self.terms[id.index()]
    }

    fn intern(&mut self, term: Term) -> TermId {
        if let Some(&id) = self.index.get(&term) {
            return id;
        }
        let id = TermId(u32::try_from(self.terms.len()).expect("term store overflow"));
        let term = Arc::new(term);
        self.terms.push(Arc::clone(&term));
        self.index.insert(term, id);
        id
    }

    pub fn leaf(&mut self, label: u64) -> TermId {
        self.intern(Term::Leaf { label })
    }

    /// Interns a merge of two child tuples; their order does not matter.
    pub fn merge(&mut self, a: ChildTuple, b: ChildTuple, bound: bool) -> TermId {
        let children = if self.compare_children(&a, &b) == Ordering::Greater {
            [b, a]
        } else {
            [a, b]
        };
        self.intern(Term::Merge {
            children: Box::new(children),
            bound,
        })
    }

    /// The encoding triple of a term: leaves are `(y, 0, label + 1)`, merges
    /// `(y, m2_a + m2_b + 1, 2 m2_a + 2 m2_b + 2)`.
    pub fn encoding(&self, id: TermId) -> CEncoding {
        match self.get(id) {
            Term::Leaf { label } => CEncoding {
                y: id,
                m1: BigUint::zero(),
                m2: BigUint::from(*label) + 1u32,
            },
            Term::Merge { children, .. } => {
                let m1 = &children[0].m2 + &children[1].m2 + 1u32;
                let m2 = &m1 << 1u32;
                CEncoding { y: id, m1, m2 }
            }
        }
    }

    /// Strict total order: leaves before merges, leaves by label, merges
    /// lexicographically by (first child, second child, bound) with child
    /// tuples ordered by (y, h, m1, m2).
    pub fn compare(&self, mut a: TermId, mut b: TermId) -> Ordering {
        'descend: loop {
            if a == b {
                return Ordering::Equal;
            }
            match (self.get(a), self.get(b)) {
                (Term::Leaf { label: x }, Term::Leaf { label: y }) => return x.cmp(y),
                (Term::Leaf { .. }, Term::Merge { .. }) => return Ordering::Less,
                (Term::Merge { .. }, Term::Leaf { .. }) => return Ordering::Greater,
                (
                    Term::Merge {
                        children: ca,
                        bound: ba,
                    },
                    Term::Merge {
                        children: cb,
                        bound: bb,
                    },
                ) => {
                    for (x, y) in ca.iter().zip(cb.iter()) {
                        if x.y != y.y {
                            // Distinct interned terms never compare equal, so
                            // the first differing y decides.
                            a = x.y;
                            b = y.y;
                            continue 'descend;
                        }
                        let o = x.h.cmp(&y.h).then(x.m1.cmp(&y.m1)).then(x.m2.cmp(&y.m2));
                        if o != Ordering::Equal {
                            return o;
                        }
                    }
                    return ba.cmp(bb);
                }
            }
        }
    }

    pub fn compare_children(&self, a: &ChildTuple, b: &ChildTuple) -> Ordering {
        self.compare(a.y, b.y)
            .then_with(|| a.h.cmp(&b.h))
            .then_with(|| a.m1.cmp(&b.m1))
            .then_with(|| a.m2.cmp(&b.m2))
    }

    /// Orders full encodings; `m1`/`m2` are functions of `y`, so this is the
    /// term order.
    pub fn compare_encodings(&self, a: &CEncoding, b: &CEncoding) -> Ordering {
        self.compare(a.y, b.y)
    }

    /// Fully expanded canonical text: `L(<label>)` or
    /// `M(b=<0|1>; (<y>,<h>,<m1>,<m2>), (<y>,<h>,<m1>,<m2>))`.
    ///
    /// Expansion is a tree walk, so subterms shared through closed cycles are
    /// repeated; use [`crate::engine::output`] for large runs.
    pub fn canonical_string(&self, id: TermId) -> String {
        let mut out = String::new();
        self.write_canonical(id, &mut out);
        out
    }

    fn write_canonical(&self, id: TermId, out: &mut String) {
        match self.get(id) {
            Term::Leaf { label } => write!(out, "L({label})").unwrap(),
            Term::Merge { children, bound } => {
                write!(out, "M(b={}; ", u8::from(*bound)).unwrap();
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    out.push('(');
                    self.write_canonical(c.y, out);
                    write!(out, ",{},{},{})", c.h, c.m1, c.m2).unwrap();
                }
                out.push(')');
            }
        }
    }

    /// Numeric `y` of a term through the exact pairing functions, or
    /// [`Numeric::Refused`] if any intermediate exceeds `budget_bits`.
    pub fn eval_numeric(&self, id: TermId, budget_bits: u64) -> Numeric {
        let mut memo: HashMap<TermId, BigUint> = HashMap::new();
        self.eval_with_memo(id, budget_bits, &mut memo)
    }

    /// As [`Self::eval_numeric`], sharing a cache across calls. The cache
    /// only ever holds values that fit the budget in force when computed.
    pub fn eval_with_memo(
        &self,
        root: TermId,
        budget_bits: u64,
        memo: &mut HashMap<TermId, BigUint>,
    ) -> Numeric {
        let fits = |x: &BigUint| x.bits() <= budget_bits;
        let mut stack = vec![(root, false)];
        while let Some((id, expanded)) = stack.pop() {
            if memo.contains_key(&id) {
                continue;
            }
            match self.get(id) {
                Term::Leaf { .. } => {
                    memo.insert(id, BigUint::zero());
                }
                Term::Merge { children, bound } => {
                    if !expanded {
                        stack.push((id, true));
                        for c in children.iter() {
                            if !memo.contains_key(&c.y) {
                                stack.push((c.y, false));
                            }
                        }
                        continue;
                    }
                    let mut packed = Vec::with_capacity(2);
                    for c in children.iter() {
                        let p = cantor_pair(&memo[&c.y], &c.h);
                        if !fits(&p) {
                            return Numeric::Refused;
                        }
                        let p = cantor_pair(&p, &c.m1);
                        if !fits(&p) {
                            return Numeric::Refused;
                        }
                        let p = cantor_pair(&p, &c.m2);
                        if !fits(&p) {
                            return Numeric::Refused;
                        }
                        packed.push(p);
                    }
                    let (s, p) = sym_pair(&packed[0], &packed[1]);
                    if !fits(&p) {
                        return Numeric::Refused;
                    }
                    let inner = cantor_pair(&s, &p);
                    if !fits(&inner) {
                        return Numeric::Refused;
                    }
                    let y = cantor_pair(&inner, &BigUint::from(u8::from(*bound)));
                    if !fits(&y) {
                        return Numeric::Refused;
                    }
                    debug_assert_eq!(
                        &y,
                        &super::pairing::r_combine(
                            [
                                &memo[&children[0].y],
                                &children[0].h,
                                &children[0].m1,
                                &children[0].m2
                            ],
                            [
                                &memo[&children[1].y],
                                &children[1].h,
                                &children[1].m1,
                                &children[1].m2
                            ],
                            *bound
                        )
                    );
                    memo.insert(id, y);
                }
            }
        }
        Numeric::Value(memo[&root].clone())
    }
}
