//! Exact pairing functions on arbitrary-precision naturals.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Cantor pairing `(i + j)(i + j + 1) / 2 + j`, a bijection `N x N -> N`.
pub fn cantor_pair(i: &BigUint, j: &BigUint) -> BigUint {
    let s = i + j;
    let t = &s + BigUint::one();
    ((s * t) >> 1u32) + j
}

/// Left-nested four-way pairing `pair(pair(pair(a, b), c), d)`.
pub fn cantor_pair4(a: &BigUint, b: &BigUint, c: &BigUint, d: &BigUint) -> BigUint {
    cantor_pair(&cantor_pair(&cantor_pair(a, b), c), d)
}

/// Symmetric pairing `(i + j, i * j)`; injective on unordered pairs.
pub fn sym_pair(i: &BigUint, j: &BigUint) -> (BigUint, BigUint) {
    (i + j, i * j)
}

/// The 9-ary merge combiner on two `(y, h, m1, m2)` tuples and an
/// indicator bit, invariant under swapping the tuples.
pub fn r_combine(first: [&BigUint; 4], second: [&BigUint; 4], bound: bool) -> BigUint {
    let a = cantor_pair4(first[0], first[1], first[2], first[3]);
    let b = cantor_pair4(second[0], second[1], second[2], second[3]);
    let (sum, product) = sym_pair(&a, &b);
    let inner = cantor_pair(&sum, &product);
    let bit = if bound {
        BigUint::one()
    } else {
        BigUint::zero()
    };
    cantor_pair(&inner, &bit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashMap;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn small_pairs() {
        assert_eq!(cantor_pair(&n(0), &n(0)), n(0));
        assert_eq!(cantor_pair(&n(1), &n(0)), n(1));
        assert_eq!(cantor_pair(&n(0), &n(1)), n(2));
        assert_eq!(cantor_pair(&n(1), &n(2)), n(8));
        assert_eq!(cantor_pair(&n(2), &n(1)), n(7));
    }

    #[test]
    fn sym_pair_examples() {
        assert_eq!(sym_pair(&n(2), &n(3)), (n(5), n(6)));
        assert_eq!(sym_pair(&n(3), &n(2)), (n(5), n(6)));
        assert_eq!(sym_pair(&n(0), &n(0)), (n(0), n(0)));
        assert_eq!(sym_pair(&n(17), &n(174)), (n(191), n(2958)));
    }

    // Frozen from a direct evaluation of the formulas outside this crate.
    #[test]
    fn combiner_intermediates() {
        assert_eq!(cantor_pair(&n(0), &n(1)), n(2));
        assert_eq!(cantor_pair(&n(2), &n(0)), n(3));
        assert_eq!(cantor_pair(&n(3), &n(2)), n(17));
        assert_eq!(cantor_pair4(&n(0), &n(1), &n(0), &n(2)), n(17));
        assert_eq!(cantor_pair4(&n(0), &n(2), &n(0), &n(3)), n(174));
        assert_eq!(cantor_pair(&n(191), &n(2958)), n(4_962_633));
        let r = r_combine(
            [&n(0), &n(1), &n(0), &n(2)],
            [&n(0), &n(2), &n(0), &n(3)],
            false,
        );
        assert_eq!(r, n(12_313_865_627_661));
        let swapped = r_combine(
            [&n(0), &n(2), &n(0), &n(3)],
            [&n(0), &n(1), &n(0), &n(2)],
            false,
        );
        assert_eq!(r, swapped);
        let looped = r_combine(
            [&n(0), &n(1), &n(0), &n(2)],
            [&n(0), &n(1), &n(0), &n(2)],
            true,
        );
        assert_eq!(looped, n(1_384_248_037));
    }

    #[test]
    fn cantor_is_injective_on_a_grid() {
        let mut seen = HashMap::new();
        for i in 0..200u64 {
            for j in 0..200u64 {
                let v = cantor_pair(&n(i), &n(j));
                assert!(seen.insert(v, (i, j)).is_none());
            }
        }
        // Bijective onto an initial segment along the first diagonals.
        for k in 0..(200 * 201 / 2) {
            assert!(seen.contains_key(&n(k)));
        }
    }

    fn closed_form(i: u64, j: u64) -> u128 {
        let s = i as u128 + j as u128;
        s * (s + 1) / 2 + j as u128
    }

    proptest! {
        #[test]
        fn cantor_matches_u128(i in 0u64..1_000_000, j in 0u64..1_000_000) {
            prop_assert_eq!(cantor_pair(&n(i), &n(j)), BigUint::from(closed_form(i, j)));
        }

        #[test]
        fn cantor_collision_free(a in (0u64..1_000_000, 0u64..1_000_000), b in (0u64..1_000_000, 0u64..1_000_000)) {
            prop_assert_eq!(a == b, cantor_pair(&n(a.0), &n(a.1)) == cantor_pair(&n(b.0), &n(b.1)));
        }

        #[test]
        fn sym_pair_is_symmetric(i in 0u64..1_000_000, j in 0u64..1_000_000) {
            prop_assert_eq!(sym_pair(&n(i), &n(j)), sym_pair(&n(j), &n(i)));
        }

        #[test]
        fn sym_pair_injective_on_unordered(a in (0u64..3000, 0u64..3000), b in (0u64..3000, 0u64..3000)) {
            let same = (a.0.min(a.1), a.0.max(a.1)) == (b.0.min(b.1), b.0.max(b.1));
            prop_assert_eq!(same, sym_pair(&n(a.0), &n(a.1)) == sym_pair(&n(b.0), &n(b.1)));
        }

        #[test]
        fn combiner_swap_invariant(x in proptest::array::uniform4(0u64..50), y in proptest::array::uniform4(0u64..50), bit: bool) {
            let xs = x.map(n);
            let ys = y.map(n);
            let f = r_combine([&xs[0], &xs[1], &xs[2], &xs[3]], [&ys[0], &ys[1], &ys[2], &ys[3]], bit);
            let g = r_combine([&ys[0], &ys[1], &ys[2], &ys[3]], [&xs[0], &xs[1], &xs[2], &xs[3]], bit);
            prop_assert_eq!(f, g);
        }
    }

    #[test]
    fn combiner_injective_on_small_domain() {
        // All unordered pairs of 4-tuples over {0,1,2} with both bits.
        let mut tuples = Vec::new();
        for a in 0..3u64 {
            for b in 0..3u64 {
                for c in 0..3u64 {
                    for d in 0..3u64 {
                        tuples.push([n(a), n(b), n(c), n(d)]);
                    }
                }
            }
        }
        let mut seen = HashMap::new();
        for i in 0..tuples.len() {
            for j in i..tuples.len() {
                for bit in [false, true] {
                    let t = &tuples[i];
                    let u = &tuples[j];
                    let v = r_combine(
                        [&t[0], &t[1], &t[2], &t[3]],
                        [&u[0], &u[1], &u[2], &u[3]],
                        bit,
                    );
                    assert!(seen.insert(v, (i, j, bit)).is_none());
                }
            }
        }
    }
}
