use std::collections::BTreeSet;

use pdcg_core::coalition::{self, Coalition};
use pdcg_core::rational::{int, Rational};
use pdcg_core::{
    chain_convex_extension, classify, is_extension, lattice_closure, reduce_partially_symmetric, IncompleteGame,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn family(n: usize) -> impl Strategy<Value = BTreeSet<Coalition>> {
    prop::collection::btree_set((0u32..(1 << n)).prop_map(Coalition::from_bits), 0..6)
}

/// A random chain: a player order and a subset of positions to reveal.
fn chain_game(max_n: usize) -> impl Strategy<Value = IncompleteGame> {
    (1..=max_n).prop_flat_map(|n| {
        (Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(), prop::collection::vec((any::<bool>(), rational()), n))
            .prop_map(move |(order, picks)| {
                let mut entries = Vec::new();
                let mut s = Coalition::EMPTY;
                for (p, (keep, v)) in order.iter().zip(picks) {
                    s = s.with(*p);
                    if keep {
                        entries.push((s, v));
                    }
                }
                IncompleteGame::new(n, entries).unwrap()
            })
    })
}

fn is_lattice(f: &BTreeSet<Coalition>) -> bool {
    f.iter().all(|a| f.iter().all(|b| f.contains(&a.union(*b)) && f.contains(&a.intersection(*b))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_is_smallest_lattice(k in family(4)) {
        let c = lattice_closure(k.iter().copied());
        prop_assert!(k.is_subset(&c));
        prop_assert!(is_lattice(&c));
        prop_assert_eq!(lattice_closure(c.iter().copied()), c.clone());
        // Every lattice containing K contains the closure: check against all
        // lattices over four players would be costly, so check the full one
        // and the closure of every superset obtained by adding one set.
        for extra in coalition::all(4) {
            let mut bigger = k.clone();
            bigger.insert(extra);
            prop_assert!(c.is_subset(&lattice_closure(bigger)));
        }
    }

    #[test]
    fn chain_extension_is_convex(inc in chain_game(10)) {
        let g = chain_convex_extension(&inc).unwrap();
        prop_assert!(is_extension(&g, &inc).unwrap());
        prop_assert!(classify(&g).is_convex());
    }

    #[test]
    fn symmetric_extension_of_reduced_form(n in 1usize..6, sizes in prop::collection::vec(rational(), 6), mask in 0u32..64) {
        let entries: Vec<(Coalition, Rational)> = coalition::all(n)
            .skip(1)
            .filter(|s| mask >> s.len() & 1 == 1)
            .map(|s| (s, sizes[s.len() - 1].clone()))
            .collect();
        let inc = IncompleteGame::new(n, entries).unwrap();
        let r = reduce_partially_symmetric(&inc).unwrap();
        let ext = pdcg_core::Game::from_fn(n, |s| r.sigma(s.len()).cloned().unwrap_or_else(|| int(7))).unwrap();
        prop_assert!(is_extension(&ext, &inc).unwrap());
        prop_assert_eq!(r.to_incomplete().unwrap(), inc);
    }
}
