//! Grouping coalitions by the set of known coalitions that contain them.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::coalition::{self, Coalition};
use crate::incomplete::IncompleteGame;
use crate::rational::Rational;

/// Bitset over the nonempty known coalitions.
pub(crate) type Pattern = Vec<u64>;

pub(crate) struct Group {
    pub pattern: Pattern,
    /// Ascending canonical index. The last one is the union of all of them
    /// and serves as representative.
    pub members: Vec<Coalition>,
}

impl Group {
    pub fn rep(&self) -> Coalition {
        *self.members.last().expect("groups are nonempty")
    }

    pub fn has(&self, row: usize) -> bool {
        self.pattern[row / 64] >> (row % 64) & 1 == 1
    }
}

pub(crate) struct Patterns {
    /// Nonempty known coalitions, canonical order.
    pub rows: Vec<Coalition>,
    pub values: Vec<Rational>,
    /// Nonzero patterns ordered by representative.
    pub groups: Vec<Group>,
    /// Candidates contained in no known coalition.
    pub uncovered: Vec<Coalition>,
}

impl Patterns {
    fn build(inc: &IncompleteGame, candidates: impl IntoIterator<Item = Coalition>) -> Self {
        let rows: Vec<Coalition> = inc.known_nonempty().collect();
        let values = rows.iter().map(|s| inc.value(*s).unwrap().clone()).collect();
        let words = rows.len().div_ceil(64).max(1);
        let mut by_pattern: BTreeMap<Pattern, Vec<Coalition>> = BTreeMap::new();
        let mut uncovered = Vec::new();
        for t in candidates {
            let mut p = vec![0u64; words];
            for (r, s) in rows.iter().enumerate() {
                if t.is_subset_of(*s) {
                    p[r / 64] |= 1 << (r % 64);
                }
            }
            if p.iter().all(|w| *w == 0) {
                uncovered.push(t);
            } else {
                by_pattern.entry(p).or_default().push(t);
            }
        }
        let mut groups: Vec<Group> = by_pattern
            .into_iter()
            .map(|(pattern, mut members)| {
                members.sort();
                Group { pattern, members }
            })
            .collect();
        groups.sort_by_key(Group::rep);
        uncovered.sort();
        Patterns { rows, values, groups, uncovered }
    }

    /// Every nonempty coalition of `N`.
    pub fn full(inc: &IncompleteGame) -> Self {
        Self::build(inc, coalition::all(inc.n()).skip(1))
    }

    /// Nonempty subsets of known coalitions; every other coalition has an
    /// empty pattern.
    pub fn covered(inc: &IncompleteGame) -> Self {
        let mut seen = vec![false; 1 << inc.n()];
        let mut candidates = Vec::new();
        for s in inc.known_nonempty() {
            for t in s.subsets().filter(|t| !t.is_empty()) {
                if !std::mem::replace(&mut seen[t.index()], true) {
                    candidates.push(t);
                }
            }
        }
        Self::build(inc, candidates)
    }

    /// Nonempty coalitions of at most `c` players.
    pub fn up_to_size(inc: &IncompleteGame, c: usize) -> Self {
        let n = inc.n();
        let candidates = (1..=c.min(n))
            .flat_map(|k| (1..=n).combinations(k).map(Coalition::from_players))
            .filter(|t| inc.known_nonempty().any(|s| t.is_subset_of(s)));
        Self::build(inc, candidates)
    }

    pub fn column(&self, g: usize) -> Vec<Rational> {
        (0..self.rows.len()).map(|r| if self.groups[g].has(r) { Rational::one() } else { Rational::zero() }).collect()
    }
}
