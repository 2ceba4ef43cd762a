//! Coalitions as bitmasks over at most [`MAX_PLAYERS`] players.
//!
//! Player `i` (1-based, as printed) is bit `i - 1`. The integer value of the
//! mask is the canonical dense index, so the empty coalition is index 0 and
//! iterating `0..1 << n` visits every coalition in canonical order.

use std::cmp::Ordering;
use std::fmt;

/// Hard ceiling on the number of players for any game.
pub const MAX_PLAYERS: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub const fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    /// The grand coalition of `n` players.
    pub fn grand(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    /// Builds a coalition from 1-based player numbers.
    pub fn from_players<I: IntoIterator<Item = usize>>(players: I) -> Self {
        let mut bits = 0u32;
        for p in players {
            assert!((1..=MAX_PLAYERS).contains(&p), "player {p} out of range");
            bits |= 1 << (p - 1);
        }
        Coalition(bits)
    }

    pub fn singleton(player: usize) -> Self {
        Self::from_players([player])
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: usize) -> bool {
        (1..=MAX_PLAYERS).contains(&player) && self.0 & (1 << (player - 1)) != 0
    }

    pub const fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_comparable(self, other: Coalition) -> bool {
        self.is_subset_of(other) || other.is_subset_of(self)
    }

    pub const fn union(self, other: Coalition) -> Coalition {
        Coalition(self.0 | other.0)
    }

    pub const fn intersection(self, other: Coalition) -> Coalition {
        Coalition(self.0 & other.0)
    }

    pub const fn difference(self, other: Coalition) -> Coalition {
        Coalition(self.0 & !other.0)
    }

    pub const fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    pub fn with(self, player: usize) -> Coalition {
        self.union(Coalition::singleton(player))
    }

    pub fn without(self, player: usize) -> Coalition {
        self.difference(Coalition::singleton(player))
    }

    /// True when every member is one of the first `n` players.
    pub fn fits(self, n: usize) -> bool {
        n >= 32 || self.0 >> n == 0
    }

    /// Members as ascending 1-based player numbers.
    pub fn players(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// All subsets, in canonical index order.
    pub fn subsets(self) -> Subsets {
        Subsets { full: self.0, next: Some(0) }
    }

    /// Order used for printing: by size, then lexicographically on the
    /// sorted member lists.
    pub fn display_cmp(&self, other: &Coalition) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.players().cmp(other.players()))
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.players().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// Submask enumeration in increasing order.
pub struct Subsets {
    full: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        // (cur - full) & full steps to the next submask in increasing order.
        self.next = if cur == self.full { None } else { Some(cur.wrapping_sub(self.full) & self.full) };
        Some(Coalition(cur))
    }
}

/// Every coalition of `n` players in canonical order, `∅` first.
pub fn all(n: usize) -> impl Iterator<Item = Coalition> {
    (0..1u32 << n).map(Coalition)
}

/// Sorts coalitions into display order.
pub fn sort_for_display(list: &mut [Coalition]) {
    list.sort_by(Coalition::display_cmp);
}
