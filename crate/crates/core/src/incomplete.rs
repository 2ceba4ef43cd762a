//! Incomplete games: known values on a family `K` of coalitions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::coalition::{self, Coalition, MAX_PLAYERS};
use crate::game::Game;
use crate::rational::{format, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IncompleteError {
    #[error("{0} players exceeds the limit of {MAX_PLAYERS}")]
    TooManyPlayers(usize),
    #[error("coalition {coalition} is not a subset of the {n} players")]
    OutOfRange { coalition: Coalition, n: usize },
    #[error("coalition {0} listed twice")]
    Duplicate(Coalition),
    #[error("the empty coalition must have value 0, got {0}")]
    NonzeroEmpty(String),
    #[error("player counts differ: game has {game}, incomplete game has {incomplete}")]
    DimensionMismatch { game: usize, incomplete: usize },
    #[error("not partially symmetric: v({first}) != v({second})")]
    NotPartiallySymmetric { first: Coalition, second: Coalition },
    #[error("known coalitions are not a chain: {first} and {second} are incomparable")]
    NotAChain { first: Coalition, second: Coalition },
    #[error("lower bound exceeds upper bound at {0}")]
    CrossedBounds(Coalition),
    #[error("invalid reduced form: {0}")]
    InvalidReduced(String),
}

/// `(N, K, v)`: `∅ ∈ K` always, with `v(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompleteGame {
    n: usize,
    values: BTreeMap<Coalition, Rational>,
}

impl IncompleteGame {
    /// Builds the game; `∅` is inserted with value 0 when absent.
    pub fn new<I>(n: usize, entries: I) -> Result<Self, IncompleteError>
    where
        I: IntoIterator<Item = (Coalition, Rational)>,
    {
        if n > MAX_PLAYERS {
            return Err(IncompleteError::TooManyPlayers(n));
        }
        let mut values = BTreeMap::new();
        for (s, v) in entries {
            if !s.fits(n) {
                return Err(IncompleteError::OutOfRange { coalition: s, n });
            }
            if s.is_empty() && !v.is_zero() {
                return Err(IncompleteError::NonzeroEmpty(format(&v)));
            }
            if values.insert(s, v).is_some() {
                return Err(IncompleteError::Duplicate(s));
            }
        }
        values.entry(Coalition::EMPTY).or_insert_with(Rational::zero);
        Ok(IncompleteGame { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn value(&self, s: Coalition) -> Option<&Rational> {
        self.values.get(&s)
    }

    pub fn is_known(&self, s: Coalition) -> bool {
        self.values.contains_key(&s)
    }

    /// Known coalitions in canonical order, `∅` first.
    pub fn known(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.values.keys().copied()
    }

    /// Known coalitions other than `∅`.
    pub fn known_nonempty(&self) -> impl Iterator<Item = Coalition> + '_ {
        self.known().filter(|s| !s.is_empty())
    }

    pub fn entries(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.values.iter().map(|(s, v)| (*s, v))
    }

    /// `|K|`, counting `∅`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The trivially incomplete game of a complete one.
    pub fn from_game(g: &Game) -> Self {
        let values = coalition::all(g.n()).map(|s| (s, g.value(s).clone())).collect();
        IncompleteGame { n: g.n(), values }
    }
}

/// True iff `g` agrees with `inc` on every known coalition.
pub fn is_extension(g: &Game, inc: &IncompleteGame) -> Result<bool, IncompleteError> {
    if g.n() != inc.n() {
        return Err(IncompleteError::DimensionMismatch { game: g.n(), incomplete: inc.n() });
    }
    Ok(inc.entries().all(|(s, v)| g.value(s) == v))
}

/// Size-indexed form `(N, X, σ)` of a partially symmetric incomplete game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedIncomplete {
    n: usize,
    sigma: BTreeMap<usize, Rational>,
}

impl ReducedIncomplete {
    /// `size 0` is added with value 0 when absent.
    pub fn new<I>(n: usize, entries: I) -> Result<Self, IncompleteError>
    where
        I: IntoIterator<Item = (usize, Rational)>,
    {
        let mut sigma = BTreeMap::new();
        for (k, v) in entries {
            if k > n {
                return Err(IncompleteError::InvalidReduced(format!("size {k} exceeds n = {n}")));
            }
            if k == 0 && !v.is_zero() {
                return Err(IncompleteError::NonzeroEmpty(format(&v)));
            }
            if sigma.insert(k, v).is_some() {
                return Err(IncompleteError::InvalidReduced(format!("size {k} listed twice")));
            }
        }
        sigma.entry(0).or_insert_with(Rational::zero);
        Ok(ReducedIncomplete { n, sigma })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Known sizes `X`, ascending.
    pub fn sizes(&self) -> impl DoubleEndedIterator<Item = usize> + '_ {
        self.sigma.keys().copied()
    }

    pub fn sigma(&self, k: usize) -> Option<&Rational> {
        self.sigma.get(&k)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.sigma.iter().map(|(k, v)| (*k, v))
    }

    pub fn contains(&self, k: usize) -> bool {
        self.sigma.contains_key(&k)
    }

    /// `|X|`, counting size 0.
    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_complete(&self) -> bool {
        self.sigma.len() == self.n + 1
    }

    /// Closest known sizes strictly below and above `k`.
    pub fn neighbours(&self, k: usize) -> (Option<usize>, Option<usize>) {
        let below = self.sigma.range(..k).next_back().map(|(k, _)| *k);
        let above = self.sigma.range(k + 1..).next().map(|(k, _)| *k);
        (below, above)
    }

    /// Every coalition whose size is known, valued by `σ`.
    pub fn to_incomplete(&self) -> Result<IncompleteGame, IncompleteError> {
        let entries =
            coalition::all(self.n).filter_map(|s| self.sigma.get(&s.len()).map(|v| (s, v.clone()))).collect::<Vec<_>>();
        IncompleteGame::new(self.n, entries)
    }
}

/// Groups `K` by size. Fails on two equal-size known coalitions of different
/// worth.
pub fn reduce_partially_symmetric(inc: &IncompleteGame) -> Result<ReducedIncomplete, IncompleteError> {
    let mut first: BTreeMap<usize, Coalition> = BTreeMap::new();
    let mut sigma = BTreeMap::new();
    for (s, v) in inc.entries() {
        match first.get(&s.len()) {
            None => {
                first.insert(s.len(), s);
                sigma.insert(s.len(), v.clone());
            }
            Some(&f) if sigma[&s.len()] != *v => {
                return Err(IncompleteError::NotPartiallySymmetric { first: f, second: s })
            }
            Some(_) => {}
        }
    }
    Ok(ReducedIncomplete { n: inc.n(), sigma })
}

/// Smallest superset of `family` closed under pairwise union and
/// intersection.
pub fn lattice_closure<I>(family: I) -> BTreeSet<Coalition>
where
    I: IntoIterator<Item = Coalition>,
{
    let mut closure: BTreeSet<Coalition> = family.into_iter().collect();
    let mut frontier: Vec<Coalition> = closure.iter().copied().collect();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        let snapshot: Vec<Coalition> = closure.iter().copied().collect();
        for &a in &frontier {
            for &b in &snapshot {
                for c in [a.union(b), a.intersection(b)] {
                    if closure.insert(c) {
                        fresh.push(c);
                    }
                }
            }
        }
        frontier = fresh;
    }
    closure
}

/// First incomparable pair of known coalitions, if any.
fn chain_violation(inc: &IncompleteGame) -> Option<(Coalition, Coalition)> {
    let known: Vec<Coalition> = inc.known().collect();
    for (i, &a) in known.iter().enumerate() {
        for &b in &known[i + 1..] {
            if !a.is_comparable(b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// A convex extension of a game whose known coalitions form a chain.
///
/// The chain is completed to a maximal chain `∅ = C_0 ⊂ … ⊂ C_n = N` by
/// adding missing players in ascending order. Unknown chain values are
/// interpolated linearly in chain position; above the top known coalition the
/// last known slope continues (slope 0 when only `∅` is known). The result is
/// the modular game paying each player its marginal along that chain, which
/// is supermodular with equality everywhere.
pub fn chain_convex_extension(inc: &IncompleteGame) -> Result<Game, IncompleteError> {
    if let Some((first, second)) = chain_violation(inc) {
        return Err(IncompleteError::NotAChain { first, second });
    }
    let n = inc.n();
    let mut chain: Vec<(Coalition, &Rational)> = inc.entries().collect();
    chain.sort_by_key(|(s, _)| s.len());

    // Player order along the maximal chain.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut prev = Coalition::EMPTY;
    for &(s, _) in &chain {
        order.extend(s.difference(prev).players());
        prev = s;
    }
    order.extend(inc.grand().difference(prev).players());

    // Chain values at positions 0..=n.
    let anchors: Vec<(usize, &Rational)> = chain.iter().map(|(s, v)| (s.len(), *v)).collect();
    let mut level = vec![Rational::zero(); n + 1];
    for w in anchors.windows(2) {
        let ((p0, v0), (p1, v1)) = (w[0], w[1]);
        let slope = (v1 - v0) / int((p1 - p0) as i64);
        for (p, slot) in level.iter_mut().enumerate().take(p1 + 1).skip(p0) {
            *slot = v0 + &slope * int((p - p0) as i64);
        }
    }
    let (top, top_value) = *anchors.last().expect("∅ is always known");
    let top_slope = match anchors.len() {
        1 => Rational::zero(),
        len => {
            let (p0, v0) = anchors[len - 2];
            (top_value - v0) / int((top - p0) as i64)
        }
    };
    for (p, slot) in level.iter_mut().enumerate().skip(top) {
        *slot = top_value + &top_slope * int((p - top) as i64);
    }

    let mut marginal = vec![Rational::zero(); MAX_PLAYERS + 1];
    for (k, &player) in order.iter().enumerate() {
        marginal[player] = &level[k + 1] - &level[k];
    }
    let game = Game::from_fn(n, |s| s.players().map(|p| marginal[p].clone()).sum())
        .map_err(|_| IncompleteError::TooManyPlayers(n))?;
    debug_assert!(is_extension(&game, inc).unwrap_or(false));
    Ok(game)
}

/// A closed rational interval `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format(&self.lo), format(&self.hi))
    }
}

/// Cooperative interval game: one closed interval per coalition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalGame {
    n: usize,
    intervals: Vec<Interval>,
}

impl IntervalGame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn interval(&self, s: Coalition) -> &Interval {
        &self.intervals[s.index()]
    }

    pub fn contains(&self, g: &Game) -> bool {
        g.n() == self.n
            && coalition::all(self.n).all(|s| {
                let i = self.interval(s);
                i.lo <= *g.value(s) && *g.value(s) <= i.hi
            })
    }
}

/// The interval game `[lower(S), upper(S)]` spanned by a lower and an upper
/// game.
pub fn interval_hull(lower: &Game, upper: &Game) -> Result<IntervalGame, IncompleteError> {
    if lower.n() != upper.n() {
        return Err(IncompleteError::DimensionMismatch { game: lower.n(), incomplete: upper.n() });
    }
    let n = lower.n();
    let mut intervals = Vec::with_capacity(1 << n);
    for s in coalition::all(n) {
        let (lo, hi) = (lower.value(s), upper.value(s));
        if lo > hi {
            return Err(IncompleteError::CrossedBounds(s));
        }
        intervals.push(Interval { lo: lo.clone(), hi: hi.clone() });
    }
    Ok(IntervalGame { n, intervals })
}
