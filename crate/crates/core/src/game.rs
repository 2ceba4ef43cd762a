//! Complete TU games, Harsanyi dividends and class predicates.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::coalition::{self, Coalition, MAX_PLAYERS};
use crate::rational::{format, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GameError {
    #[error("{0} players exceeds the limit of {MAX_PLAYERS}")]
    TooManyPlayers(usize),
    #[error("expected {expected} values for {n} players, got {got}")]
    WrongLength { n: usize, expected: usize, got: usize },
    #[error("the empty coalition must have value 0, got {0}")]
    NonzeroEmpty(String),
    #[error("game is not symmetric: v{first} != v{second}")]
    NotSymmetric { first: Coalition, second: Coalition },
    #[error("player counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
}

/// A characteristic function `v: 2^N -> Q` with `v(∅) = 0`, stored densely by
/// canonical coalition index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Game {
    n: usize,
    values: Vec<Rational>,
}

impl Game {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, GameError> {
        if n > MAX_PLAYERS {
            return Err(GameError::TooManyPlayers(n));
        }
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(GameError::WrongLength { n, expected, got: values.len() });
        }
        if !values[0].is_zero() {
            return Err(GameError::NonzeroEmpty(format(&values[0])));
        }
        Ok(Game { n, values })
    }

    /// Evaluates `f` on every nonempty coalition; `∅` is pinned to 0.
    pub fn from_fn(n: usize, mut f: impl FnMut(Coalition) -> Rational) -> Result<Self, GameError> {
        if n > MAX_PLAYERS {
            return Err(GameError::TooManyPlayers(n));
        }
        let values = coalition::all(n).map(|s| if s.is_empty() { Rational::zero() } else { f(s) }).collect();
        Ok(Game { n, values })
    }

    pub fn zero(n: usize) -> Self {
        Game::from_fn(n, |_| Rational::zero()).expect("player count checked by caller")
    }

    /// `u_T(S) = 1` iff `T ⊆ S`.
    pub fn unanimity(n: usize, t: Coalition) -> Self {
        assert!(!t.is_empty() && t.fits(n), "unanimity game needs a nonempty coalition of N");
        Game::from_fn(n, |s| if t.is_subset_of(s) { int(1) } else { int(0) }).expect("player count checked by caller")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, s: Coalition) -> &Rational {
        &self.values[s.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: &Rational, other: &Game, beta: &Rational) -> Result<Game, GameError> {
        if self.n != other.n {
            return Err(GameError::DimensionMismatch(self.n, other.n));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| alpha * a + beta * b).collect();
        Ok(Game { n: self.n, values })
    }
}

/// Harsanyi dividends `d(T)`, indexed like [`Game`]; `d(∅) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DividendVector {
    n: usize,
    d: Vec<Rational>,
}

impl DividendVector {
    pub fn new(n: usize, d: Vec<Rational>) -> Result<Self, GameError> {
        // Same shape rules as a game.
        let g = Game::new(n, d)?;
        Ok(DividendVector { n, d: g.values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Coalition) -> &Rational {
        &self.d[t.index()]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.d
    }

    /// Nonzero entries in canonical order.
    pub fn support(&self) -> Vec<Coalition> {
        coalition::all(self.n).filter(|t| !self.get(*t).is_zero()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.d.iter().all(|x| !x.is_negative())
    }
}

/// Möbius transform: the Harsanyi dividends of `g`.
pub fn mobius(g: &Game) -> DividendVector {
    let mut d = g.values.clone();
    for bit in 0..g.n {
        let b = 1usize << bit;
        for mask in 0..d.len() {
            if mask & b != 0 {
                let lower = d[mask ^ b].clone();
                d[mask] -= lower;
            }
        }
    }
    DividendVector { n: g.n, d }
}

/// Zeta transform: `v(S) = Σ_{T ⊆ S} d(T)`, i.e. `v = Σ d(T) u_T`.
pub fn inverse_mobius(d: &DividendVector) -> Game {
    let mut v = d.d.clone();
    for bit in 0..d.n {
        let b = 1usize << bit;
        for mask in 0..v.len() {
            if mask & b != 0 {
                let lower = v[mask ^ b].clone();
                v[mask] += lower;
            }
        }
    }
    Game { n: d.n, values: v }
}

/// A concrete reason why a game is outside a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `v(smaller) > v(larger)` although `smaller ⊆ larger`.
    Monotonicity {
        smaller: Coalition,
        larger: Coalition,
    },
    /// `v(first) + v(second) > v(first ∪ second)` for disjoint coalitions.
    Superadditivity {
        first: Coalition,
        second: Coalition,
    },
    /// The marginal contribution of `player` to `smaller` exceeds its
    /// contribution to `larger ⊇ smaller`.
    Supermodularity {
        player: usize,
        smaller: Coalition,
        larger: Coalition,
    },
    NegativeDividend {
        coalition: Coalition,
        dividend: Rational,
    },
    /// Two coalitions of equal size with different worth.
    Asymmetry {
        first: Coalition,
        second: Coalition,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Monotonicity { smaller, larger } => write!(f, "v({smaller}) > v({larger})"),
            Violation::Superadditivity { first, second } => {
                write!(f, "v({first}) + v({second}) > v({})", first.union(*second))
            }
            Violation::Supermodularity { player, smaller, larger } => write!(
                f,
                "marginal of player {player}: v({}) - v({smaller}) > v({}) - v({larger})",
                smaller.with(*player),
                larger.with(*player)
            ),
            Violation::NegativeDividend { coalition, dividend } => {
                write!(f, "d({coalition}) = {}", format(dividend))
            }
            Violation::Asymmetry { first, second } => write!(f, "v({first}) != v({second})"),
        }
    }
}

/// Class membership of a complete game; `None` means the class property holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub monotonic: Option<Violation>,
    pub superadditive: Option<Violation>,
    pub convex: Option<Violation>,
    pub positive: Option<Violation>,
    pub symmetric: Option<Violation>,
}

impl ClassReport {
    pub fn is_monotonic(&self) -> bool {
        self.monotonic.is_none()
    }
    pub fn is_superadditive(&self) -> bool {
        self.superadditive.is_none()
    }
    pub fn is_convex(&self) -> bool {
        self.convex.is_none()
    }
    pub fn is_positive(&self) -> bool {
        self.positive.is_none()
    }
    pub fn is_symmetric(&self) -> bool {
        self.symmetric.is_none()
    }
}

/// Decides the five classes. Every failure carries the first violation met
/// in canonical coalition order.
pub fn classify(g: &Game) -> ClassReport {
    let convex = convexity_violation(g);
    // Supermodular with v(∅) = 0 already implies superadditive.
    let superadditive = if convex.is_none() { None } else { superadditivity_violation(g) };
    let report = ClassReport {
        monotonic: monotonicity_violation(g),
        superadditive,
        convex,
        positive: positivity_violation(g),
        symmetric: symmetry_violation(g),
    };
    debug_assert!(!report.is_positive() || report.is_convex());
    debug_assert!(!report.is_convex() || report.is_superadditive());
    report
}

fn monotonicity_violation(g: &Game) -> Option<Violation> {
    // Single-player steps suffice by transitivity of ⊆.
    for s in coalition::all(g.n) {
        for i in s.players() {
            let smaller = s.without(i);
            if g.value(smaller) > g.value(s) {
                return Some(Violation::Monotonicity { smaller, larger: s });
            }
        }
    }
    None
}

fn superadditivity_violation(g: &Game) -> Option<Violation> {
    let grand = g.grand();
    for s in coalition::all(g.n).skip(1) {
        for t in grand.difference(s).subsets() {
            if t.index() <= s.index() {
                continue;
            }
            if g.value(s) + g.value(t) > *g.value(s.union(t)) {
                return Some(Violation::Superadditivity { first: s, second: t });
            }
        }
    }
    None
}

// Increasing marginals for every player between S and S + j imply them for
// every S ⊆ T (telescoping along any chain from S to T), so adjacent pairs
// decide convexity in O(2^n n^2).
fn convexity_violation(g: &Game) -> Option<Violation> {
    let n = g.n;
    for s in coalition::all(n) {
        let vs = g.value(s);
        for i in 1..=n {
            if s.contains(i) {
                continue;
            }
            let si = s.with(i);
            for j in (i + 1)..=n {
                if s.contains(j) {
                    continue;
                }
                let sj = s.with(j);
                if g.value(si) + g.value(sj) > vs + g.value(si.with(j)) {
                    return Some(Violation::Supermodularity { player: i, smaller: s, larger: sj });
                }
            }
        }
    }
    None
}

fn positivity_violation(g: &Game) -> Option<Violation> {
    let d = mobius(g);
    coalition::all(g.n)
        .find(|t| d.get(*t).is_negative())
        .map(|t| Violation::NegativeDividend { coalition: t, dividend: d.get(t).clone() })
}

fn symmetry_violation(g: &Game) -> Option<Violation> {
    let mut first_of_size: Vec<Option<Coalition>> = vec![None; g.n + 1];
    for s in coalition::all(g.n) {
        match first_of_size[s.len()] {
            None => first_of_size[s.len()] = Some(s),
            Some(first) if g.value(first) != g.value(s) => return Some(Violation::Asymmetry { first, second: s }),
            Some(_) => {}
        }
    }
    None
}

/// A triple with `(v(S - i) + v(S + j)) / 2 < v(S)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MidpointViolation {
    pub coalition: Coalition,
    pub removed: usize,
    pub added: usize,
}

/// First `(S, i, j)`, `i ∈ S`, `j ∉ S`, breaking the midpoint inequality.
///
/// Scans `S` in canonical order, then the neighbours `S - i` and `S + j` each
/// in canonical order (so `i` descends and `j` ascends). For symmetric games
/// `None` is equivalent to convexity; for general games it is not.
pub fn midpoint_check(g: &Game) -> Option<MidpointViolation> {
    let n = g.n;
    let grand = g.grand();
    for s in coalition::all(n) {
        if s.is_empty() || s == grand {
            continue;
        }
        let twice = g.value(s) * int(2);
        let members: Vec<usize> = s.players().collect();
        for &i in members.iter().rev() {
            for j in grand.difference(s).players() {
                if g.value(s.without(i)) + g.value(s.with(j)) < twice {
                    return Some(MidpointViolation { coalition: s, removed: i, added: j });
                }
            }
        }
    }
    None
}

/// Size-indexed form `s(k)` of a symmetric game, `k = 0..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedSymmetric {
    n: usize,
    values: Vec<Rational>,
}

impl ReducedSymmetric {
    pub fn new(values: Vec<Rational>) -> Result<Self, GameError> {
        if values.is_empty() {
            return Err(GameError::WrongLength { n: 0, expected: 1, got: 0 });
        }
        if !values[0].is_zero() {
            return Err(GameError::NonzeroEmpty(format(&values[0])));
        }
        Ok(ReducedSymmetric { n: values.len() - 1, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Expands to the full game `v(S) = s(|S|)`.
    pub fn to_game(&self) -> Result<Game, GameError> {
        Game::from_fn(self.n, |s| self.values[s.len()].clone())
    }

    /// `(s(k-1) + s(k+1)) / 2 >= s(k)` for every interior `k`.
    pub fn is_convex(&self) -> bool {
        (1..self.n).all(|k| &self.values[k - 1] + &self.values[k + 1] >= &self.values[k] * int(2))
    }
}

/// The reduced form of a symmetric game.
pub fn reduce_symmetric(g: &Game) -> Result<ReducedSymmetric, GameError> {
    if let Some(Violation::Asymmetry { first, second }) = symmetry_violation(g) {
        return Err(GameError::NotSymmetric { first, second });
    }
    let values = (0..=g.n).map(|k| g.values[(1usize << k) - 1].clone()).collect();
    Ok(ReducedSymmetric { n: g.n, values })
}
