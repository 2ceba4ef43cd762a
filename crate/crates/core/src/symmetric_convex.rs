//! Symmetric convex extensions of partially symmetric incomplete games.
//!
//! Everything here works on reduced forms `(N, X, σ)`. A symmetric game with
//! reduced form `s` is convex iff `s(k-1) + s(k+1) >= 2 s(k)` for
//! `k = 1..n-1`, so the extension set is the polytope of such `s` that agree
//! with `σ` on `X`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::game::ReducedSymmetric;
use crate::incomplete::ReducedIncomplete;
use crate::lp::linalg::{solve, Solution};
use crate::lp::{solve_feasibility, LinearSystem, LpOutcome, VERTEX_COMBINATION_CAP};
use crate::rational::{format, int, Rational};

/// Consecutive known sizes `k1 < k2 < k3` where `σ(k2)` lies above the chord.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleViolation {
    pub triple: (usize, usize, usize),
    pub value: Rational,
    pub bound: Rational,
}

impl fmt::Display for TripleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b, c) = self.triple;
        write!(f, "sigma({b})={} > {} via ({a},{b},{c})", format(&self.value), format(&self.bound))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScError {
    #[error("not extendable: {0}")]
    NotExtendable(Box<TripleViolation>),
    #[error("the set of symmetric convex extensions is unbounded")]
    Unbounded,
    #[error("player counts differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("the game is not a symmetric convex extension")]
    NotAMember,
    #[error("extreme game enumeration would inspect {0} candidates, over the cap")]
    TooLarge(u128),
}

/// Value at `k` of the line through `(a, ya)` and `(b, yb)`.
fn line_at(a: usize, ya: &Rational, b: usize, yb: &Rational, k: usize) -> Rational {
    let (a, b, k) = (a as i64, b as i64, k as i64);
    ya + (yb - ya) * Rational::new((k - a).into(), (b - a).into())
}

fn known(r: &ReducedIncomplete) -> Vec<(usize, Rational)> {
    r.entries().map(|(k, v)| (k, v.clone())).collect()
}

/// First consecutive triple of known sizes violating convexity.
pub fn sc_extendable(r: &ReducedIncomplete) -> Result<(), Box<TripleViolation>> {
    for w in known(r).windows(3) {
        let [(a, ya), (b, yb), (c, yc)] = w else { unreachable!() };
        let bound = line_at(*a, ya, *c, yc, *b);
        if *yb > bound {
            return Err(Box::new(TripleViolation { triple: (*a, *b, *c), value: yb.clone(), bound }));
        }
    }
    Ok(())
}

/// Whether the extension set is bounded: `X` complete, or `|X| > 2` with
/// `n ∈ X`.
pub fn sc_bounded(r: &ReducedIncomplete) -> Result<bool, ScError> {
    sc_extendable(r).map_err(ScError::NotExtendable)?;
    Ok(r.is_complete() || (r.len() > 2 && r.contains(r.n())))
}

fn require_bounded(r: &ReducedIncomplete) -> Result<(), ScError> {
    if sc_bounded(r)? {
        Ok(())
    } else {
        Err(ScError::Unbounded)
    }
}

/// Per-size lower and upper games of the extension set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScBounds {
    pub lower: Vec<Rational>,
    pub upper: Vec<Rational>,
}

impl ScBounds {
    /// The pointwise lower game; not convex in general.
    pub fn lower_game(&self) -> ReducedSymmetric {
        ReducedSymmetric::new(self.lower.clone()).expect("lower(0) = 0")
    }

    pub fn upper_game(&self) -> ReducedSymmetric {
        ReducedSymmetric::new(self.upper.clone()).expect("upper(0) = 0")
    }
}

/// Line chart of `σ`: linear interpolation between neighbouring known sizes.
fn line_chart(r: &ReducedIncomplete) -> Vec<Rational> {
    (0..=r.n())
        .map(|k| match r.sigma(k) {
            Some(v) => v.clone(),
            None => {
                let (Some(i), Some(j)) = r.neighbours(k) else { unreachable!("bounded instances know 0 and n") };
                line_at(i, r.sigma(i).unwrap(), j, r.sigma(j).unwrap(), k)
            }
        })
        .collect()
}

/// Smallest value at an unknown size `k`: the larger of the two secant lines
/// through the known pairs just below and just above `k`.
fn lower_at(r: &ReducedIncomplete, k: usize) -> Rational {
    let (Some(i2), Some(j1)) = r.neighbours(k) else { unreachable!("bounded instances know 0 and n") };
    let (i1, _) = r.neighbours(i2);
    let (_, j2) = r.neighbours(j1);
    let sig = |x: usize| r.sigma(x).unwrap();
    let left = i1.map(|i1| line_at(i1, sig(i1), i2, sig(i2), k));
    let right = j2.map(|j2| line_at(j1, sig(j1), j2, sig(j2), k));
    match (left, right) {
        (Some(a), Some(b)) => a.max(b),
        (Some(a), None) | (None, Some(a)) => a,
        (None, None) => unreachable!("bounded instances know at least three sizes"),
    }
}

pub fn sc_bounds(r: &ReducedIncomplete) -> Result<ScBounds, ScError> {
    require_bounded(r)?;
    let upper = line_chart(r);
    let lower = (0..=r.n())
        .map(|k| match r.sigma(k) {
            Some(v) => v.clone(),
            None => lower_at(r, k),
        })
        .collect();
    Ok(ScBounds { lower, upper })
}

/// Largest number of extreme games assembled from independent blocks.
pub const EXTREME_CAP: usize = 1_000_000;

/// The extreme games of the extension set.
///
/// The upper game and every `s^k` are extreme. They are all of them only when
/// the unknown sizes form one block whose polytope is a simplex. Unknown
/// sizes more than two apart vary independently, so the extension set is a
/// product over such blocks, and a gap pinned by secants on both sides can
/// bend twice. The remaining vertices are kept in `mixed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScExtremeSet {
    pub upper: ReducedSymmetric,
    /// `s^k` for each unknown size `k`, ascending.
    pub gaps: BTreeMap<usize, ReducedSymmetric>,
    /// Vertices that are neither the upper game nor some `s^k`, ascending.
    pub mixed: Vec<ReducedSymmetric>,
}

impl ScExtremeSet {
    /// Counts the upper game, every `s^k` (coincident ones included) and the
    /// mixed vertices.
    pub fn len(&self) -> usize {
        self.gaps.len() + 1 + self.mixed.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct games, ascending.
    pub fn distinct(&self) -> Vec<ReducedSymmetric> {
        let mut all: Vec<ReducedSymmetric> = self.gaps.values().cloned().collect();
        all.push(self.upper.clone());
        all.extend(self.mixed.iter().cloned());
        all.sort();
        all.dedup();
        all
    }

    /// Upper game, then `s^k` by `k`, then the mixed vertices.
    pub fn games(&self) -> impl Iterator<Item = &ReducedSymmetric> {
        std::iter::once(&self.upper).chain(self.gaps.values()).chain(&self.mixed)
    }
}

/// `s^k` follows the line chart except inside the gap containing `k`, where
/// it is piecewise linear through `(i, σ(i))`, `(k, lower(k))`, `(j, σ(j))`.
fn gap_games(r: &ReducedIncomplete, bounds: &ScBounds) -> BTreeMap<usize, ReducedSymmetric> {
    let mut gaps = BTreeMap::new();
    for k in (0..=r.n()).filter(|k| !r.contains(*k)) {
        let (Some(i), Some(j)) = r.neighbours(k) else { unreachable!() };
        let low = &bounds.lower[k];
        let mut s = bounds.upper.clone();
        for (m, slot) in s.iter_mut().enumerate().take(j).skip(i + 1) {
            *slot = if m <= k {
                line_at(i, r.sigma(i).unwrap(), k, low, m)
            } else {
                line_at(k, low, j, r.sigma(j).unwrap(), m)
            };
        }
        gaps.insert(k, ReducedSymmetric::new(s).expect("s(0) = 0"));
    }
    gaps
}

/// Vertices of one block of unknown sizes. Convexity rows touching the block
/// are restricted to its sizes; a vertex is the unique solution of as many
/// tight rows as the block has sizes.
fn block_vertices(r: &ReducedIncomplete, block: &[usize]) -> Vec<Vec<Rational>> {
    let m = block.len();
    let first = block[0].saturating_sub(1).max(1);
    let last = (block[m - 1] + 1).min(r.n() - 1);
    let rows: Vec<(Vec<Rational>, Rational)> = (first..=last)
        .map(|t| {
            let mut coeffs = vec![Rational::zero(); m];
            let mut rhs = Rational::zero();
            for (size, w) in [(t - 1, 1), (t, -2), (t + 1, 1)] {
                match block.iter().position(|&b| b == size) {
                    Some(p) => coeffs[p] += int(w),
                    None => rhs -= r.sigma(size).expect("sizes outside the block are known") * int(w),
                }
            }
            (coeffs, rhs)
        })
        .collect();
    let mut found = BTreeSet::new();
    for tight in rows.iter().combinations(m) {
        let (a, b): (Vec<_>, Vec<_>) = tight.into_iter().cloned().unzip();
        if let Solution::Unique(x) = solve(&a, &b, m) {
            if rows.iter().all(|(c, d)| c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum::<Rational>() >= *d) {
                found.insert(x);
            }
        }
    }
    found.into_iter().collect()
}

/// Unknown sizes split where consecutive ones are more than two apart; no
/// convexity row spans two blocks.
fn blocks(r: &ReducedIncomplete) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for k in (0..=r.n()).filter(|k| !r.contains(*k)) {
        match out.last_mut() {
            Some(b) if k - b[b.len() - 1] <= 2 => b.push(k),
            _ => out.push(vec![k]),
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Every vertex of the extension set, ascending.
fn vertices(r: &ReducedIncomplete) -> Result<Vec<Vec<Rational>>, ScError> {
    let blocks = blocks(r);
    let work: u128 = blocks
        .iter()
        .map(|b| {
            let rows = (b[b.len() - 1] + 1).min(r.n() - 1) + 1 - b[0].saturating_sub(1).max(1);
            binomial(rows, b.len())
        })
        .sum();
    if work > VERTEX_COMBINATION_CAP {
        return Err(ScError::TooLarge(work));
    }
    let per_block: Vec<Vec<Vec<Rational>>> = blocks.iter().map(|b| block_vertices(r, b)).collect();
    let total = per_block.iter().try_fold(1usize, |acc, v| acc.checked_mul(v.len()));
    match total {
        Some(t) if t <= EXTREME_CAP => {}
        _ => return Err(ScError::TooLarge(per_block.iter().map(|v| v.len() as u128).product())),
    }
    let base: Vec<Rational> = (0..=r.n()).map(|k| r.sigma(k).cloned().unwrap_or_else(Rational::zero)).collect();
    let mut out = vec![base];
    for (block, verts) in blocks.iter().zip(&per_block) {
        out = out
            .iter()
            .flat_map(|partial| {
                verts.iter().map(move |x| {
                    let mut s = partial.clone();
                    for (&k, v) in block.iter().zip(x) {
                        s[k] = v.clone();
                    }
                    s
                })
            })
            .collect();
    }
    out.sort();
    Ok(out)
}

pub fn sc_extreme_games(r: &ReducedIncomplete) -> Result<ScExtremeSet, ScError> {
    let bounds = sc_bounds(r)?;
    let gaps = gap_games(r, &bounds);
    let upper = bounds.upper_game();
    let family: BTreeSet<&[Rational]> = gaps.values().chain([&upper]).map(|g| g.values()).collect();
    let all = vertices(r)?;
    debug_assert!(family.iter().all(|g| all.binary_search_by(|v| v.as_slice().cmp(g)).is_ok()));
    let mixed = all
        .into_iter()
        .filter(|v| !family.contains(v.as_slice()))
        .map(|v| ReducedSymmetric::new(v).expect("s(0) = 0"))
        .collect();
    Ok(ScExtremeSet { upper, gaps, mixed })
}

/// `s` is convex and agrees with `σ` on `X`.
pub fn sc_membership(s: &ReducedSymmetric, r: &ReducedIncomplete) -> bool {
    s.n() == r.n() && r.entries().all(|(k, v)| s.at(k) == v) && s.is_convex()
}

/// Second difference `s(k-1) + s(k+1) - 2 s(k)`.
fn second_difference(s: &[Rational], k: usize) -> Rational {
    &s[k - 1] + &s[k + 1] - &s[k] * int(2)
}

/// Convex weights over the extreme games.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScDecomposition {
    pub upper: Rational,
    pub gaps: BTreeMap<usize, Rational>,
    /// Aligned with [`ScExtremeSet::mixed`].
    pub mixed: Vec<Rational>,
}

/// Weights from second differences; `None` when they leave the upper game a
/// negative weight.
///
/// Inside a gap, a member minus the upper game vanishes at both ends and is
/// fixed by its second differences at the unknown sizes. Every `s^k` bends
/// only at `k`, so `s = upper + Σ α_k (s^k - upper)` with `α_k` the ratio of
/// second differences at `k`. This is a convex combination iff `Σ α_k ≤ 1`.
fn decompose_by_bends(s: &ReducedSymmetric, extremes: &ScExtremeSet) -> Option<ScDecomposition> {
    let mut gaps = BTreeMap::new();
    let mut rest = Rational::one();
    for (&k, e) in &extremes.gaps {
        let denom = second_difference(e.values(), k);
        let alpha = if denom.is_zero() { Rational::zero() } else { second_difference(s.values(), k) / denom };
        rest -= &alpha;
        gaps.insert(k, alpha);
    }
    let mixed = vec![Rational::zero(); extremes.mixed.len()];
    (!rest.is_negative()).then_some(ScDecomposition { upper: rest, gaps, mixed })
}

/// Weights over every extreme game from one feasibility solve.
fn decompose_by_lp(s: &ReducedSymmetric, r: &ReducedIncomplete, extremes: &ScExtremeSet) -> ScDecomposition {
    let games: Vec<&ReducedSymmetric> = extremes.games().collect();
    let mut sys = LinearSystem::new(games.len());
    sys.add_eq(vec![Rational::one(); games.len()], Rational::one());
    for k in (0..=r.n()).filter(|k| !r.contains(*k)) {
        sys.add_eq(games.iter().map(|g| g.at(k).clone()).collect(), s.at(k).clone());
    }
    let LpOutcome::Feasible(mut w) = solve_feasibility(&sys) else {
        unreachable!("members lie in the hull of the vertices")
    };
    let mixed = w.split_off(1 + extremes.gaps.len());
    let upper = w.remove(0);
    ScDecomposition { upper, gaps: extremes.gaps.keys().copied().zip(w).collect(), mixed }
}

/// Writes a member of the extension set as a convex combination of the
/// extreme games. The upper game and the `s^k` suffice whenever their
/// second-difference weights sum to at most one; otherwise the mixed
/// vertices take part as well.
pub fn sc_decompose(s: &ReducedSymmetric, r: &ReducedIncomplete) -> Result<ScDecomposition, ScError> {
    if s.n() != r.n() {
        return Err(ScError::DimensionMismatch(s.n(), r.n()));
    }
    let extremes = sc_extreme_games(r)?;
    if !sc_membership(s, r) {
        return Err(ScError::NotAMember);
    }
    let dec = decompose_by_bends(s, &extremes).unwrap_or_else(|| decompose_by_lp(s, r, &extremes));
    debug_assert!(!dec.upper.is_negative());
    debug_assert!(dec.gaps.values().chain(&dec.mixed).all(|a| !a.is_negative()));
    assert_eq!(recombine(&dec, &extremes), s.values(), "decomposition does not reproduce its input");
    Ok(dec)
}

/// `Σ α_e · e` over the extreme set.
pub fn recombine(dec: &ScDecomposition, extremes: &ScExtremeSet) -> Vec<Rational> {
    let mut out: Vec<Rational> = extremes.upper.values().iter().map(|x| x * &dec.upper).collect();
    let weighted = dec.gaps.iter().map(|(k, a)| (a, &extremes.gaps[k])).chain(dec.mixed.iter().zip(&extremes.mixed));
    for (alpha, game) in weighted {
        if alpha.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(game.values()) {
            *o += alpha * x;
        }
    }
    out
}

/// The extension set as a linear system over `s(0..=n)`, all free:
/// `s(k) = σ(k)` on `X` and `s(k-1) - 2 s(k) + s(k+1) >= 0` inside.
pub fn sc_system(r: &ReducedIncomplete) -> LinearSystem {
    let width = r.n() + 1;
    let mut sys = LinearSystem::new_free(width);
    for (k, v) in r.entries() {
        let mut row = vec![Rational::zero(); width];
        row[k] = int(1);
        sys.add_eq(row, v.clone());
    }
    for k in 1..r.n() {
        let mut row = vec![Rational::zero(); width];
        row[k - 1] = int(1);
        row[k] = int(-2);
        row[k + 1] = int(1);
        sys.add_ge(row, Rational::zero());
    }
    sys
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::classify;
    use crate::lp::{enumerate_vertices, optimize, Direction, LpOutcome};
    use crate::rational::ratio;

    fn reduced(n: usize, entries: &[(usize, i64)]) -> ReducedIncomplete {
        ReducedIncomplete::new(n, entries.iter().map(|&(k, v)| (k, int(v)))).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn rs(v: &[i64]) -> ReducedSymmetric {
        ReducedSymmetric::new(ints(v)).unwrap()
    }

    /// `X = {0,2,4}`, `σ = (0,2,8)`, four players.
    fn fixture() -> ReducedIncomplete {
        reduced(4, &[(2, 2), (4, 8)])
    }

    /// Per-size LP minimum and maximum over [`sc_system`].
    fn lp_bounds(r: &ReducedIncomplete) -> (Vec<Rational>, Vec<Rational>) {
        let sys = sc_system(r);
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for k in 0..=r.n() {
            let mut e = vec![Rational::zero(); r.n() + 1];
            e[k] = int(1);
            for (dir, out) in [(Direction::Minimize, &mut lo), (Direction::Maximize, &mut hi)] {
                match optimize(&sys, &e, dir) {
                    LpOutcome::Optimal { value, .. } => out.push(value),
                    other => panic!("unexpected {other:?}"),
                }
            }
        }
        (lo, hi)
    }

    #[test]
    fn extendability_triples() {
        assert!(sc_extendable(&fixture()).is_ok());
        let bad = reduced(6, &[(2, 4), (3, 5), (6, 20)]);
        let v = sc_extendable(&bad).unwrap_err();
        assert_eq!(v.triple, (0, 2, 3));
        assert_eq!(v.bound, ratio(10, 3));
        assert_eq!(v.to_string(), "sigma(2)=4 > 10/3 via (0,2,3)");
        for s in [-5, 0, 7] {
            assert!(sc_extendable(&reduced(5, &[(3, s)])).is_ok());
        }
        // Collinear triples are allowed.
        assert!(sc_extendable(&reduced(4, &[(2, 2), (4, 4)])).is_ok());
    }

    #[test]
    fn boundedness() {
        assert_eq!(sc_bounded(&fixture()), Ok(true));
        assert_eq!(sc_bounded(&reduced(4, &[(2, 2)])), Ok(false));
        assert_eq!(sc_bounded(&reduced(4, &[(4, 2)])), Ok(false));
        assert_eq!(sc_bounded(&reduced(2, &[(1, 1), (2, 5)])), Ok(true));
        assert_eq!(sc_bounded(&reduced(2, &[(2, 5)])), Ok(false));
        assert!(matches!(sc_bounded(&reduced(6, &[(2, 4), (3, 5), (6, 20)])), Err(ScError::NotExtendable(_))));
        assert_eq!(sc_bounds(&reduced(4, &[(2, 2)])), Err(ScError::Unbounded));
    }

    #[test]
    fn bounds_of_fixture() {
        let b = sc_bounds(&fixture()).unwrap();
        assert_eq!(b.lower, ints(&[0, -1, 2, 3, 8]));
        assert_eq!(b.upper, ints(&[0, 1, 2, 5, 8]));
        assert_eq!(lp_bounds(&fixture()), (b.lower, b.upper));
    }

    #[test]
    fn complete_sizes_pin_everything() {
        let r = reduced(3, &[(1, 1), (2, 4), (3, 9)]);
        let b = sc_bounds(&r).unwrap();
        assert_eq!(b.lower, b.upper);
        let e = sc_extreme_games(&r).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.upper, rs(&[0, 1, 4, 9]));
    }

    #[test]
    fn extremes_of_fixture() {
        let e = sc_extreme_games(&fixture()).unwrap();
        assert_eq!(e.len(), 3);
        assert_eq!(e.gaps[&1], rs(&[0, -1, 2, 5, 8]));
        assert_eq!(e.gaps[&3], rs(&[0, 1, 2, 3, 8]));
        assert_eq!(e.upper, rs(&[0, 1, 2, 5, 8]));
        assert!(e.mixed.is_empty());
        assert_eq!(enumerate_vertices(&sc_system(&fixture())).unwrap(), vertex_set(&e));
    }

    fn vertex_set(e: &ScExtremeSet) -> Vec<Vec<Rational>> {
        e.distinct().iter().map(|g| g.values().to_vec()).collect()
    }

    #[test]
    fn gap_pinned_on_both_sides_bends_twice() {
        // Sizes 3 and 5 share the convexity row at 4, and size 3 is also held
        // by the row at 2. The chart (0,-1,0,1,4,7,12) bends at both 3 and 5.
        let r = reduced(6, &[(1, -1), (2, 0), (4, 4), (6, 12)]);
        let e = sc_extreme_games(&r).unwrap();
        assert_eq!(e.gaps[&3], rs(&[0, -1, 0, 1, 4, 8, 12]));
        assert_eq!(e.gaps[&5], rs(&[0, -1, 0, 2, 4, 6, 12]));
        assert_eq!(e.mixed, vec![rs(&[0, -1, 0, 1, 4, 7, 12])]);
        assert_eq!(e.len(), 4);
        assert_eq!(vertex_set(&e), enumerate_vertices(&sc_system(&r)).unwrap());
        assert!(e.distinct().iter().all(|g| sc_membership(g, &r)));
    }

    #[test]
    fn independent_blocks_multiply() {
        // Size 1 varies independently of sizes 5 and 7: an interval times a
        // triangle has six vertices, two of them outside the s^k family.
        let sigma = [(2, ratio(-17, 2)), (3, ratio(-23, 2)), (4, ratio(-49, 4)), (6, int(-6)), (8, ratio(9, 4))];
        let r = ReducedIncomplete::new(8, sigma).unwrap();
        let e = sc_extreme_games(&r).unwrap();
        assert_eq!(e.gaps.len() + 1, 4);
        assert_eq!(e.mixed.len(), 2);
        assert_eq!(vertex_set(&e), enumerate_vertices(&sc_system(&r)).unwrap());
        let both_low = &e.mixed.iter().find(|g| g.at(5) == &ratio(-81, 8)).unwrap();
        assert_eq!(both_low.at(1), &ratio(-11, 2));
        // The midpoint of two mixed vertices needs them in its decomposition.
        let mid: Vec<Rational> =
            e.mixed[0].values().iter().zip(e.mixed[1].values()).map(|(a, b)| (a + b) / int(2)).collect();
        let d = sc_decompose(&ReducedSymmetric::new(mid).unwrap(), &r).unwrap();
        assert!(d.mixed.iter().any(|w| !w.is_zero()));
    }

    #[test]
    fn pointwise_lower_game_can_fail_convexity() {
        // Known sizes 0,1,2,4,6 on six players: the lower game bends the wrong
        // way at size 4.
        let r = reduced(6, &[(1, -1), (2, 0), (4, 4), (6, 12)]);
        let b = sc_bounds(&r).unwrap();
        assert_eq!(b.lower, ints(&[0, -1, 0, 1, 4, 6, 12]));
        assert_eq!(lp_bounds(&r).0, b.lower);
        let low = b.lower_game();
        assert!(!sc_membership(&low, &r));
        assert!(!classify(&low.to_game().unwrap()).is_convex());
        assert!(sc_membership(&b.upper_game(), &r));
    }

    #[test]
    fn membership_checks() {
        let r = fixture();
        assert!(sc_membership(&rs(&[0, 0, 2, 4, 8]), &r));
        assert!(!sc_membership(&rs(&[0, 0, 3, 4, 8]), &r));
        assert!(!sc_membership(&rs(&[0, 2, 2, 4, 8]), &r));
        assert!(!sc_membership(&rs(&[0, 0, 2, 4]), &r));
    }

    #[test]
    fn decomposition_examples() {
        let r = fixture();
        let d = sc_decompose(&rs(&[0, 0, 2, 4, 8]), &r).unwrap();
        assert_eq!(d.upper, int(0));
        assert_eq!(d.gaps[&1], ratio(1, 2));
        assert_eq!(d.gaps[&3], ratio(1, 2));

        let d = sc_decompose(&rs(&[0, 1, 2, 5, 8]), &r).unwrap();
        assert_eq!(d.upper, int(1));
        assert!(d.gaps.values().all(Zero::is_zero));

        let e = sc_extreme_games(&r).unwrap();
        for (k, g) in &e.gaps {
            let d = sc_decompose(g, &r).unwrap();
            assert_eq!(d.gaps[k], int(1));
            assert_eq!(d.upper, int(0));
        }
        assert_eq!(sc_decompose(&rs(&[0, 2, 2, 4, 8]), &r), Err(ScError::NotAMember));
    }

    #[test]
    fn collinear_data_collapses_extremes() {
        // σ on a line: every gap is pinned and all s^k coincide with the upper
        // game, so fewer distinct extremes than the generic count.
        let r = reduced(4, &[(1, 1), (2, 2), (4, 4)]);
        let e = sc_extreme_games(&r).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.distinct().len(), 1);
        assert_eq!(enumerate_vertices(&sc_system(&r)).unwrap().len(), 1);
    }
}
