//! Extreme games of the positive extensions of a bounded incomplete game.
//!
//! A vertex of `{d >= 0 : Σ_{T⊆S} d(T) = v(S), S ∈ K}` has linearly
//! independent support columns. Coalitions sharing a pattern have identical
//! columns, so the search runs over patterns and each pattern-level vertex is
//! expanded by choosing one coalition per pattern.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::patterns::Patterns;
use super::{check_cap, game_from_dividends, Dividends, Obstruction, PositiveError};
use crate::game::Game;
use crate::incomplete::IncompleteGame;
use crate::limits;
use crate::rational::Rational;

use super::extend::{pos_extendable, FeasibilityOutcome};

/// Search nodes visited before giving up.
const NODE_LIMIT: u64 = 5_000_000;

/// Support of a positive extension with its dividends.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct BalancedCollection {
    pub dividends: Dividends,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extreme {
    pub collection: BalancedCollection,
    pub game: Game,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveExtremeSet {
    pub extremes: Vec<Extreme>,
}

impl PositiveExtremeSet {
    pub fn len(&self) -> usize {
        self.extremes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.extremes.is_empty()
    }
}

/// Echelon form of the chosen columns, tracking how `b` decomposes.
#[derive(Clone)]
struct Span {
    /// `(pivot row, reduced vector, coefficients over chosen columns)`.
    basis: Vec<(usize, Vec<Rational>, Vec<Rational>)>,
    b_rest: Vec<Rational>,
    b_coeffs: Vec<Rational>,
}

fn axpy(y: &mut [Rational], f: &Rational, x: &[Rational]) {
    for (y, x) in y.iter_mut().zip(x) {
        if !x.is_zero() {
            *y += f * x;
        }
    }
}

impl Span {
    fn new(b: &[Rational], m: usize) -> Self {
        Span { basis: Vec::new(), b_rest: b.to_vec(), b_coeffs: vec![Rational::zero(); m] }
    }

    /// Adds a column; `None` when it is dependent on the chosen ones.
    fn push(&self, col: &[Rational]) -> Option<Span> {
        let m = self.b_coeffs.len();
        let pos = self.basis.len();
        let mut x = col.to_vec();
        let mut expr = vec![Rational::zero(); m];
        expr[pos] = Rational::one();
        for (p, v, e) in &self.basis {
            if !x[*p].is_zero() {
                let f = -x[*p].clone();
                axpy(&mut x, &f, v);
                axpy(&mut expr, &f, e);
            }
        }
        let pivot = x.iter().position(|t| !t.is_zero())?;
        let inv = Rational::one() / &x[pivot];
        x.iter_mut().for_each(|t| *t *= &inv);
        expr.iter_mut().for_each(|t| *t *= &inv);
        let mut next = self.clone();
        let f = next.b_rest[pivot].clone();
        if !f.is_zero() {
            axpy(&mut next.b_rest, &-f.clone(), &x);
            axpy(&mut next.b_coeffs, &f, &expr);
        }
        next.basis.push((pivot, x, expr));
        Some(next)
    }

    fn contains_b(&self) -> bool {
        self.b_rest.iter().all(Zero::is_zero)
    }
}

struct Search<'a> {
    columns: &'a [Vec<Rational>],
    nodes: u64,
    found: Vec<Vec<(usize, Rational)>>,
}

impl Search<'_> {
    fn dfs(&mut self, start: usize, span: &Span, chosen: &mut Vec<usize>) -> Result<(), PositiveError> {
        for g in start..self.columns.len() {
            self.nodes += 1;
            if self.nodes > NODE_LIMIT {
                return Err(PositiveError::TooLarge(NODE_LIMIT));
            }
            let Some(next) = span.push(&self.columns[g]) else { continue };
            chosen.push(g);
            if next.contains_b() {
                // Any larger independent support would put zeros on the extras.
                let coeffs = &next.b_coeffs[..chosen.len()];
                if coeffs.iter().all(Signed::is_positive) {
                    self.found.push(chosen.iter().copied().zip(coeffs.iter().cloned()).collect());
                }
            } else {
                self.dfs(g + 1, &next, chosen)?;
            }
            chosen.pop();
        }
        Ok(())
    }
}

/// Every vertex of the positive extensions of a bounded game, with the
/// default player cap.
pub fn pos_extreme_games(inc: &IncompleteGame) -> Result<PositiveExtremeSet, PositiveError> {
    pos_extreme_games_capped(inc, limits::POSITIVE_ENUMERATION.default)
}

pub fn pos_extreme_games_capped(inc: &IncompleteGame, cap: usize) -> Result<PositiveExtremeSet, PositiveError> {
    let n = inc.n();
    check_cap(n, cap.min(limits::POSITIVE_ENUMERATION.ceiling))?;
    if let FeasibilityOutcome::Certificate(y) = pos_extendable(inc)? {
        return Err(PositiveError::NotExtendable(Obstruction::Certificate(y)));
    }
    if !inc.is_known(inc.grand()) {
        return Err(PositiveError::Unbounded);
    }
    let p = Patterns::full(inc);
    let m = p.rows.len();
    let columns: Vec<Vec<Rational>> = (0..p.groups.len()).map(|g| p.column(g)).collect();

    let mut search = Search { columns: &columns, nodes: 0, found: Vec::new() };
    if p.values.iter().all(Zero::is_zero) {
        // Only the zero game; its empty support is the sole vertex.
        search.found.push(Vec::new());
    } else {
        search.dfs(0, &Span::new(&p.values, m), &mut Vec::new())?;
    }

    let mut extremes = Vec::new();
    for support in &search.found {
        let picks: Vec<Vec<_>> = if support.is_empty() {
            vec![Vec::new()]
        } else {
            support.iter().map(|(g, _)| p.groups[*g].members.iter().copied()).multi_cartesian_product().collect()
        };
        for pick in picks {
            let dividends: Dividends = pick.into_iter().zip(support.iter().map(|(_, d)| d.clone())).collect();
            let game = game_from_dividends(n, &dividends);
            extremes.push(Extreme { collection: BalancedCollection { dividends }, game });
        }
    }
    extremes.sort_by(|a, b| a.game.values().cmp(b.game.values()));
    Ok(PositiveExtremeSet { extremes })
}
