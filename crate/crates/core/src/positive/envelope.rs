//! Per-coalition minimum and maximum over all positive extensions.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::extend::{pos_extendable, FeasibilityOutcome};
use super::patterns::Patterns;
use super::{check_cap, Obstruction, PositiveError};
use crate::coalition::{self, Coalition};
use crate::game::Game;
use crate::incomplete::IncompleteGame;
use crate::limits;
use crate::lp::{optimize, Direction, LinearSystem, LpOutcome};
use crate::rational::Rational;

/// Coalition-indexed bounds; `upper` is `None` where no maximum exists.
///
/// The lower envelope need not itself be a positive game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub n: usize,
    pub lower: Vec<Rational>,
    pub upper: Vec<Option<Rational>>,
}

impl Envelope {
    pub fn lower_at(&self, s: Coalition) -> &Rational {
        &self.lower[s.index()]
    }

    pub fn upper_at(&self, s: Coalition) -> Option<&Rational> {
        self.upper[s.index()].as_ref()
    }

    pub fn lower_game(&self) -> Game {
        Game::new(self.n, self.lower.clone()).expect("lower(∅) = 0")
    }

    pub fn upper_game(&self) -> Option<Game> {
        let values = self.upper.iter().cloned().collect::<Option<Vec<_>>>()?;
        Some(Game::new(self.n, values).expect("upper(∅) = 0"))
    }
}

fn extremum(p: &Patterns, s: Coalition, direction: Direction) -> Option<Rational> {
    // Columns are (pattern, whether the coalition lies inside S).
    let mut cols: Vec<(usize, bool)> = Vec::new();
    for (g, group) in p.groups.iter().enumerate() {
        let inside = group.members.iter().any(|t| t.is_subset_of(s));
        let outside = group.members.iter().any(|t| !t.is_subset_of(s));
        if inside {
            cols.push((g, true));
        }
        if outside {
            cols.push((g, false));
        }
    }
    let mut sys = LinearSystem::new(cols.len());
    for (r, v) in p.values.iter().enumerate() {
        let row =
            cols.iter().map(|(g, _)| if p.groups[*g].has(r) { Rational::one() } else { Rational::zero() }).collect();
        sys.add_eq(row, v.clone());
    }
    let objective: Vec<Rational> =
        cols.iter().map(|(_, inside)| if *inside { Rational::one() } else { Rational::zero() }).collect();
    match optimize(&sys, &objective, direction) {
        LpOutcome::Optimal { value, .. } => Some(value),
        LpOutcome::Unbounded { .. } => None,
        other => unreachable!("extendable system became {other:?}"),
    }
}

/// LP envelope with the default player cap.
pub fn pos_envelope(inc: &IncompleteGame) -> Result<Envelope, PositiveError> {
    pos_envelope_capped(inc, limits::POSITIVE_ENUMERATION.default)
}

pub fn pos_envelope_capped(inc: &IncompleteGame, cap: usize) -> Result<Envelope, PositiveError> {
    let n = inc.n();
    check_cap(n, cap.min(limits::POSITIVE_ENUMERATION.ceiling))?;
    if let FeasibilityOutcome::Certificate(y) = pos_extendable(inc)? {
        return Err(PositiveError::NotExtendable(Obstruction::Certificate(y)));
    }
    let p = Patterns::full(inc);
    let coalitions: Vec<Coalition> = coalition::all(n).collect();
    let bounds: Vec<(Rational, Option<Rational>)> = coalitions
        .par_iter()
        .map(|&s| {
            if let Some(v) = inc.value(s) {
                return (v.clone(), Some(v.clone()));
            }
            let lo = extremum(&p, s, Direction::Minimize).expect("minimum of a nonnegative sum");
            // A coalition outside every known set can carry any dividend.
            let free = p.uncovered.iter().any(|t| t.is_subset_of(s));
            let hi = if free { None } else { extremum(&p, s, Direction::Maximize) };
            (lo, hi)
        })
        .collect();
    let (lower, upper) = bounds.into_iter().unzip();
    Ok(Envelope { n, lower, upper })
}
