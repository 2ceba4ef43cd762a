//! Closed forms for two structures of the known coalitions.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use super::{game_from_dividends, BalancedCollection, Dividends, Obstruction, PositiveError};
use crate::coalition::{self, Coalition};
use crate::game::{inverse_mobius, DividendVector, Game};
use crate::incomplete::IncompleteGame;
use crate::rational::Rational;

/// Known coalitions `∅, S_1, …, S_{k-1}, N` with the `S_i` pairwise disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointCase {
    pub parts: Vec<(Coalition, Rational)>,
    /// `v(N) - Σ v(S_i)`, the dividend left for a coalition inside no part.
    pub slack: Rational,
    pub lower: Game,
    pub upper: Game,
}

impl DisjointCase {
    /// Each extreme game puts `v(S_i)` on one nonempty `T_i ⊆ S_i` (parts of
    /// worth 0 get nothing) and the slack, when positive, on one nonempty
    /// `T_N` contained in no part.
    pub fn collections(&self) -> Vec<BalancedCollection> {
        let n = self.lower.n();
        let mut slots: Vec<(Vec<Coalition>, Rational)> = self
            .parts
            .iter()
            .filter(|(_, v)| v.is_positive())
            .map(|(s, v)| (s.subsets().filter(|t| !t.is_empty()).collect(), v.clone()))
            .collect();
        if self.slack.is_positive() {
            let outside =
                coalition::all(n).skip(1).filter(|t| self.parts.iter().all(|(s, _)| !t.is_subset_of(*s))).collect();
            slots.push((outside, self.slack.clone()));
        }
        let picks: Vec<Vec<Coalition>> = if slots.is_empty() {
            vec![Vec::new()]
        } else {
            slots.iter().map(|(c, _)| c.iter().copied()).multi_cartesian_product().collect()
        };
        picks
            .into_iter()
            .map(|pick| BalancedCollection {
                dividends: pick.into_iter().zip(slots.iter().map(|(_, v)| v.clone())).collect(),
            })
            .collect()
    }

    pub fn extreme_games(&self) -> Vec<Game> {
        let n = self.lower.n();
        self.collections().iter().map(|c| game_from_dividends(n, &c.dividends)).collect()
    }
}

fn disjoint_parts(inc: &IncompleteGame) -> Result<Vec<(Coalition, Rational)>, PositiveError> {
    let grand = inc.grand();
    if !inc.is_known(grand) {
        return Err(PositiveError::StructureMismatch("the grand coalition is not known".into()));
    }
    let parts: Vec<(Coalition, Rational)> =
        inc.entries().filter(|(s, _)| !s.is_empty() && *s != grand).map(|(s, v)| (s, v.clone())).collect();
    for (i, (a, _)) in parts.iter().enumerate() {
        if let Some((b, _)) = parts[i + 1..].iter().find(|(b, _)| !a.is_disjoint(*b)) {
            return Err(PositiveError::StructureMismatch(format!("{a} and {b} overlap")));
        }
    }
    Ok(parts)
}

pub fn pos_disjoint_case(inc: &IncompleteGame) -> Result<DisjointCase, PositiveError> {
    let parts = disjoint_parts(inc)?;
    let n = inc.n();
    let grand = inc.grand();
    if let Some((s, v)) = parts.iter().find(|(_, v)| v.is_negative()) {
        return Err(PositiveError::NotExtendable(Obstruction::NegativeValue { coalition: *s, value: v.clone() }));
    }
    let required: Rational = parts.iter().map(|(_, v)| v.clone()).sum();
    let vn = inc.value(grand).unwrap().clone();
    if vn < required {
        return Err(PositiveError::NotExtendable(Obstruction::Deficit {
            grand: Box::new(vn),
            required: Box::new(required),
        }));
    }
    let slack = &vn - &required;

    let lower = Game::from_fn(n, |s| {
        if s == grand {
            vn.clone()
        } else {
            parts.iter().filter(|(p, _)| p.is_subset_of(s)).map(|(_, v)| v.clone()).sum()
        }
    })
    .expect("player count already validated");
    let upper = Game::from_fn(n, |s| {
        if s.is_empty() {
            return Rational::zero();
        }
        if let Some((_, v)) = parts.iter().find(|(p, _)| s.is_subset_of(*p)) {
            return v.clone();
        }
        let untouched: Rational = parts.iter().filter(|(p, _)| p.is_disjoint(s)).map(|(_, v)| v.clone()).sum();
        &vn - untouched
    })
    .expect("player count already validated");
    Ok(DisjointCase { parts, slack, lower, upper })
}

/// `N` known and every other known coalition has all its subsets known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DownClosedCase {
    /// Dividends forced on the known coalitions other than `∅` and `N`.
    pub delta: BTreeMap<Coalition, Rational>,
    /// What remains for a single unknown coalition (or `N`) to carry.
    pub delta_grand: Rational,
    pub lower: Game,
    pub upper: Game,
}

impl DownClosedCase {
    /// Nonempty coalitions that may carry the remaining dividend: those not
    /// known below `N`. Empty when nothing remains.
    pub fn carriers(&self) -> Vec<Coalition> {
        if self.delta_grand.is_zero() {
            return Vec::new();
        }
        let n = self.lower.n();
        coalition::all(n).skip(1).filter(|c| !self.delta.contains_key(c)).collect()
    }

    pub fn collections(&self) -> Vec<BalancedCollection> {
        let forced: Dividends =
            self.delta.iter().filter(|(_, d)| d.is_positive()).map(|(s, d)| (*s, d.clone())).collect();
        let carriers = self.carriers();
        if carriers.is_empty() {
            return vec![BalancedCollection { dividends: forced }];
        }
        carriers
            .into_iter()
            .map(|c| {
                let mut dividends = forced.clone();
                dividends.insert(c, self.delta_grand.clone());
                BalancedCollection { dividends }
            })
            .collect()
    }

    pub fn extreme_games(&self) -> Vec<Game> {
        let n = self.lower.n();
        self.collections().iter().map(|c| game_from_dividends(n, &c.dividends)).collect()
    }
}

pub fn pos_downclosed_case(inc: &IncompleteGame) -> Result<DownClosedCase, PositiveError> {
    let n = inc.n();
    let grand = inc.grand();
    if !inc.is_known(grand) {
        return Err(PositiveError::StructureMismatch("the grand coalition is not known".into()));
    }
    for s in inc.known().filter(|s| *s != grand) {
        if let Some(t) = s.subsets().find(|t| !inc.is_known(*t)) {
            return Err(PositiveError::StructureMismatch(format!("{t} is unknown but {s} is known")));
        }
    }

    // Möbius inversion on the known coalitions below N.
    let mut d = vec![Rational::zero(); 1 << n];
    let mut order: Vec<Coalition> = inc.known_nonempty().filter(|s| *s != grand).collect();
    coalition::sort_for_display(&mut order);
    let mut delta = BTreeMap::new();
    for &s in &order {
        let below: Rational = s.subsets().filter(|t| *t != s).map(|t| d[t.index()].clone()).sum();
        let ds = inc.value(s).unwrap() - below;
        d[s.index()] = ds.clone();
        delta.insert(s, ds);
    }
    if let Some(&s) = order.iter().find(|s| delta[*s].is_negative()) {
        return Err(PositiveError::NotExtendable(Obstruction::NegativeDividend {
            coalition: s,
            dividend: delta[&s].clone(),
        }));
    }
    let base = inverse_mobius(&DividendVector::new(n, d).expect("length 2^n"));
    let delta_grand = inc.value(grand).unwrap() - base.value(grand);
    if delta_grand.is_negative() {
        return Err(PositiveError::NotExtendable(Obstruction::NegativeDividend {
            coalition: grand,
            dividend: delta_grand,
        }));
    }
    let lower =
        Game::from_fn(n, |s| if s == grand { inc.value(grand).unwrap().clone() } else { base.value(s).clone() })
            .expect("player count already validated");
    let upper = Game::from_fn(n, |s| match inc.value(s) {
        Some(v) => v.clone(),
        None => base.value(s) + &delta_grand,
    })
    .expect("player count already validated");
    Ok(DownClosedCase { delta, delta_grand, lower, upper })
}
