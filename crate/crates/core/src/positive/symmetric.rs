//! Symmetric positive extensions.
//!
//! A symmetric positive game has one dividend `d_t >= 0` per size, and
//! `s(m) = Σ_t C(m,t) d_t`.

use num_traits::{Signed, Zero};

use super::special::pos_downclosed_case;
use super::{Obstruction, PositiveError};
use crate::coalition::{self, Coalition};
use crate::game::Game;
use crate::incomplete::{reduce_partially_symmetric, IncompleteGame, ReducedIncomplete};
use crate::lp::{optimize, solve_feasibility, Direction, LinearSystem, LpOutcome};
use crate::rational::{binomial, Rational};

/// Size-indexed bounds; `upper[m]` is `None` where `s(m)` has no maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeEnvelope {
    pub lower: Vec<Rational>,
    pub upper: Vec<Option<Rational>>,
}

/// `Σ_t C(k,t) d_t = σ(k)` for known `k >= 1`; variable `t - 1` is `d_t`.
pub fn sp_system(r: &ReducedIncomplete) -> LinearSystem {
    let n = r.n();
    let mut sys = LinearSystem::new(n);
    for (k, v) in r.entries().filter(|(k, _)| *k > 0) {
        sys.add_eq(size_row(n, k), v.clone());
    }
    sys
}

fn size_row(n: usize, m: usize) -> Vec<Rational> {
    (1..=n).map(|t| binomial(m, t)).collect()
}

/// Exact per-size minimum and maximum over symmetric positive extensions.
pub fn sp_per_coalition_bounds(r: &ReducedIncomplete) -> Result<SizeEnvelope, PositiveError> {
    let sys = sp_system(r);
    if let LpOutcome::Infeasible(cert) = solve_feasibility(&sys) {
        return Err(PositiveError::NotExtendable(Obstruction::SizeSystem(cert)));
    }
    let mut lower = vec![Rational::zero()];
    let mut upper = vec![Some(Rational::zero())];
    for m in 1..=r.n() {
        if let Some(v) = r.sigma(m) {
            lower.push(v.clone());
            upper.push(Some(v.clone()));
            continue;
        }
        let objective = size_row(r.n(), m);
        match optimize(&sys, &objective, Direction::Minimize) {
            LpOutcome::Optimal { value, .. } => lower.push(value),
            other => unreachable!("minimum of a nonnegative sum: {other:?}"),
        }
        upper.push(optimize(&sys, &objective, Direction::Maximize).value().cloned());
    }
    Ok(SizeEnvelope { lower, upper })
}

/// Per-size dividends `d_t = Σ_j (-1)^(t-j) C(t,j) s(j)`.
pub fn size_dividends(s: &[Rational]) -> Vec<Rational> {
    (0..s.len())
        .map(|t| {
            (0..=t)
                .map(|j| {
                    let term = binomial(t, j) * &s[j];
                    if (t - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}

/// The pointwise lower game of symmetric positive extensions and its size
/// dividends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerGameReport {
    pub lower: Vec<Rational>,
    pub dividends: Vec<Rational>,
    /// Smallest size with a negative dividend.
    pub first_negative: Option<usize>,
}

impl LowerGameReport {
    pub fn is_positive(&self) -> bool {
        self.first_negative.is_none()
    }
}

pub fn lower_game_positivity_regression(r: &ReducedIncomplete) -> Result<LowerGameReport, PositiveError> {
    let env = sp_per_coalition_bounds(r)?;
    let dividends = size_dividends(&env.lower);
    let first_negative = dividends.iter().position(Signed::is_negative);
    Ok(LowerGameReport { lower: env.lower, dividends, first_negative })
}

/// Bounds when every coalition of size at most `k` is known, along with `N`.
///
/// With `Γ` the worth of size `k`, unknown coalitions get `Γ` below and `v(N)`
/// above. Symmetric positive games are monotone, so every extension lies
/// between them; the bounds are not tight in general.
pub fn pos_symmetric_prefix_bounds(inc: &IncompleteGame, k: usize) -> Result<(Game, Game), PositiveError> {
    let n = inc.n();
    if k >= n {
        return Err(PositiveError::StructureMismatch(format!("prefix size {k} must be below n = {n}")));
    }
    let grand = inc.grand();
    let expected = |s: Coalition| s.len() <= k || s == grand;
    if let Some(s) = coalition::all(n).find(|s| expected(*s) != inc.is_known(*s)) {
        let what = if inc.is_known(s) { "unexpectedly known" } else { "missing" };
        return Err(PositiveError::StructureMismatch(format!("{s} is {what}")));
    }
    let r = reduce_partially_symmetric(inc).map_err(|e| PositiveError::StructureMismatch(e.to_string()))?;
    pos_downclosed_case(inc)?;
    let gamma = r.sigma(k).cloned().unwrap_or_else(Rational::zero);
    let vn = r.sigma(n).unwrap().clone();
    let pick = |s: Coalition, fallback: &Rational| match inc.value(s) {
        Some(v) => v.clone(),
        None => fallback.clone(),
    };
    let lower = Game::from_fn(n, |s| pick(s, &gamma)).expect("player count already validated");
    let upper = Game::from_fn(n, |s| pick(s, &vn)).expect("player count already validated");
    debug_assert!(lower.values().iter().zip(upper.values()).all(|(a, b)| a <= b));
    Ok((lower, upper))
}
