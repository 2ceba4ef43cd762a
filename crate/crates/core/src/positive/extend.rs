//! Deciding positive extendability.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use super::patterns::Patterns;
use super::{check_cap, Obstruction, PositiveError};
use crate::coalition::{self, Coalition};
use crate::game::DividendVector;
use crate::incomplete::IncompleteGame;
use crate::limits;
use crate::lp::{solve_feasibility, LinearSystem, LpOutcome};
use crate::rational::Rational;

/// `y` on the nonempty known coalitions with
/// `Σ_{S∈K, T⊆S} y(S) >= 0` for every nonempty `T` and `Σ v(S) y(S) <= -1`.
///
/// Any nonnegative dividends `d` extending `v` would give
/// `Σ v(S) y(S) = Σ_T d(T) Σ_{S⊇T} y(S) >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualCertificate {
    pub y: BTreeMap<Coalition, Rational>,
    values: BTreeMap<Coalition, Rational>,
}

impl DualCertificate {
    /// `Σ v(S) y(S)`.
    pub fn objective_sum(&self) -> Rational {
        self.y.iter().map(|(s, y)| y * &self.values[s]).sum()
    }

    /// `Σ_{S∈K, T⊆S} y(S)`.
    pub fn row(&self, t: Coalition) -> Rational {
        self.y.iter().filter(|(s, _)| t.is_subset_of(**s)).map(|(_, y)| y.clone()).sum()
    }

    /// Checks every dual row and the objective against `inc`.
    pub fn verify(&self, inc: &IncompleteGame) -> bool {
        let known: Vec<Coalition> = inc.known_nonempty().collect();
        if self.y.keys().ne(known.iter()) {
            return false;
        }
        if known.iter().any(|s| inc.value(*s) != self.values.get(s)) {
            return false;
        }
        // Coalitions outside every known set have an empty row.
        let rows_ok = covered(inc).into_iter().all(|t| !self.row(t).is_negative());
        rows_ok && self.objective_sum() <= -Rational::from_integer(1.into())
    }
}

fn covered(inc: &IncompleteGame) -> Vec<Coalition> {
    let mut seen = vec![false; 1 << inc.n()];
    let mut out = Vec::new();
    for s in inc.known_nonempty() {
        for t in s.subsets().filter(|t| !t.is_empty()) {
            if !std::mem::replace(&mut seen[t.index()], true) {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityOutcome {
    /// Nonnegative dividends of one positive extension.
    Witness(DividendVector),
    Certificate(DualCertificate),
}

impl FeasibilityOutcome {
    pub fn is_extendable(&self) -> bool {
        matches!(self, FeasibilityOutcome::Witness(_))
    }

    pub fn verify(&self, inc: &IncompleteGame) -> bool {
        match self {
            FeasibilityOutcome::Witness(d) => witness_ok(d, inc),
            FeasibilityOutcome::Certificate(y) => y.verify(inc),
        }
    }
}

fn witness_ok(d: &DividendVector, inc: &IncompleteGame) -> bool {
    d.n() == inc.n()
        && d.is_nonnegative()
        && inc.entries().all(|(s, v)| s.subsets().map(|t| d.get(t)).fold(Rational::zero(), |a, x| a + x) == *v)
}

/// Solves the pattern-aggregated dividend system.
fn decide(inc: &IncompleteGame, p: &Patterns) -> FeasibilityOutcome {
    let mut sys = LinearSystem::new(p.groups.len());
    for (r, v) in p.values.iter().enumerate() {
        let row = p.groups.iter().map(|g| Rational::from_integer(i32::from(g.has(r)).into())).collect();
        sys.add_eq(row, v.clone());
    }
    let outcome = match solve_feasibility(&sys) {
        LpOutcome::Feasible(x) => {
            let mut d = vec![Rational::zero(); 1 << inc.n()];
            for (g, x) in p.groups.iter().zip(x) {
                d[g.rep().index()] = x;
            }
            FeasibilityOutcome::Witness(DividendVector::new(inc.n(), d).expect("length 2^n"))
        }
        LpOutcome::Infeasible(cert) => {
            let (_, rhs) = cert.combination(&sys);
            let y = p.rows.iter().zip(&cert.equality).map(|(s, l)| (*s, -l / &rhs)).collect();
            let values = p.rows.iter().zip(&p.values).map(|(s, v)| (*s, v.clone())).collect();
            FeasibilityOutcome::Certificate(DualCertificate { y, values })
        }
        other => unreachable!("feasibility solve returned {other:?}"),
    };
    assert!(outcome.verify(inc), "positive extendability outcome failed verification");
    outcome
}

/// Finds nonnegative dividends extending `inc`, or a dual certificate that
/// none exist. Uses the default player cap.
pub fn pos_extendable(inc: &IncompleteGame) -> Result<FeasibilityOutcome, PositiveError> {
    pos_extendable_capped(inc, limits::POSITIVE_GENERAL.default)
}

pub fn pos_extendable_capped(inc: &IncompleteGame, cap: usize) -> Result<FeasibilityOutcome, PositiveError> {
    check_cap(inc.n(), cap.min(limits::POSITIVE_GENERAL.ceiling))?;
    Ok(decide(inc, &Patterns::covered(inc)))
}

/// Same decision when every known coalition has at most `c` players; only
/// coalitions of size `<= c` are inspected.
pub fn pos_extendable_bounded_size(inc: &IncompleteGame, c: usize) -> Result<FeasibilityOutcome, PositiveError> {
    if let Some(s) = inc.known().find(|s| s.len() > c) {
        return Err(PositiveError::SizeBoundViolated { coalition: s, bound: c });
    }
    check_cap(inc.n(), limits::POSITIVE_GENERAL.ceiling)?;
    Ok(decide(inc, &Patterns::up_to_size(inc, c)))
}

/// Bounded iff `N` is known; fails when there is no positive extension.
pub fn pos_bounded(inc: &IncompleteGame) -> Result<bool, PositiveError> {
    match pos_extendable(inc)? {
        FeasibilityOutcome::Witness(_) => Ok(inc.is_known(inc.grand())),
        FeasibilityOutcome::Certificate(y) => Err(PositiveError::NotExtendable(Obstruction::Certificate(y))),
    }
}

/// `Σ_{T⊆S} d(T) = v(S)` for nonempty known `S`, one nonnegative variable
/// per nonempty coalition in canonical order.
pub fn dividend_system(inc: &IncompleteGame) -> LinearSystem {
    let width = (1usize << inc.n()) - 1;
    let mut sys = LinearSystem::new(width);
    for (s, v) in inc.entries().filter(|(s, _)| !s.is_empty()) {
        let row = coalition::all(inc.n())
            .skip(1)
            .map(|t| Rational::from_integer(i32::from(t.is_subset_of(s)).into()))
            .collect();
        sys.add_eq(row, v.clone());
    }
    sys
}
