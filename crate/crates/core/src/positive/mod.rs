//! Positive (totally monotonic) extensions of incomplete games.
//!
//! A positive extension is fixed by nonnegative dividends `d` with
//! `Σ_{T⊆S} d(T) = v(S)` for every known `S`. The columns of that system only
//! depend on which known coalitions contain `T`, so most routines group
//! coalitions by that membership pattern first.

mod envelope;
mod extend;
mod extremes;
mod patterns;
mod special;
mod symmetric;

use std::collections::BTreeMap;
use std::fmt;

use crate::coalition::Coalition;
use crate::game::Game;
use crate::lp::FarkasCertificate;
use crate::rational::{format, Rational};

pub use envelope::{pos_envelope, pos_envelope_capped, Envelope};
pub use extend::{
    dividend_system, pos_bounded, pos_extendable, pos_extendable_bounded_size, pos_extendable_capped, DualCertificate,
    FeasibilityOutcome,
};
pub use extremes::{pos_extreme_games, pos_extreme_games_capped, BalancedCollection, Extreme, PositiveExtremeSet};
pub use special::{pos_disjoint_case, pos_downclosed_case, DisjointCase, DownClosedCase};
pub use symmetric::{
    lower_game_positivity_regression, pos_symmetric_prefix_bounds, size_dividends, sp_per_coalition_bounds, sp_system,
    LowerGameReport, SizeEnvelope,
};

/// Why no positive extension exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// Dual vector from the general system.
    Certificate(DualCertificate),
    /// Farkas multipliers for the size-dividend system of a symmetric game.
    SizeSystem(FarkasCertificate),
    /// Known disjoint coalitions ask for more than the grand coalition holds.
    Deficit { grand: Box<Rational>, required: Box<Rational> },
    /// A known coalition whose subsets' dividends must sum to a negative value.
    NegativeValue { coalition: Coalition, value: Rational },
    /// A dividend forced by the known values is negative.
    NegativeDividend { coalition: Coalition, dividend: Rational },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::Certificate(y) => {
                write!(f, "dual certificate with objective {}", format(&y.objective_sum()))
            }
            Obstruction::SizeSystem(_) => write!(f, "size-dividend system has no nonnegative solution"),
            Obstruction::Deficit { grand, required } => {
                write!(f, "v(N) = {} < {} = sum of the known parts", format(grand), format(required))
            }
            Obstruction::NegativeValue { coalition, value } => {
                write!(f, "known value v({coalition}) = {} is negative", format(value))
            }
            Obstruction::NegativeDividend { coalition, dividend } => {
                write!(f, "forced dividend d({coalition}) = {} < 0", format(dividend))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PositiveError {
    #[error("{n} players exceeds the cap of {cap} for this operation")]
    TooManyPlayers { n: usize, cap: usize },
    #[error("coalition {coalition} is larger than the size bound {bound}")]
    SizeBoundViolated { coalition: Coalition, bound: usize },
    #[error("not extendable: {0}")]
    NotExtendable(Obstruction),
    #[error("the set of positive extensions is unbounded")]
    Unbounded,
    #[error("known coalitions do not have the required structure: {0}")]
    StructureMismatch(String),
    #[error("enumeration exceeded its work limit of {0} steps")]
    TooLarge(u64),
}

/// Dividends on a support; every listed dividend is strictly positive.
pub type Dividends = BTreeMap<Coalition, Rational>;

/// The game with the given dividends.
pub(crate) fn game_from_dividends(n: usize, dividends: &Dividends) -> Game {
    Game::from_fn(n, |s| dividends.iter().filter(|(t, _)| t.is_subset_of(s)).map(|(_, d)| d.clone()).sum())
        .expect("player count already validated")
}

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<(), PositiveError> {
    if n > cap {
        Err(PositiveError::TooManyPlayers { n, cap })
    } else {
        Ok(())
    }
}
