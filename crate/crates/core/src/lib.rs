//! Exact analysis of partially defined cooperative games with transferable
//! utility.
//!
//! A partially defined (incomplete) game knows the worth of only some
//! coalitions. This crate decides whether such a game can be completed into a
//! convex or a positive (totally monotonic) game, computes the lower and upper
//! games of those completions, enumerates their extreme games and produces
//! Farkas certificates when no completion exists.
//!
//! All arithmetic is exact: values are arbitrary-precision rationals and every
//! decision is an exact comparison.
//!
//! Module map:
//!
//! * [`coalition`] and [`game`]: complete games, Harsanyi dividends (Möbius
//!   transform) and class predicates.
//! * [`incomplete`]: incomplete games, extensions, chains, lattice closure
//!   and interval hulls.
//! * [`symmetric_convex`]: symmetric convex extensions on reduced
//!   (size-indexed) forms.
//! * [`positive`]: positive extensions, certificates, extreme games and the
//!   closed-form special structures.
//! * [`lp`]: the exact rational simplex and vertex enumeration used as
//!   plumbing and as an independent oracle.

pub mod coalition;
pub mod game;
pub mod incomplete;
pub mod limits;
pub mod lp;
pub mod positive;
pub mod rational;
pub mod symmetric_convex;

pub use coalition::Coalition;
pub use game::{
    classify, inverse_mobius, midpoint_check, mobius, reduce_symmetric, ClassReport, DividendVector, Game, GameError,
    MidpointViolation, ReducedSymmetric, Violation,
};
pub use incomplete::{
    chain_convex_extension, interval_hull, is_extension, lattice_closure, reduce_partially_symmetric, IncompleteError,
    IncompleteGame, IntervalGame, ReducedIncomplete,
};
pub use rational::Rational;
