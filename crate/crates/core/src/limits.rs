//! Size caps for the exponential code paths.
//!
//! Each cap has a default and a hard ceiling. Callers (the CLI reads
//! `PDCG_MAX_N`) may raise a cap up to its ceiling, never beyond.

use crate::coalition::MAX_PLAYERS;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cap {
    pub default: usize,
    pub ceiling: usize,
}

impl Cap {
    /// Effective cap for an optional override.
    pub fn resolve(self, requested: Option<usize>) -> usize {
        requested.unwrap_or(self.default).min(self.ceiling)
    }
}

/// Complete games (classification, transforms).
pub const COMPLETE: Cap = Cap { default: MAX_PLAYERS, ceiling: MAX_PLAYERS };

/// General positive extendability on the deduplicated dual system.
pub const POSITIVE_GENERAL: Cap = Cap { default: 16, ceiling: 20 };

/// Extreme-game enumeration and per-coalition LP envelopes.
pub const POSITIVE_ENUMERATION: Cap = Cap { default: 5, ceiling: 7 };

/// Name of the environment variable the CLI honours.
pub const ENV_VAR: &str = "PDCG_MAX_N";
