//! Library side of the `pdcg` command-line tool: game-file parsing, the
//! subcommands and their reports.

pub mod commands;
pub mod gamefile;
pub mod report;
