//! Browser bindings. Each call runs one `pdcg` subcommand on game-file text
//! and returns the report the command line would print.

use pdcg_cli::commands::{self, Input, Options, Outcome, PositiveFlags, SymconvFlags};
use pdcg_cli::gamefile::GameFile;
use pdcg_core::{rational, ReducedIncomplete};
use wasm_bindgen::prelude::*;

/// Exit code and both output streams of one run.
#[wasm_bindgen]
pub struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

#[wasm_bindgen]
impl Run {
    #[wasm_bindgen(getter)]
    pub fn code(&self) -> i32 {
        self.code
    }

    #[wasm_bindgen(getter)]
    pub fn stdout(&self) -> String {
        self.stdout.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn stderr(&self) -> String {
        self.stderr.clone()
    }
}

impl From<Outcome> for Run {
    fn from(o: Outcome) -> Self {
        Run { code: o.code, stdout: o.stdout, stderr: o.stderr }
    }
}

fn input(text: &str) -> Input {
    Input { name: "input".into(), text: text.into() }
}

fn options(machine: bool) -> Options {
    Options { machine, max_n: None }
}

/// Class flags and witnesses of a complete game.
#[wasm_bindgen]
pub fn classify(text: &str, machine: bool) -> Run {
    commands::classify_cmd(&input(text), &options(machine)).into()
}

/// Positive extendability, with an optional certificate, extreme games and
/// lower and upper games.
#[wasm_bindgen]
pub fn positive(text: &str, certificate: bool, extremes: bool, bounds: bool, machine: bool) -> Run {
    let flags = PositiveFlags { certificate, extremes, bounds, symmetric: false };
    commands::positive_cmd(&input(text), flags, &options(machine)).into()
}

/// Symmetric convex extensions: extendability, bounds and extreme games.
#[wasm_bindgen]
pub fn symconv(text: &str, bounds: bool, extremes: bool, machine: bool) -> Run {
    commands::symconv_cmd(&input(text), SymconvFlags { bounds, extremes }, None, &options(machine)).into()
}

/// Game file of the partially symmetric game with `n` players whose known
/// sizes are given as `size:value` pairs, e.g. `2:2 4:8`.
#[wasm_bindgen]
pub fn symmetric_game_file(n: usize, sizes: &str) -> Result<String, String> {
    let mut entries = Vec::new();
    for pair in sizes.split(|c: char| c.is_whitespace() || c == ',').filter(|p| !p.is_empty()) {
        let (k, v) = pair.split_once(':').ok_or_else(|| format!("expected size:value, got {pair:?}"))?;
        let k: usize = k.trim().parse().map_err(|_| format!("bad size {k:?}"))?;
        let v = rational::parse(v.trim()).map_err(|e| format!("{pair}: {e}"))?;
        entries.push((k, v));
    }
    let reduced = ReducedIncomplete::new(n, entries).map_err(|e| e.to_string())?;
    let inc = reduced.to_incomplete().map_err(|e| e.to_string())?;
    Ok(GameFile::from_incomplete(&inc).render())
}
