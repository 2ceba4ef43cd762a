//! Game files.
//!
//! The line format has one directive or entry per line:
//!
//! ```text
//! # comment
//! players 3
//! kind complete
//! {} 0
//! {1,2} 4
//! {1,2,3} 7/2
//! ```
//!
//! A JSON document with the same fields (`players`, optional `kind`,
//! `entries` of `{"coalition": [1, 2], "value": "4"}`) is accepted too; it
//! is what `--machine` output embeds.

use std::fmt;

use pdcg_core::coalition::{self, Coalition, MAX_PLAYERS};
use pdcg_core::rational::{self, Rational};
use pdcg_core::{Game, IncompleteGame};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Complete,
    Incomplete,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameFile {
    pub n: usize,
    pub kind: Option<Kind>,
    /// Includes `∅`, in the order read.
    pub entries: Vec<(Coalition, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub file: GameFile,
    pub warnings: Vec<String>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    if text.trim_start().starts_with('{') {
        if let Ok(doc) = serde_json::from_str::<JsonGameFile>(text) {
            return from_json(doc, text);
        }
        // Also report JSON syntax errors for documents that look like JSON.
        if text.trim_start().starts_with("{\"") || text.trim_start().starts_with("{\n") {
            let e = serde_json::from_str::<JsonGameFile>(text).unwrap_err();
            return Err(err(e.line(), e.column(), e.to_string()));
        }
    }
    parse_lines(text)
}

struct Pending {
    n: Option<usize>,
    kind: Option<(Kind, usize)>,
    entries: Vec<(Coalition, Rational, usize)>,
}

fn parse_lines(text: &str) -> Result<Parsed, ParseError> {
    let mut p = Pending { n: None, kind: None, entries: Vec::new() };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        if body.is_empty() {
            continue;
        }
        let col = indent + 1;
        if let Some(rest) = body.strip_prefix("players") {
            if p.n.is_some() {
                return Err(err(line, col, "duplicate players directive"));
            }
            if !p.entries.is_empty() {
                return Err(err(line, col, "players must come before the entries"));
            }
            let word = rest.trim();
            let at = col + body.len() - word.len();
            let n: usize = word.parse().map_err(|_| err(line, at, format!("invalid player count {word:?}")))?;
            if n > MAX_PLAYERS {
                return Err(err(line, at, format!("{n} players exceeds the limit of {MAX_PLAYERS}")));
            }
            p.n = Some(n);
        } else if let Some(rest) = body.strip_prefix("kind") {
            if p.kind.is_some() {
                return Err(err(line, col, "duplicate kind directive"));
            }
            let word = rest.trim();
            let at = col + body.len() - word.len();
            let kind = match word {
                "complete" => Kind::Complete,
                "incomplete" => Kind::Incomplete,
                _ => return Err(err(line, at, format!("kind must be complete or incomplete, got {word:?}"))),
            };
            p.kind = Some((kind, line));
        } else if body.starts_with('{') {
            let n = p.n.ok_or_else(|| err(line, col, "players directive missing before the first entry"))?;
            let (s, value) = parse_entry(body, n, line, col)?;
            p.entries.push((s, value, line));
        } else {
            let word = body.split_whitespace().next().unwrap_or(body);
            return Err(err(line, col, format!("unexpected {word:?}")));
        }
    }
    let n = p.n.ok_or_else(|| err(text.lines().count().max(1), 1, "players directive missing"))?;
    finish(n, p.kind, p.entries)
}

fn parse_entry(body: &str, n: usize, line: usize, col: usize) -> Result<(Coalition, Rational), ParseError> {
    let close = body.find('}').ok_or_else(|| err(line, col, "unterminated coalition"))?;
    let inner = &body[1..close];
    let mut s = Coalition::EMPTY;
    let mut offset = 1;
    for part in inner.split(',') {
        let trimmed = part.trim();
        let at = col + offset + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        if trimmed.is_empty() {
            if inner.trim().is_empty() {
                break;
            }
            return Err(err(line, at, "empty player in coalition"));
        }
        let player: usize = trimmed.parse().map_err(|_| err(line, at, format!("invalid player {trimmed:?}")))?;
        if player == 0 || player > n {
            return Err(err(line, at, format!("player {player} is outside 1..={n}")));
        }
        if s.contains(player) {
            return Err(err(line, at, format!("player {player} repeated")));
        }
        s = s.with(player);
    }
    let rest = &body[close + 1..];
    let word = rest.trim();
    let at = col + close + 1 + (rest.len() - rest.trim_start().len());
    if word.is_empty() {
        return Err(err(line, at, format!("missing value for {s}")));
    }
    if word.split_whitespace().count() > 1 {
        return Err(err(line, at, format!("expected one value, got {word:?}")));
    }
    let value = rational::parse(word).map_err(|e| err(line, at, e.to_string()))?;
    Ok((s, value))
}

fn finish(
    n: usize,
    kind: Option<(Kind, usize)>,
    mut entries: Vec<(Coalition, Rational, usize)>,
) -> Result<Parsed, ParseError> {
    let mut seen = vec![false; 1 << n];
    for (s, v, line) in &entries {
        if std::mem::replace(&mut seen[s.index()], true) {
            return Err(err(*line, 1, format!("coalition {s} listed twice")));
        }
        if s.is_empty() && !num_traits::Zero::is_zero(v) {
            return Err(err(*line, 1, format!("v({{}}) must be 0, got {}", rational::format(v))));
        }
    }
    let mut warnings = Vec::new();
    if !seen[0] {
        warnings.push("{} not listed; using v({}) = 0".to_string());
        entries.insert(0, (Coalition::EMPTY, Rational::from_integer(0.into()), 0));
        seen[0] = true;
    }
    if let Some((Kind::Complete, line)) = kind {
        if let Some(missing) = display_order(n).into_iter().find(|s| !seen[s.index()]) {
            return Err(err(line, 1, format!("kind complete but {missing} is missing")));
        }
    }
    let file = GameFile { n, kind: kind.map(|k| k.0), entries: entries.into_iter().map(|(s, v, _)| (s, v)).collect() };
    Ok(Parsed { file, warnings })
}

fn display_order(n: usize) -> Vec<Coalition> {
    let mut all: Vec<Coalition> = coalition::all(n).collect();
    coalition::sort_for_display(&mut all);
    all
}

impl GameFile {
    pub fn from_game(g: &Game) -> Self {
        let entries = display_order(g.n()).into_iter().map(|s| (s, g.value(s).clone())).collect();
        GameFile { n: g.n(), kind: Some(Kind::Complete), entries }
    }

    pub fn from_incomplete(inc: &IncompleteGame) -> Self {
        let entries = display_order(inc.n()).into_iter().filter_map(|s| inc.value(s).map(|v| (s, v.clone()))).collect();
        GameFile { n: inc.n(), kind: Some(Kind::Incomplete), entries }
    }

    /// The complete game, or the first missing coalition in display order.
    pub fn to_game(&self) -> Result<Game, Coalition> {
        let mut values: Vec<Option<Rational>> = vec![None; 1 << self.n];
        for (s, v) in &self.entries {
            values[s.index()] = Some(v.clone());
        }
        if let Some(s) = display_order(self.n).into_iter().find(|s| values[s.index()].is_none()) {
            return Err(s);
        }
        Ok(Game::new(self.n, values.into_iter().map(Option::unwrap).collect()).expect("validated while parsing"))
    }

    pub fn to_incomplete(&self) -> IncompleteGame {
        IncompleteGame::new(self.n, self.entries.iter().cloned()).expect("validated while parsing")
    }

    /// The line format, entries in display order.
    pub fn render(&self) -> String {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| a.0.display_cmp(&b.0));
        let mut out = format!("players {}\n", self.n);
        if let Some(kind) = self.kind {
            out.push_str(match kind {
                Kind::Complete => "kind complete\n",
                Kind::Incomplete => "kind incomplete\n",
            });
        }
        for (s, v) in entries {
            out.push_str(&format!("{s} {}\n", rational::format(&v)));
        }
        out
    }

    pub fn to_json(&self) -> JsonGameFile {
        let mut entries = self.entries.clone();
        entries.sort_by(|a, b| a.0.display_cmp(&b.0));
        JsonGameFile {
            players: self.n,
            kind: self.kind,
            entries: entries.iter().map(|(s, v)| JsonEntry::new(*s, v)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonGameFile {
    pub players: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    pub entries: Vec<JsonEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonEntry {
    pub coalition: Vec<usize>,
    pub value: String,
}

impl JsonEntry {
    pub fn new(s: Coalition, v: &Rational) -> Self {
        JsonEntry { coalition: s.players().collect(), value: rational::format(v) }
    }
}

fn from_json(doc: JsonGameFile, text: &str) -> Result<Parsed, ParseError> {
    // Locations point at the entry's coalition key, counted in document order.
    let mut positions = text.match_indices("\"coalition\"").map(|(at, _)| {
        let before = &text[..at];
        let line = before.matches('\n').count() + 1;
        let column = at - before.rfind('\n').map_or(0, |i| i + 1) + 1;
        (line, column)
    });
    let n = doc.players;
    if n > MAX_PLAYERS {
        return Err(err(1, 1, format!("{n} players exceeds the limit of {MAX_PLAYERS}")));
    }
    let mut entries = Vec::with_capacity(doc.entries.len());
    for e in doc.entries {
        let (line, column) = positions.next().unwrap_or((1, 1));
        let mut s = Coalition::EMPTY;
        for &player in &e.coalition {
            if player == 0 || player > n {
                return Err(err(line, column, format!("player {player} is outside 1..={n}")));
            }
            if s.contains(player) {
                return Err(err(line, column, format!("player {player} repeated")));
            }
            s = s.with(player);
        }
        let value = rational::parse(&e.value).map_err(|x| err(line, column, x.to_string()))?;
        entries.push((s, value, line));
    }
    finish(n, doc.kind.map(|k| (k, 1)), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pdcg_core::rational::{int, ratio};

    #[test]
    fn parses_line_format() {
        let p = parse("# demo\nplayers 2\n{} 0\n{1} 1/2  # half\n{ 2 } -3\n{1,2} 4\n").unwrap();
        assert!(p.warnings.is_empty());
        assert_eq!(p.file.n, 2);
        let g = p.file.to_game().unwrap();
        assert_eq!(*g.value(Coalition::singleton(1)), ratio(1, 2));
        assert_eq!(*g.value(Coalition::singleton(2)), int(-3));
        assert_eq!(*g.value(Coalition::grand(2)), int(4));
    }

    #[test]
    fn missing_empty_coalition_is_inserted() {
        let p = parse("players 2\n{1,2} 4\n").unwrap();
        assert_eq!(p.warnings.len(), 1);
        assert_eq!(p.file.entries[0], (Coalition::EMPTY, int(0)));
        assert_eq!(p.file.to_incomplete().len(), 2);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("players 2\n{1} 1/0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 5));
        let e = parse("players 2\n  {1,3} 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 6));
        let e = parse("players 2\n{1} 1\n{1} 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse("players 2\nkind complete\n{1} 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("{2}"));
        let e = parse("{1} 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse("players two\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 9));
        assert!(parse("players 2\n{} 1\n").is_err());
        assert!(parse("players 2\nfoo\n").is_err());
        assert!(parse("players 2\n{1} 1 2\n").is_err());
    }

    #[test]
    fn render_and_json_round_trip() {
        let text = "players 3\nkind incomplete\n{} 0\n{1,3} -7/2\n{2} 1\n";
        let file = parse(text).unwrap().file;
        let rendered = file.render();
        assert_eq!(rendered, "players 3\nkind incomplete\n{} 0\n{2} 1\n{1,3} -7/2\n");
        assert_eq!(parse(&rendered).unwrap().file.to_incomplete(), file.to_incomplete());
        let json = serde_json::to_string_pretty(&file.to_json()).unwrap();
        let back = parse(&json).unwrap().file;
        assert_eq!(back.to_incomplete(), file.to_incomplete());
        assert_eq!(back.kind, Some(Kind::Incomplete));
    }

    #[test]
    fn json_errors() {
        let e = parse("{\n  \"players\": 2,\n  \"entries\": [\n    {\"coalition\": [3], \"value\": \"1\"}\n  ]\n}")
            .unwrap_err();
        assert_eq!((e.line, e.column), (4, 6));
        let e = parse("{\"players\": 2, \"entries\": [}").unwrap_err();
        assert_eq!(e.line, 1);
    }
}
