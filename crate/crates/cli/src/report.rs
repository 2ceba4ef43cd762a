//! Command results. Each report renders as text, or as JSON with
//! `--machine`; the JSON parses back into the same report.

use std::fmt::Write;

use pdcg_core::coalition::Coalition;
use pdcg_core::rational::{self, Rational};
use serde::{Deserialize, Serialize};

use crate::gamefile::JsonGameFile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Classify(ClassifyReport),
    Positive(PositiveReport),
    Symconv(SymconvReport),
    Interval(IntervalReport),
}

/// `(coalition, value)` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub coalition: Vec<usize>,
    pub value: String,
}

impl Entry {
    pub fn new(s: Coalition, v: &Rational) -> Self {
        Entry { coalition: s.players().collect(), value: rational::format(v) }
    }

    fn label(&self) -> String {
        Coalition::from_players(self.coalition.iter().copied()).to_string()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlag {
    pub class: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Midpoint {
    pub coalition: Vec<usize>,
    pub removed: usize,
    pub added: usize,
    /// `v(S - i)`, `v(S + j)`, `v(S)`.
    pub values: [String; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub game: JsonGameFile,
    pub classes: Vec<ClassFlag>,
    pub midpoint: Option<Midpoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub y: Vec<Entry>,
    pub objective: String,
    pub rows_satisfied: usize,
    pub rows_total: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremeGame {
    pub collection: Vec<Entry>,
    pub game: JsonGameFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub coalition: Vec<usize>,
    pub lower: String,
    /// `None` when unbounded above.
    pub upper: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// `closed form` or `envelope`.
    pub label: String,
    pub rows: Vec<BoundRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub size: usize,
    pub lower: String,
    pub upper: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricPositive {
    pub extendable: bool,
    pub sizes: Vec<SizeRow>,
    /// Size dividends of the pointwise lower game.
    pub lower_dividends: Vec<String>,
    pub first_negative: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositiveReport {
    pub structure: String,
    pub extendable: bool,
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremes: Option<Vec<ExtremeGame>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Bounds>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<SymmetricPositive>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeGame {
    /// `upper`, the unknown size `k` whose lower bound it attains, or `mixI`
    /// for the `I`-th vertex outside that family.
    pub label: String,
    pub values: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub label: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymconvReport {
    pub players: usize,
    /// `(size, σ(size))`.
    pub known: Vec<(usize, String)>,
    pub extendable: bool,
    pub violation: Option<String>,
    pub bounded: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<Vec<SizeRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremes: Option<Vec<SizeGame>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Weight>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalReport {
    pub players: usize,
    pub rows: Vec<BoundRow>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces, indented by two.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let head: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for r in std::iter::once(&head).chain(rows) {
        let mut line = String::from(" ");
        for (w, cell) in widths.iter().zip(r) {
            line.push(' ');
            line.push_str(cell);
            line.push_str(&" ".repeat(w - cell.chars().count() + 1));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn upper_cell(u: &Option<String>) -> String {
    u.clone().unwrap_or_else(|| "+inf".into())
}

fn size_table(rows: &[SizeRow]) -> String {
    let cells: Vec<Vec<String>> =
        rows.iter().map(|r| vec![r.size.to_string(), r.lower.clone(), upper_cell(&r.upper)]).collect();
    table(&["size", "lower", "upper"], &cells)
}

fn collection(entries: &[Entry]) -> String {
    if entries.is_empty() {
        return "(zero game)".into();
    }
    entries.iter().map(|e| format!("d({})={}", e.label(), e.value)).collect::<Vec<_>>().join(" ")
}

impl Report {
    pub fn to_machine(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        match self {
            Report::Classify(r) => r.to_text(),
            Report::Positive(r) => r.to_text(),
            Report::Symconv(r) => r.to_text(),
            Report::Interval(r) => r.to_text(),
        }
    }
}

impl ClassifyReport {
    fn to_text(&self) -> String {
        let mut out = format!("players: {}\n", self.game.players);
        for c in &self.classes {
            match &c.witness {
                Some(w) => writeln!(out, "{}: {} ({w})", c.class, yes_no(c.holds)),
                None => writeln!(out, "{}: {}", c.class, yes_no(c.holds)),
            }
            .unwrap();
        }
        match &self.midpoint {
            None => out.push_str("midpoint: holds\n"),
            Some(m) => {
                let s = Coalition::from_players(m.coalition.iter().copied());
                let [below, above, at] = &m.values;
                writeln!(out, "midpoint: fails at S={s}, i={}, j={}: ({below} + {above})/2 < {at}", m.removed, m.added)
                    .unwrap();
            }
        }
        out
    }
}

impl PositiveReport {
    fn to_text(&self) -> String {
        let mut out = format!("structure: {}\n", self.structure);
        out.push_str(if self.extendable { "EXTENDABLE\n" } else { "NOT EXTENDABLE\n" });
        if let Some(reason) = &self.reason {
            writeln!(out, "reason: {reason}").unwrap();
        }
        if let Some(c) = &self.certificate {
            out.push_str("certificate:\n");
            for e in &c.y {
                writeln!(out, "  ({}, {})", e.label(), e.value).unwrap();
            }
            writeln!(out, "objective: sum v(S) y(S) = {}", c.objective).unwrap();
            writeln!(
                out,
                "dual rows: {} of {} satisfied (sum of y(S) over S containing T >= 0)",
                c.rows_satisfied, c.rows_total
            )
            .unwrap();
        }
        if let Some(w) = &self.witness {
            writeln!(out, "witness: {}", collection(w)).unwrap();
        }
        if let Some(ext) = &self.extremes {
            writeln!(out, "extremes: {}", ext.len()).unwrap();
            let width = ext.len().to_string().len();
            for (i, e) in ext.iter().enumerate() {
                writeln!(out, "  {:>width$}. {}", i + 1, collection(&e.collection)).unwrap();
            }
        }
        if let Some(b) = &self.bounds {
            writeln!(out, "bounds ({}):", b.label).unwrap();
            let cells: Vec<Vec<String>> = b
                .rows
                .iter()
                .map(|r| {
                    let s = Coalition::from_players(r.coalition.iter().copied());
                    vec![s.to_string(), r.lower.clone(), upper_cell(&r.upper)]
                })
                .collect();
            out.push_str(&table(&["coalition", "lower", "upper"], &cells));
        }
        if let Some(sp) = &self.symmetric {
            if !sp.extendable {
                out.push_str("symmetric: NOT EXTENDABLE\n");
            } else {
                out.push_str("symmetric extensions by size:\n");
                out.push_str(&size_table(&sp.sizes));
                writeln!(out, "lower game dividends by size: {}", sp.lower_dividends.join(" ")).unwrap();
                match sp.first_negative {
                    None => out.push_str("lower game: symmetric positive\n"),
                    Some(k) => writeln!(
                        out,
                        "lower game: not symmetric positive (size-{k} dividend {} < 0)",
                        sp.lower_dividends[k]
                    )
                    .unwrap(),
                }
            }
        }
        out
    }
}

impl SymconvReport {
    fn to_text(&self) -> String {
        let mut out = format!("players: {}\n", self.players);
        let known: Vec<String> = self.known.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        writeln!(out, "known sizes: {}", known.join(" ")).unwrap();
        match &self.violation {
            None => out.push_str("EXTENDABLE\n"),
            Some(v) => writeln!(out, "NOT EXTENDABLE: {v}").unwrap(),
        }
        if let Some(b) = self.bounded {
            writeln!(out, "bounded: {}", yes_no(b)).unwrap();
        }
        if let Some(rows) = &self.bounds {
            out.push_str("bounds:\n");
            out.push_str(&size_table(rows));
        }
        if let Some(ext) = &self.extremes {
            writeln!(out, "extremes: {}", ext.len()).unwrap();
            let cells: Vec<Vec<String>> = ext
                .iter()
                .map(|g| {
                    let label = match g.label.parse::<usize>() {
                        Ok(k) => format!("s^{k}"),
                        Err(_) => g.label.clone(),
                    };
                    std::iter::once(label).chain(g.values.iter().cloned()).collect()
                })
                .collect();
            let sizes: Vec<String> = (0..=self.players).map(|k| k.to_string()).collect();
            let header: Vec<&str> = std::iter::once("game").chain(sizes.iter().map(String::as_str)).collect();
            out.push_str(&table(&header, &cells));
        }
        if let Some(ws) = &self.decomposition {
            out.push_str("decomposition:\n");
            for w in ws {
                writeln!(out, "  alpha({})={}", w.label, w.value).unwrap();
            }
        }
        out
    }
}

impl IntervalReport {
    fn to_text(&self) -> String {
        let mut out = format!("players: {}\n", self.players);
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let s = Coalition::from_players(r.coalition.iter().copied());
                vec![s.to_string(), format!("[{}, {}]", r.lower, upper_cell(&r.upper))]
            })
            .collect();
        out.push_str(&table(&["coalition", "interval"], &cells));
        out
    }
}
