//! The subcommands as pure functions from file contents to output.

use pdcg_core::coalition::{self, Coalition};
use pdcg_core::limits::{self, Cap};
use pdcg_core::positive::{
    lower_game_positivity_regression, pos_disjoint_case, pos_downclosed_case, pos_envelope_capped,
    pos_extendable_capped, pos_extreme_games_capped, sp_per_coalition_bounds, BalancedCollection, FeasibilityOutcome,
    PositiveError,
};
use pdcg_core::rational::{self, Rational};
use pdcg_core::symmetric_convex::{sc_bounded, sc_bounds, sc_decompose, sc_extendable, sc_extreme_games, ScError};
use pdcg_core::{
    classify, interval_hull, midpoint_check, reduce_partially_symmetric, reduce_symmetric, Game, IncompleteError,
    IncompleteGame, ReducedIncomplete,
};

use crate::gamefile::{self, GameFile};
use crate::report::{
    BoundRow, Bounds, Certificate, ClassFlag, ClassifyReport, Entry, ExtremeGame, IntervalReport, Midpoint,
    PositiveReport, Report, SizeGame, SizeRow, SymconvReport, SymmetricPositive, Weight,
};

pub mod exit {
    pub const OK: i32 = 0;
    /// Resource caps, work limits and other failures.
    pub const FAILURE: i32 = 1;
    /// Unreadable or malformed input, or input of the wrong kind.
    pub const INPUT: i32 = 2;
    pub const NOT_EXTENDABLE: i32 = 3;
    pub const NOT_SYMMETRIC: i32 = 4;
    pub const UNBOUNDED: i32 = 5;
    pub const CROSSED: i32 = 6;
}

/// A named game file's text.
#[derive(Debug, Clone)]
pub struct Input {
    pub name: String,
    pub text: String,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub machine: bool,
    /// Player cap override (`PDCG_MAX_N`); still clamped to each ceiling.
    pub max_n: Option<usize>,
}

impl Options {
    fn cap(&self, cap: Cap) -> usize {
        cap.resolve(self.max_n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Failure {
    message: String,
    code: i32,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { message: message.into(), code }
}

/// Collects warnings and renders the final outcome.
struct Run<'a> {
    opts: &'a Options,
    stderr: String,
}

impl<'a> Run<'a> {
    fn new(opts: &'a Options) -> Self {
        Run { opts, stderr: String::new() }
    }

    fn load(&mut self, input: &Input) -> Result<GameFile, Failure> {
        let parsed = gamefile::parse(&input.text).map_err(|e| fail(exit::INPUT, format!("{}: {e}", input.name)))?;
        for w in parsed.warnings {
            self.stderr.push_str(&format!("warning: {}: {w}\n", input.name));
        }
        Ok(parsed.file)
    }

    fn load_complete(&mut self, input: &Input) -> Result<Game, Failure> {
        self.load(input)?.to_game().map_err(|s| {
            fail(exit::INPUT, format!("{}: a complete game is required but v({s}) is missing", input.name))
        })
    }

    fn finish(mut self, result: Result<(Report, i32), Failure>) -> Outcome {
        match result {
            Ok((report, code)) => {
                let stdout = if self.opts.machine { report.to_machine() } else { report.to_text() };
                Outcome { stdout, stderr: self.stderr, code }
            }
            Err(f) => {
                self.stderr.push_str(&format!("error: {}\n", f.message));
                Outcome { stdout: String::new(), stderr: self.stderr, code: f.code }
            }
        }
    }
}

fn positive_failure(e: PositiveError) -> Failure {
    let code = match e {
        PositiveError::NotExtendable(_) => exit::NOT_EXTENDABLE,
        PositiveError::Unbounded => exit::UNBOUNDED,
        _ => exit::FAILURE,
    };
    fail(code, e.to_string())
}

fn symmetric_failure(e: IncompleteError) -> Failure {
    match e {
        IncompleteError::NotPartiallySymmetric { .. } => fail(exit::NOT_SYMMETRIC, e.to_string()),
        _ => fail(exit::INPUT, e.to_string()),
    }
}

fn display_order(n: usize) -> Vec<Coalition> {
    let mut all: Vec<Coalition> = coalition::all(n).collect();
    coalition::sort_for_display(&mut all);
    all
}

fn fmt(q: &Rational) -> String {
    rational::format(q)
}

pub fn classify_cmd(input: &Input, opts: &Options) -> Outcome {
    let mut run = Run::new(opts);
    let result = (|| {
        let g = run.load_complete(input)?;
        let cap = opts.cap(limits::COMPLETE);
        if g.n() > cap {
            return Err(fail(exit::FAILURE, format!("{} players exceeds the cap of {cap}", g.n())));
        }
        let r = classify(&g);
        let flag = |class: &str, v: &Option<pdcg_core::Violation>| ClassFlag {
            class: class.into(),
            holds: v.is_none(),
            witness: v.as_ref().map(ToString::to_string),
        };
        let classes = vec![
            flag("monotonic", &r.monotonic),
            flag("superadditive", &r.superadditive),
            flag("convex", &r.convex),
            flag("positive", &r.positive),
            flag("symmetric", &r.symmetric),
        ];
        let midpoint = midpoint_check(&g).map(|m| {
            let s = m.coalition;
            Midpoint {
                coalition: s.players().collect(),
                removed: m.removed,
                added: m.added,
                values: [fmt(g.value(s.without(m.removed))), fmt(g.value(s.with(m.added))), fmt(g.value(s))],
            }
        });
        let report = ClassifyReport { game: GameFile::from_game(&g).to_json(), classes, midpoint };
        Ok((Report::Classify(report), exit::OK))
    })();
    run.finish(result)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct PositiveFlags {
    pub certificate: bool,
    pub extremes: bool,
    pub bounds: bool,
    pub symmetric: bool,
}

/// Closed-form structures the positive command recognises.
enum Structure {
    Disjoint,
    DownClosed,
    General,
}

fn structure_of(inc: &IncompleteGame) -> Structure {
    let mismatch = |r: Result<_, PositiveError>| matches!(r, Err(PositiveError::StructureMismatch(_)));
    if !mismatch(pos_disjoint_case(inc).map(|_| ())) {
        Structure::Disjoint
    } else if !mismatch(pos_downclosed_case(inc).map(|_| ())) {
        Structure::DownClosed
    } else {
        Structure::General
    }
}

/// Closed-form verdict, bounds and extremes of a structured instance.
struct ClosedForm {
    lower: Game,
    upper: Game,
    collections: Vec<BalancedCollection>,
}

fn closed_form(inc: &IncompleteGame, structure: &Structure) -> Option<Result<ClosedForm, PositiveError>> {
    let result = match structure {
        Structure::Disjoint => {
            pos_disjoint_case(inc).map(|c| ClosedForm { collections: c.collections(), lower: c.lower, upper: c.upper })
        }
        Structure::DownClosed => pos_downclosed_case(inc).map(|c| ClosedForm {
            collections: c.collections(),
            lower: c.lower,
            upper: c.upper,
        }),
        Structure::General => return None,
    };
    Some(result)
}

fn entries(map: &std::collections::BTreeMap<Coalition, Rational>) -> Vec<Entry> {
    let mut keys: Vec<Coalition> = map.keys().copied().collect();
    coalition::sort_for_display(&mut keys);
    keys.into_iter().map(|s| Entry::new(s, &map[&s])).collect()
}

fn extreme_rows(n: usize, collections: Vec<BalancedCollection>) -> Vec<ExtremeGame> {
    let mut games: Vec<(Game, BalancedCollection)> = collections
        .into_iter()
        .map(|c| {
            let g = Game::from_fn(n, |s| {
                c.dividends.iter().filter(|(t, _)| t.is_subset_of(s)).map(|(_, d)| d.clone()).sum()
            })
            .expect("player count already validated");
            (g, c)
        })
        .collect();
    games.sort_by(|a, b| a.0.values().cmp(b.0.values()));
    games
        .into_iter()
        .map(|(g, c)| ExtremeGame { collection: entries(&c.dividends), game: GameFile::from_game(&g).to_json() })
        .collect()
}

fn bound_rows(
    n: usize,
    lower: impl Fn(Coalition) -> Rational,
    upper: impl Fn(Coalition) -> Option<Rational>,
) -> Vec<BoundRow> {
    display_order(n)
        .into_iter()
        .map(|s| BoundRow {
            coalition: s.players().collect(),
            lower: fmt(&lower(s)),
            upper: upper(s).as_ref().map(fmt),
        })
        .collect()
}

pub fn positive_cmd(input: &Input, flags: PositiveFlags, opts: &Options) -> Outcome {
    let mut run = Run::new(opts);
    let result = (|| {
        let inc = run.load(input)?.to_incomplete();
        let n = inc.n();
        let structure = structure_of(&inc);
        let closed = closed_form(&inc, &structure);
        let general_cap = opts.cap(limits::POSITIVE_GENERAL);
        let enumeration_cap = opts.cap(limits::POSITIVE_ENUMERATION);

        let lp = if closed.is_none() || flags.certificate {
            Some(pos_extendable_capped(&inc, general_cap).map_err(positive_failure)?)
        } else {
            None
        };
        let (extendable, reason) = match &closed {
            Some(Ok(_)) => (true, None),
            Some(Err(PositiveError::NotExtendable(obstruction))) => (false, Some(obstruction.to_string())),
            Some(Err(e)) => return Err(positive_failure(e.clone())),
            None => (lp.as_ref().is_some_and(FeasibilityOutcome::is_extendable), None),
        };
        if let Some(lp) = &lp {
            debug_assert_eq!(lp.is_extendable(), extendable);
        }

        let mut report = PositiveReport {
            structure: match structure {
                Structure::Disjoint => "disjoint",
                Structure::DownClosed => "down-closed",
                Structure::General => "general",
            }
            .into(),
            extendable,
            reason,
            certificate: None,
            witness: None,
            extremes: None,
            bounds: None,
            symmetric: None,
        };
        let mut code = exit::OK;

        if flags.certificate {
            match lp.expect("computed when a certificate is requested") {
                FeasibilityOutcome::Certificate(y) => {
                    let nonempty: Vec<Coalition> = coalition::all(n).skip(1).collect();
                    let satisfied = nonempty.iter().filter(|t| y.row(**t) >= Rational::from_integer(0.into())).count();
                    let nonzero =
                        y.y.iter().filter(|(_, v)| !num_traits::Zero::is_zero(*v)).map(|(s, v)| (*s, v.clone()));
                    report.certificate = Some(Certificate {
                        y: entries(&nonzero.collect()),
                        objective: fmt(&y.objective_sum()),
                        rows_satisfied: satisfied,
                        rows_total: nonempty.len(),
                    });
                }
                FeasibilityOutcome::Witness(d) => {
                    let support = d.support().into_iter().map(|t| (t, d.get(t).clone())).collect();
                    report.witness = Some(entries(&support));
                }
            }
        }

        if flags.extremes || flags.bounds {
            if !extendable {
                code = exit::NOT_EXTENDABLE;
            } else {
                if flags.extremes {
                    if n > enumeration_cap {
                        return Err(positive_failure(PositiveError::TooManyPlayers { n, cap: enumeration_cap }));
                    }
                    let collections = match &closed {
                        Some(Ok(c)) => c.collections.clone(),
                        _ => match pos_extreme_games_capped(&inc, enumeration_cap) {
                            Ok(set) => set.extremes.into_iter().map(|e| e.collection).collect(),
                            Err(PositiveError::Unbounded) => {
                                code = exit::UNBOUNDED;
                                run.stderr.push_str("error: the set of positive extensions is unbounded\n");
                                Vec::new()
                            }
                            Err(e) => return Err(positive_failure(e)),
                        },
                    };
                    if code == exit::OK {
                        report.extremes = Some(extreme_rows(n, collections));
                    }
                }
                if flags.bounds {
                    report.bounds = Some(match &closed {
                        Some(Ok(c)) => Bounds {
                            label: "closed form".into(),
                            rows: bound_rows(n, |s| c.lower.value(s).clone(), |s| Some(c.upper.value(s).clone())),
                        },
                        _ => {
                            let env = pos_envelope_capped(&inc, enumeration_cap).map_err(positive_failure)?;
                            Bounds {
                                label: "envelope".into(),
                                rows: bound_rows(n, |s| env.lower_at(s).clone(), |s| env.upper_at(s).cloned()),
                            }
                        }
                    });
                }
            }
        }

        if flags.symmetric {
            let r = reduce_partially_symmetric(&inc).map_err(symmetric_failure)?;
            report.symmetric = Some(symmetric_positive(&r)?);
            if !report.symmetric.as_ref().unwrap().extendable && code == exit::OK {
                code = exit::NOT_EXTENDABLE;
            }
        }
        Ok((Report::Positive(report), code))
    })();
    run.finish(result)
}

fn symmetric_positive(r: &ReducedIncomplete) -> Result<SymmetricPositive, Failure> {
    let env = match sp_per_coalition_bounds(r) {
        Ok(env) => env,
        Err(PositiveError::NotExtendable(_)) => {
            return Ok(SymmetricPositive {
                extendable: false,
                sizes: Vec::new(),
                lower_dividends: Vec::new(),
                first_negative: None,
            })
        }
        Err(e) => return Err(positive_failure(e)),
    };
    let lower = lower_game_positivity_regression(r).map_err(positive_failure)?;
    let sizes = (0..=r.n())
        .map(|m| SizeRow { size: m, lower: fmt(&env.lower[m]), upper: env.upper[m].as_ref().map(fmt) })
        .collect();
    Ok(SymmetricPositive {
        extendable: true,
        sizes,
        lower_dividends: lower.dividends.iter().map(fmt).collect(),
        first_negative: lower.first_negative,
    })
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SymconvFlags {
    pub bounds: bool,
    pub extremes: bool,
}

fn sc_failure(e: ScError) -> Failure {
    let code = match e {
        ScError::NotExtendable(_) => exit::NOT_EXTENDABLE,
        ScError::Unbounded => exit::UNBOUNDED,
        ScError::DimensionMismatch(..) => exit::INPUT,
        ScError::NotAMember | ScError::TooLarge(_) => exit::FAILURE,
    };
    fail(code, e.to_string())
}

fn size_values(values: &[Rational]) -> Vec<String> {
    values.iter().map(fmt).collect()
}

pub fn symconv_cmd(input: &Input, flags: SymconvFlags, decompose: Option<&Input>, opts: &Options) -> Outcome {
    let mut run = Run::new(opts);
    let result = (|| {
        let inc = run.load(input)?.to_incomplete();
        let r = reduce_partially_symmetric(&inc).map_err(symmetric_failure)?;
        let target = match decompose {
            Some(d) => {
                let g = run.load_complete(d)?;
                if g.n() != r.n() {
                    return Err(fail(exit::INPUT, format!("{}: {} players, expected {}", d.name, g.n(), r.n())));
                }
                let s = reduce_symmetric(&g).map_err(|e| fail(exit::NOT_SYMMETRIC, format!("{}: {e}", d.name)))?;
                Some(s)
            }
            None => None,
        };
        let violation = sc_extendable(&r).err();
        let extendable = violation.is_none();
        let bounded = if extendable { Some(sc_bounded(&r).map_err(sc_failure)?) } else { None };
        let mut report = SymconvReport {
            players: r.n(),
            known: r.entries().map(|(k, v)| (k, fmt(v))).collect(),
            extendable,
            violation: violation.map(|v| v.to_string()),
            bounded,
            bounds: None,
            extremes: None,
            decomposition: None,
        };
        let wants = flags.bounds || flags.extremes || target.is_some();
        let code = if !wants {
            exit::OK
        } else if !extendable {
            exit::NOT_EXTENDABLE
        } else if bounded == Some(false) {
            exit::UNBOUNDED
        } else {
            if flags.bounds {
                let b = sc_bounds(&r).map_err(sc_failure)?;
                report.bounds = Some(
                    (0..=r.n())
                        .map(|k| SizeRow { size: k, lower: fmt(&b.lower[k]), upper: Some(fmt(&b.upper[k])) })
                        .collect(),
                );
            }
            let ext = sc_extreme_games(&r).map_err(sc_failure)?;
            if flags.extremes {
                let mut rows = vec![SizeGame { label: "upper".into(), values: size_values(ext.upper.values()) }];
                rows.extend(
                    ext.gaps.iter().map(|(k, g)| SizeGame { label: k.to_string(), values: size_values(g.values()) }),
                );
                rows.extend(
                    ext.mixed
                        .iter()
                        .enumerate()
                        .map(|(i, g)| SizeGame { label: format!("mix{}", i + 1), values: size_values(g.values()) }),
                );
                report.extremes = Some(rows);
            }
            if let Some(s) = &target {
                let dec = sc_decompose(s, &r).map_err(sc_failure)?;
                let mut ws = vec![Weight { label: "upper".into(), value: fmt(&dec.upper) }];
                ws.extend(dec.gaps.iter().map(|(k, w)| Weight { label: k.to_string(), value: fmt(w) }));
                ws.extend(
                    dec.mixed.iter().enumerate().map(|(i, w)| Weight { label: format!("mix{}", i + 1), value: fmt(w) }),
                );
                report.decomposition = Some(ws);
            }
            exit::OK
        };
        if code == exit::UNBOUNDED {
            run.stderr.push_str("error: the set of symmetric convex extensions is unbounded\n");
        }
        Ok((Report::Symconv(report), code))
    })();
    run.finish(result)
}

pub fn interval_cmd(lower: &Input, upper: &Input, opts: &Options) -> Outcome {
    let mut run = Run::new(opts);
    let result = (|| {
        let lo = run.load_complete(lower)?;
        let hi = run.load_complete(upper)?;
        let hull = interval_hull(&lo, &hi).map_err(|e| match e {
            IncompleteError::CrossedBounds(s) => fail(
                exit::CROSSED,
                format!("lower bound exceeds upper bound at {s}: {} > {}", fmt(lo.value(s)), fmt(hi.value(s))),
            ),
            e => fail(exit::INPUT, e.to_string()),
        })?;
        let rows = bound_rows(hull.n(), |s| hull.interval(s).lo.clone(), |s| Some(hull.interval(s).hi.clone()));
        Ok((Report::Interval(IntervalReport { players: hull.n(), rows }), exit::OK))
    })();
    run.finish(result)
}
