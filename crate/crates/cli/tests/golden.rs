use std::path::PathBuf;
use std::process::{Command, Output};
use std::{env, fs};

use pdcg_cli::gamefile;
use pdcg_cli::report::Report;

/// `(golden name, arguments, exit code)`; paths are relative to the crate.
const CASES: &[(&str, &[&str], i32)] = &[
    ("classify_table1", &["classify", "tests/fixtures/table1.game"], 0),
    ("classify_table1_machine", &["classify", "--machine", "tests/fixtures/table1.game"], 0),
    ("positive_certificate", &["positive", "--certificate", "tests/fixtures/certificate.game"], 0),
    ("positive_extremes", &["positive", "--extremes", "--bounds", "tests/fixtures/extremes.game"], 0),
    ("positive_extremes_machine", &["positive", "--machine", "--extremes", "tests/fixtures/extremes.game"], 0),
    ("positive_lower_game", &["positive", "--symmetric", "tests/fixtures/lower_game.game"], 0),
    ("positive_disjoint", &["positive", "--bounds", "--certificate", "tests/fixtures/disjoint.game"], 0),
    ("positive_envelope", &["positive", "--bounds", "tests/fixtures/open_top.game"], 0),
    ("symconv", &["symconv", "--bounds", "--extremes", "tests/fixtures/symconv.game"], 0),
    ("symconv_machine", &["symconv", "--machine", "--bounds", "--extremes", "tests/fixtures/symconv.game"], 0),
    (
        "symconv_decompose",
        &["symconv", "--decompose", "tests/fixtures/symconv_upper.game", "tests/fixtures/symconv.game"],
        0,
    ),
    (
        "symconv_mixed",
        &[
            "symconv",
            "--extremes",
            "--decompose",
            "tests/fixtures/mixed_vertex.game",
            "tests/fixtures/symconv_mixed.game",
        ],
        0,
    ),
    ("symconv_failing_triple", &["symconv", "tests/fixtures/failing_triple.game"], 0),
    ("interval", &["interval", "tests/fixtures/symconv_lower.game", "tests/fixtures/symconv_upper.game"], 0),
];

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn pdcg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdcg"))
        .args(args)
        .current_dir(crate_dir())
        .env_remove("PDCG_MAX_N")
        .output()
        .expect("pdcg runs")
}

fn golden_path(name: &str) -> PathBuf {
    crate_dir().join("tests").join("golden").join(format!("{name}.txt"))
}

#[test]
fn golden_outputs() {
    let bless = env::var_os("PDCG_BLESS").is_some();
    let mut failures = Vec::new();
    for (name, args, code) in CASES {
        let out = pdcg(args);
        assert_eq!(out.status.code(), Some(*code), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden_path(name);
        if bless {
            fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = fs::read(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != out.stdout {
            failures.push(format!(
                "{name}\n--- expected\n{}--- actual\n{}",
                String::from_utf8_lossy(&expected),
                String::from_utf8_lossy(&out.stdout)
            ));
        }
    }
    assert!(failures.is_empty(), "golden mismatches:\n{}", failures.join("\n"));
}

#[test]
fn machine_output_round_trips() {
    for (name, args, _) in CASES.iter().filter(|(name, ..)| name.ends_with("_machine")) {
        let out = pdcg(args);
        let text = String::from_utf8(out.stdout).unwrap();
        let report: Report = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(report.to_machine(), text, "{name}");
        let games = match &report {
            Report::Classify(r) => vec![r.game.clone()],
            Report::Positive(r) => r.extremes.iter().flatten().map(|e| e.game.clone()).collect(),
            _ => Vec::new(),
        };
        for g in games {
            let json = serde_json::to_string(&g).unwrap();
            let parsed = gamefile::parse(&json).unwrap().file;
            assert_eq!(parsed.to_json(), g, "{name}");
        }
    }
}

#[test]
fn classify_output_feeds_back_as_input() {
    let out = pdcg(&["classify", "--machine", "tests/fixtures/table1.game"]);
    let Report::Classify(report) = serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap() else {
        panic!("classify report expected");
    };
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("again.json");
    fs::write(&path, serde_json::to_string_pretty(&report.game).unwrap()).unwrap();
    let again = pdcg(&["classify", path.to_str().unwrap()]);
    assert_eq!(again.stdout, fs::read(golden_path("classify_table1")).unwrap());
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn exit_codes() {
    let out = pdcg(&["classify", "tests/fixtures/bad_rational.game"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column 5"), "{}", stderr(&out));

    let out = pdcg(&["classify", "tests/fixtures/extremes.game"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("complete game is required"));

    let out = pdcg(&["positive", "--extremes", "tests/fixtures/certificate.game"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stdout).contains("NOT EXTENDABLE"));

    let out = pdcg(&["symconv", "tests/fixtures/asymmetric.game"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("v({1}) != v({2})"));

    let out = pdcg(&["symconv", "--bounds", "tests/fixtures/open_top.game"]);
    assert_eq!(out.status.code(), Some(5));
    let out = pdcg(&["positive", "--extremes", "tests/fixtures/open_top.game"]);
    assert_eq!(out.status.code(), Some(5));

    let out = pdcg(&["interval", "tests/fixtures/symconv_upper.game", "tests/fixtures/symconv_lower.game"]);
    assert_eq!(out.status.code(), Some(6));
    assert!(stderr(&out).contains("at {1}: 1 > -1"));

    let out = pdcg(&["symconv", "--decompose", "tests/fixtures/symconv_lower.game", "tests/fixtures/symconv.game"]);
    assert_eq!(out.status.code(), Some(1));

    let out = pdcg(&["classify", "tests/fixtures/no_such_file.game"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_empty_coalition_warns() {
    let out = pdcg(&["positive", "tests/fixtures/missing_empty.game"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning: tests/fixtures/missing_empty.game: {} not listed"));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "structure: disjoint\nEXTENDABLE\n");
}

#[test]
fn zero_game_is_in_every_class() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.game");
    let mut text = String::from("players 2\n");
    for s in ["{}", "{1}", "{2}", "{1,2}"] {
        text.push_str(&format!("{s} 0\n"));
    }
    fs::write(&path, text).unwrap();
    let out = pdcg(&["classify", path.to_str().unwrap()]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.matches(": yes").count(), 5, "{stdout}");
    assert!(stdout.contains("midpoint: holds"));
}

#[test]
fn equal_files_give_degenerate_intervals() {
    let upper = "tests/fixtures/symconv_upper.game";
    let out = pdcg(&["interval", upper, upper]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    for line in stdout.lines().skip(2) {
        let interval = line.split_whitespace().skip(1).collect::<String>();
        let (lo, hi) = interval.trim_matches(|c| c == '[' || c == ']').split_once(',').unwrap();
        assert_eq!(lo, hi, "{line}");
    }
}

#[test]
fn player_cap_is_configurable() {
    let run = |cap: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_pdcg"));
        cmd.args(["positive", "--bounds", "tests/fixtures/extremes.game"]).current_dir(crate_dir());
        match cap {
            Some(c) => cmd.env("PDCG_MAX_N", c),
            None => cmd.env_remove("PDCG_MAX_N"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(run(None).status.code(), Some(0));
    // Below the player count the general solver refuses.
    let out = Command::new(env!("CARGO_BIN_EXE_pdcg"))
        .args(["positive", "tests/fixtures/open_top.game"])
        .current_dir(crate_dir())
        .env("PDCG_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("cap of 3"));
    assert_eq!(run(Some("many")).status.code(), Some(2));
}
