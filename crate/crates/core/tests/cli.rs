use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use onecvx::cli::GameFile;
use onecvx::oneconvex::upper_game;
use onecvx::oracle::{five_player_instance, GameSampler};
use onecvx::Game;

fn game_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("games").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_onecvx")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_on(args: &[&str], file: &str) -> Output {
    let path = game_path(file);
    let mut all = args.to_vec();
    all.push(path.to_str().unwrap());
    run(&all)
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn average_value_of_five_player_file() {
    let o = run_on(&["value", "--concept", "average"], "five_player.json");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2/5 7/5 12/5 7/5 22/5");
}

#[test]
fn value_concepts_agree_on_five_player_file() {
    for concept in ["tau", "shapley", "nucleolus", "solidarity", "conic", "conic-shapley"] {
        let o = run_on(&["value", "--concept", concept, "--alpha", "7"], "five_player.json");
        assert_eq!(o.status.code(), Some(0), "{concept}");
        assert_eq!(stdout(&o).trim(), "2/5 7/5 12/5 7/5 22/5", "{concept}");
    }
}

#[test]
fn json_output_is_structured() {
    let o = run_on(&["--json", "value", "--concept", "average"], "five_player.json");
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["payoff"][4], "22/5");
}

#[test]
fn check_reports_negative_excess() {
    let o = run_on(&["check"], "negative_excess.json");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Delta < 0"), "{}", stdout(&o));

    let o = run_on(&["check"], "five_player.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Delta: 2"));
}

#[test]
fn decompose_rejects_half_pairs_vertex() {
    let ext = game_path("half_pairs.json");
    let o = run_on(&["decompose", "--extension", ext.to_str().unwrap()], "three_player.json");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("alphas sum to 3/2"));
}

#[test]
fn upper_and_extremes_succeed() {
    for cmd in ["upper", "extremes", "centroid"] {
        for file in ["five_player.json", "three_player.json", "upper_vector.json"] {
            let o = run_on(&[cmd], file);
            assert_eq!(o.status.code(), Some(0), "{cmd} {file}: {}", String::from_utf8_lossy(&o.stderr));
        }
    }
}

#[test]
fn axioms_command_lists_verdicts() {
    let o = run_on(&["axioms", "--value", "average"], "five_player.json");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("efficiency"));
}

#[test]
fn exit_codes_distinguish_failures() {
    let dir = tempfile::tempdir().unwrap();
    let malformed = write_temp(&dir, "malformed.json", "{ \"n\": 3, ");
    assert_eq!(run(&["check", &malformed]).status.code(), Some(3));

    let unknown_field = write_temp(&dir, "extra.json", r#"{"n":1,"kind":"complete","values":[],"extra":1}"#);
    assert_eq!(run(&["check", &unknown_field]).status.code(), Some(3));

    let missing_singleton = write_temp(
        &dir,
        "shape.json",
        r#"{"n":2,"kind":"minimal","values":[{"coalition":[1],"value":"0"},{"coalition":[1,2],"value":"1"}]}"#,
    );
    assert_eq!(run(&["check", &missing_singleton]).status.code(), Some(4));

    let duplicate = write_temp(
        &dir,
        "dup.json",
        r#"{"n":2,"kind":"minimal","values":[{"coalition":[1],"value":"0"},{"coalition":[2],"value":"0"},{"coalition":[2],"value":"1"},{"coalition":[1,2],"value":"1"}]}"#,
    );
    assert_eq!(run(&["check", &duplicate]).status.code(), Some(5));

    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run_on(&["value", "--concept", "bogus"], "five_player.json").status.code(), Some(2));
    assert_eq!(run_on(&["value", "--concept", "conic", "--alpha=-1"], "five_player.json").status.code(), Some(2));
    assert_eq!(run(&["check", "/nonexistent/game.json"]).status.code(), Some(3));
}

#[test]
fn exact_rationals_are_read_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_temp(
        &dir,
        "sevenths.json",
        r#"{"n":2,"kind":"minimal","values":[{"coalition":[1],"value":"7/5"},{"coalition":[2],"value":"-1/3"},{"coalition":[1,2],"value":"2"}]}"#,
    );
    let o = run(&["value", "--concept", "average", &file]);
    // Delta = 2 - 7/5 + 1/3 = 14/15, shared equally.
    assert_eq!(stdout(&o).trim(), "28/15 2/15");
}

#[test]
fn emitted_upper_game_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_on(&["--json", "upper"], "five_player.json");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let parsed = GameFile::from_json(&text).unwrap().to_game().unwrap();
    let expected: Game = upper_game(&five_player_instance()).unwrap().into();
    assert_eq!(parsed, expected);

    // Delta = 2 > 0, so the emitted upper game is not itself 1-convex.
    let path = write_temp(&dir, "upper.json", &text);
    let again = run(&["check", &path]);
    assert_eq!(again.status.code(), Some(1), "{}", stdout(&again));
}

#[test]
fn library_round_trip_is_exact() {
    let mut s = GameSampler::new(99);
    for n in 1..=5 {
        let g: Game = s.complete(n).into();
        let text = GameFile::from_game(&g).to_json();
        assert_eq!(GameFile::from_json(&text).unwrap().to_game().unwrap(), g);
        let h: Game = s.upper_vector(n.max(2)).into();
        let text = GameFile::from_game(&h).to_json();
        assert_eq!(GameFile::from_json(&text).unwrap().to_game().unwrap(), h);
    }
}

#[test]
fn verify_claims_is_deterministic() {
    let three = game_path("three_player.json");
    let a = run(&["verify-claims", "--seed", "42", three.to_str().unwrap()]);
    let b = run(&["verify-claims", "--seed", "42", three.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("description-completeness refuted-on-instance"), "{text}");
}
