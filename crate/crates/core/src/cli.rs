//! Command-line front end: game files, commands and exit codes.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::axioms::{applicable_axioms, check_axiom_pairwise, Arity, ValueFn};
use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::Error;
use crate::game::{CompleteGame, Game, IncompleteGame, KnownShape, PayoffVector};
use crate::oneconvex::{
    decompose, description, is_extendable, is_one_convex, is_quasi_balanced, one_convexity_slack,
    upper_game, Membership,
};
use crate::oracle::{extendable_by_lp, verify_claims, ClaimReport};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::values::{evaluate_complete, evaluate_incomplete, Concept};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_SHAPE: i32 = 4;
pub const EXIT_DUPLICATE: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GameKind {
    Complete,
    Minimal,
    UpperVector,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    /// Strictly increasing 1-based players.
    pub coalition: Vec<usize>,
    pub value: String,
}

/// On-disk game: one JSON document per file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub n: usize,
    pub kind: GameKind,
    pub values: Vec<Entry>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {0}")]
    Io(String),
    #[error("malformed game file: {0}")]
    Malformed(String),
    #[error("known set does not match the declared kind: {0}")]
    Shape(String),
    #[error("duplicate coalition {0}")]
    Duplicate(String),
}

impl FileError {
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Io(_) | FileError::Malformed(_) => EXIT_MALFORMED,
            FileError::Shape(_) => EXIT_SHAPE,
            FileError::Duplicate(_) => EXIT_DUPLICATE,
        }
    }
}

fn entry_coalition(n: usize, players: &[usize]) -> Result<Coalition, FileError> {
    if players.windows(2).any(|w| w[0] >= w[1]) {
        return Err(FileError::Malformed(format!("coalition {players:?} is not strictly increasing")));
    }
    if let Some(p) = players.iter().find(|p| **p == 0 || **p > n) {
        return Err(FileError::Malformed(format!("player {p} outside 1..={n}")));
    }
    Ok(Coalition::from_players(players.iter().map(|p| p - 1)))
}

impl GameFile {
    pub fn from_json(text: &str) -> Result<GameFile, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game files serialise")
    }

    /// Validates the document and builds the game it describes.
    pub fn to_game(&self) -> Result<Game, FileError> {
        let n = self.n;
        if n == 0 || n > MAX_PLAYERS {
            return Err(FileError::Malformed(format!("n = {n} outside 1..={MAX_PLAYERS}")));
        }
        let mut values = BTreeMap::new();
        for entry in &self.values {
            let s = entry_coalition(n, &entry.coalition)?;
            let v = parse_rational(&entry.value)
                .map_err(|e| FileError::Malformed(format!("value of {s}: {e}")))?;
            if values.insert(s, v).is_some() {
                return Err(FileError::Duplicate(s.to_string()));
            }
        }
        if values.get(&Coalition::EMPTY).is_some_and(|v| *v != Rational::from_integer(0.into())) {
            return Err(FileError::Malformed("the empty coalition must have value 0".into()));
        }
        let shape_error = |what: &str| FileError::Shape(what.to_string());
        match self.kind {
            GameKind::Complete => {
                if let Some(s) = Coalition::all(n).find(|s| !s.is_empty() && !values.contains_key(s)) {
                    return Err(shape_error(&format!("complete game lacks {s}")));
                }
                let game = CompleteGame::from_fn(n, |s| values.get(&s).cloned().unwrap_or_default())
                    .map_err(|e| FileError::Malformed(e.to_string()))?;
                Ok(Game::Complete(game))
            }
            kind => {
                let game = IncompleteGame::new(n, values).map_err(|e| FileError::Malformed(e.to_string()))?;
                match kind {
                    GameKind::Minimal if !game.is_minimal() => {
                        Err(shape_error("kind minimal needs exactly the singletons and N"))
                    }
                    GameKind::UpperVector if !game.has_defined_upper_vector() => {
                        Err(shape_error("kind upper-vector needs N and every N\\i"))
                    }
                    _ => Ok(Game::Incomplete(game)),
                }
            }
        }
    }

    pub fn from_game(game: &Game) -> GameFile {
        let entry = |s: Coalition, v: &Rational| Entry {
            coalition: s.players().map(|p| p + 1).collect(),
            value: format_rational(v),
        };
        match game {
            Game::Complete(g) => GameFile {
                n: g.n(),
                kind: GameKind::Complete,
                values: by_size(g.n()).into_iter().map(|s| entry(s, g.value(s))).collect(),
            },
            Game::Incomplete(g) => GameFile {
                n: g.n(),
                kind: match g.shape() {
                    KnownShape::Minimal => GameKind::Minimal,
                    KnownShape::DefinedUpperVector => GameKind::UpperVector,
                    KnownShape::General => GameKind::General,
                },
                values: by_size(g.n())
                    .into_iter()
                    .filter_map(|s| g.value(s).map(|v| entry(s, v)))
                    .collect(),
            },
        }
    }
}

pub fn parse_game(path: &Path) -> Result<Game, FileError> {
    let text = fs::read_to_string(path).map_err(|e| FileError::Io(format!("{}: {e}", path.display())))?;
    GameFile::from_json(&text)?.to_game()
}

pub fn emit_game(game: &Game) -> String {
    GameFile::from_game(game).to_json()
}

#[derive(Debug, Parser)]
#[command(name = "onecvx", version, about = "Exact analysis of 1-convex extensions of incomplete cooperative games")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extendability of an incomplete game, or 1-convexity of a complete one.
    Check { file: PathBuf },
    /// The upper game of the 1-convex extensions.
    Upper { file: PathBuf },
    /// Extreme games and extreme rays of the extension set.
    Extremes { file: PathBuf },
    /// Centroids of the extreme games and of the extreme rays.
    Centroid { file: PathBuf },
    /// A solution concept.
    Value {
        file: PathBuf,
        /// tau, shapley, nucleolus, average, solidarity, conic or conic-shapley.
        #[arg(long)]
        concept: String,
        /// Ray weight for the conic concepts, as p/q.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Decompose a complete game over the extension set description.
    Decompose {
        file: PathBuf,
        #[arg(long)]
        extension: PathBuf,
    },
    /// Check every applicable axiom for a value function on the game.
    Axioms {
        file: PathBuf,
        #[arg(long)]
        value: String,
    },
    /// Check stated results against direct computation.
    VerifyClaims {
        /// Extra instance checked before the built-in and random ones.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

/// Output of a command: a document and its exit code.
struct Outcome {
    code: i32,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome { code: EXIT_OK, text, json }
    }

    fn negative(text: String, json: Value) -> Outcome {
        Outcome { code: EXIT_NEGATIVE, text, json }
    }
}

/// A failure reported on stderr with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Failure {
        Failure { code: e.exit_code(), message: e.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::NotMinimal | Error::NoUpperVector | Error::UnsupportedShape | Error::MissingCoalition(_) => {
                EXIT_SHAPE
            }
            Error::NegativeAlpha(_)
            | Error::AxiomDomain { .. }
            | Error::TooLarge { .. }
            | Error::PlayerCountMismatch(..)
            | Error::IncompatiblePair => EXIT_USAGE,
            _ => EXIT_NEGATIVE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn incomplete(game: &Game) -> Result<&IncompleteGame, Failure> {
    game.as_incomplete().ok_or_else(|| usage("this command needs an incomplete game"))
}

fn payoff_json(x: &PayoffVector) -> Value {
    Value::Array(x.iter().map(|v| Value::String(format_rational(v))).collect())
}

/// Nonempty coalitions ordered by size, then lexicographically.
fn by_size(n: usize) -> Vec<Coalition> {
    let mut all: Vec<Coalition> = Coalition::all(n).filter(|s| !s.is_empty()).collect();
    all.sort_by_key(|s| (s.size(), s.players().collect::<Vec<_>>()));
    all
}

fn game_text(g: &CompleteGame) -> String {
    by_size(g.n())
        .into_iter()
        .map(|s| format!("{s} {}\n", format_rational(g.value(s))))
        .collect()
}

fn game_json(g: &CompleteGame) -> Value {
    serde_json::to_value(GameFile::from_game(&Game::Complete(g.clone()))).expect("serialisable")
}

fn check(game: &Game) -> Result<Outcome, Failure> {
    match game {
        Game::Complete(g) => {
            let slack = one_convexity_slack(g);
            let one_convex = is_one_convex(g);
            let violation = Coalition::all(g.n()).find(|s| !s.is_empty() && slack.per_coalition[s.index()] < Rational::default());
            let mut text = format!("1-convex: {}\nquasi-balanced: {}\n", yes(one_convex), yes(is_quasi_balanced(g)));
            let reason = if one_convex {
                None
            } else if let Some(s) = violation {
                Some(format!("condition v(S) <= v(N) - b(N\\S) fails at {s}"))
            } else {
                Some("b(N) < v(N)".to_string())
            };
            if let Some(r) = &reason {
                text.push_str(&format!("reason: {r}\n"));
            }
            let json = json!({"kind": "complete", "one_convex": one_convex, "quasi_balanced": is_quasi_balanced(g), "reason": reason});
            Ok(if one_convex { Outcome::ok(text, json) } else { Outcome::negative(text, json) })
        }
        Game::Incomplete(g) => {
            let shape = g.shape();
            let (extendable, mut text, reason, delta) = match shape {
                KnownShape::Minimal => {
                    let delta = g.total_excess()?;
                    let ok = is_extendable(g)?;
                    let reason = (!ok).then(|| format!("Delta < 0 (Delta = {delta})"));
                    (ok, format!("shape: minimal\nDelta: {delta}\n"), reason, Some(delta))
                }
                KnownShape::DefinedUpperVector => {
                    let ok = is_extendable(g)?;
                    let reason = (!ok).then(|| "1-convexity fails on the known coalitions".to_string());
                    (ok, "shape: upper-vector\n".to_string(), reason, None)
                }
                KnownShape::General => {
                    let ok = extendable_by_lp(g);
                    let reason = (!ok).then(|| "the 1-convexity system is infeasible".to_string());
                    (ok, "shape: general\n".to_string(), reason, None)
                }
            };
            text.push_str(&format!("extendable: {}\n", yes(extendable)));
            if let Some(r) = &reason {
                text.push_str(&format!("reason: {r}\n"));
            }
            let json = json!({
                "kind": GameFile::from_game(game).kind,
                "delta": delta.map(|d| format_rational(&d)),
                "extendable": extendable,
                "reason": reason,
            });
            Ok(if extendable { Outcome::ok(text, json) } else { Outcome::negative(text, json) })
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn upper(game: &Game) -> Result<Outcome, Failure> {
    let g = upper_game(incomplete(game)?)?;
    Ok(Outcome::ok(game_text(&g), game_json(&g)))
}

fn extremes(game: &Game) -> Result<Outcome, Failure> {
    let d = description(incomplete(game)?)?;
    let mut text = String::new();
    for (k, g) in d.extreme_games.iter().enumerate() {
        text.push_str(&format!("extreme game {}\n{}", k + 1, game_text(g)));
    }
    let rays: Vec<String> = d.ray_index_set.iter().map(|t| t.to_string()).collect();
    text.push_str(&format!("extreme rays: {}\n", rays.len()));
    for t in &rays {
        text.push_str(&format!("e{t}\n"));
    }
    let json = json!({
        "extreme_games": d.extreme_games.iter().map(game_json).collect::<Vec<_>>(),
        "ray_index_set": d.ray_index_set.iter().map(|t| t.players().map(|p| p + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
    });
    Ok(Outcome::ok(text, json))
}

fn centroid(game: &Game) -> Result<Outcome, Failure> {
    let g = incomplete(game)?;
    if !is_extendable(g)? {
        return Err(Error::NotExtendable("no 1-convex extension".into()).into());
    }
    let d = description(g)?;
    let (games, rays) = (d.centroid_games(), d.centroid_rays());
    let text = format!("centroid of extreme games\n{}centroid of extreme rays\n{}", game_text(&games), game_text(&rays));
    Ok(Outcome::ok(text, json!({"games": game_json(&games), "rays": game_json(&rays)})))
}

fn value(game: &Game, concept: &str, alpha: Option<&str>) -> Result<Outcome, Failure> {
    let alpha = alpha
        .map(|a| parse_rational(a).map_err(|e| usage(format!("--alpha: {e}"))))
        .transpose()?;
    let concept = Concept::parse(concept, alpha).ok_or_else(|| usage(format!("unknown concept {concept}")))?;
    let report = match game {
        Game::Complete(g) => evaluate_complete(&concept, g),
        Game::Incomplete(g) => evaluate_incomplete(&concept, g),
    }
    .map_err(|e| match e {
        Error::UnsupportedShape if game.as_complete().is_some() => {
            usage(format!("concept {} needs an incomplete game", concept.name()))
        }
        other => other.into(),
    })?;
    let json = json!({"concept": report.method, "payoff": payoff_json(&report.payoff)});
    Ok(Outcome::ok(format!("{}\n", report.payoff), json))
}

fn decompose_command(game: &Game, extension: &Path) -> Result<Outcome, Failure> {
    let g = incomplete(game)?;
    let w = match parse_game(extension)? {
        Game::Complete(w) => w,
        Game::Incomplete(_) => return Err(usage("--extension must be a complete game")),
    };
    match decompose(g, &w)? {
        Membership::Member(cert) => {
            let alphas: Vec<String> = cert.alphas.iter().map(format_rational).collect();
            let betas: Vec<(String, String)> = cert
                .betas
                .iter()
                .filter(|(_, b)| **b != Rational::default())
                .map(|(t, b)| (t.to_string(), format_rational(b)))
                .collect();
            let mut text = format!("member: yes\nalpha: {}\n", alphas.join(" "));
            for (t, b) in &betas {
                text.push_str(&format!("beta{t} {b}\n"));
            }
            let json = json!({"member": true, "alphas": alphas, "betas": betas.into_iter().collect::<BTreeMap<_, _>>()});
            Ok(Outcome::ok(text, json))
        }
        Membership::NotMember(reason) => {
            let why = reason.to_string();
            Ok(Outcome::negative(format!("member: no\nreason: {why}\n"), json!({"member": false, "reason": why})))
        }
    }
}

fn axioms_command(game: &Game, value: &str) -> Result<Outcome, Failure> {
    let value_fn = ValueFn::parse(value).ok_or_else(|| usage(format!("unknown value {value}")))?;
    let pair = [(game.clone(), game.clone())];
    let mut text = String::new();
    let mut rows = Vec::new();
    for axiom in applicable_axioms(value_fn) {
        let verdict = check_axiom_pairwise(axiom, value_fn, &pair)?;
        let detail = verdict.counterexample.as_ref().map(|c| c.detail.clone());
        let arity = if axiom.arity == Arity::Pair { " (v, v)" } else { "" };
        text.push_str(&format!(
            "{}{arity} {}{}\n",
            axiom.id,
            if verdict.holds { "holds" } else { "fails" },
            detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
        ));
        rows.push(json!({"axiom": axiom.id, "holds": verdict.holds, "detail": detail}));
    }
    Ok(Outcome::ok(text, json!({"value": value_fn.id(), "axioms": rows})))
}

fn claims_text(reports: &[ClaimReport]) -> String {
    let mut text = String::new();
    for r in reports {
        text.push_str(&format!("{} {} checked={}\n", r.claim.id(), r.status, r.checked));
        text.push_str(&format!("  claim: {}\n", r.claim.statement()));
        if let Some(check) = &r.evidence {
            text.push_str(&format!("  left: {}\n  right: {}\n", check.left, check.right));
        }
        if let (Some(game), crate::oracle::ClaimStatus::RefutedOnInstance) = (&r.instance, r.status) {
            let compact = serde_json::to_string(&GameFile::from_game(game)).expect("serialisable");
            text.push_str(&format!("  instance: {compact}\n"));
        }
    }
    text
}

fn claims_json(reports: &[ClaimReport]) -> Value {
    Value::Array(
        reports
            .iter()
            .map(|r| {
                json!({
                    "claim": r.claim.id(),
                    "statement": r.claim.statement(),
                    "status": r.status.label(),
                    "checked": r.checked,
                    "left": r.evidence.as_ref().map(|c| c.left.clone()),
                    "right": r.evidence.as_ref().map(|c| c.right.clone()),
                    "instance": r.instance.as_ref().map(GameFile::from_game),
                })
            })
            .collect(),
    )
}

fn verify(file: Option<&Path>, seed: u64) -> Result<Outcome, Failure> {
    let extra = match file {
        Some(path) => vec![parse_game(path)?],
        None => Vec::new(),
    };
    let reports = verify_claims(seed, &extra);
    Ok(Outcome::ok(claims_text(&reports), claims_json(&reports)))
}

fn dispatch(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Check { file } => check(&parse_game(file)?),
        Command::Upper { file } => upper(&parse_game(file)?),
        Command::Extremes { file } => extremes(&parse_game(file)?),
        Command::Centroid { file } => centroid(&parse_game(file)?),
        Command::Value { file, concept, alpha } => value(&parse_game(file)?, concept, alpha.as_deref()),
        Command::Decompose { file, extension } => decompose_command(&parse_game(file)?, extension),
        Command::Axioms { file, value } => axioms_command(&parse_game(file)?, value),
        Command::VerifyClaims { file, seed } => verify(file.as_deref(), *seed),
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(outcome) => {
            let body = if cli.json {
                serde_json::to_string_pretty(&outcome.json).expect("serialisable") + "\n"
            } else {
                outcome.text
            };
            let _ = out.write_all(body.as_bytes());
            outcome.code
        }
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn file(n: usize, kind: GameKind, values: &[(&[usize], &str)]) -> GameFile {
        GameFile {
            n,
            kind,
            values: values
                .iter()
                .map(|(c, v)| Entry { coalition: c.to_vec(), value: v.to_string() })
                .collect(),
        }
    }

    #[test]
    fn parses_minimal_game_exactly() {
        let f = file(2, GameKind::Minimal, &[(&[1], "7/5"), (&[2], "0"), (&[1, 2], "3")]);
        let game = f.to_game().unwrap();
        let g = game.as_incomplete().unwrap();
        assert_eq!(g.value(Coalition::singleton(0)), Some(&rat(7, 5)));
        assert_eq!(g.total_excess().unwrap(), rat(8, 5));
        assert_eq!(GameFile::from_game(&game), f);
    }

    #[test]
    fn shape_and_duplicate_errors() {
        let missing = file(3, GameKind::Minimal, &[(&[1], "0"), (&[2], "0"), (&[1, 2, 3], "1")]);
        assert!(matches!(missing.to_game(), Err(FileError::Shape(_))));
        let dup = file(2, GameKind::General, &[(&[1], "0"), (&[1], "1")]);
        assert!(matches!(dup.to_game(), Err(FileError::Duplicate(_))));
        let unsorted = file(2, GameKind::General, &[(&[2, 1], "0")]);
        assert!(matches!(unsorted.to_game(), Err(FileError::Malformed(_))));
        let decimal = file(1, GameKind::Complete, &[(&[1], "0.5")]);
        assert!(matches!(decimal.to_game(), Err(FileError::Malformed(_))));
        let no_upper = file(3, GameKind::UpperVector, &[(&[1, 2, 3], "1"), (&[1, 2], "1")]);
        assert!(matches!(no_upper.to_game(), Err(FileError::Shape(_))));
        assert_eq!(FileError::Shape(String::new()).exit_code(), EXIT_SHAPE);
        assert_eq!(FileError::Duplicate(String::new()).exit_code(), EXIT_DUPLICATE);
    }

    #[test]
    fn complete_round_trip() {
        let g = CompleteGame::from_fn(3, |s| rat(s.mask() as i64, 3) - int(1)).unwrap();
        let text = emit_game(&Game::Complete(g.clone()));
        let back = GameFile::from_json(&text).unwrap().to_game().unwrap();
        assert_eq!(back, Game::Complete(g));
    }

    #[test]
    fn unknown_fields_are_malformed() {
        assert!(matches!(
            GameFile::from_json(r#"{"n": 1, "kind": "complete", "values": [], "extra": 1}"#),
            Err(FileError::Malformed(_))
        ));
    }
}
