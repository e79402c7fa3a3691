//! C ABI over the onecvx library.
//!
//! Games and payoff vectors are opaque handles owned by the caller and
//! released with the matching `_free` function. Rationals cross the
//! boundary as "p/q" strings. Every fallible call returns an
//! [`OnecvxStatus`]; the message of the last failure on the calling
//! thread is available from [`onecvx_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use onecvx::cli::{FileError, GameFile};
use onecvx::oneconvex::{is_extendable, is_one_convex, upper_game};
use onecvx::oracle::{extendable_by_lp, verify_claims};
use onecvx::rational::{format_rational, parse_rational};
use onecvx::values::{evaluate_complete, evaluate_incomplete, Concept};
use onecvx::{Error, Game, IncompleteGame, KnownShape, PayoffVector, Rational};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OnecvxStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Malformed = 3,
    Shape = 4,
    Duplicate = 5,
    NotExtendable = 6,
    NotOneConvex = 7,
    InvalidArgument = 8,
    Unsupported = 9,
    Failed = 10,
}

/// Opaque game handle.
pub struct OnecvxGame {
    game: Game,
}

/// Opaque payoff vector handle.
pub struct OnecvxPayoff {
    entries: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: OnecvxStatus, message: impl Into<String>) -> OnecvxStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn from_error(e: Error) -> OnecvxStatus {
    let status = match &e {
        Error::NotExtendable(_) => OnecvxStatus::NotExtendable,
        Error::NotOneConvex | Error::NotQuasiBalanced | Error::EmptyImputationSet => OnecvxStatus::NotOneConvex,
        Error::NotMinimal | Error::NoUpperVector | Error::MissingCoalition(_) => OnecvxStatus::Shape,
        Error::UnsupportedShape | Error::TooLarge { .. } => OnecvxStatus::Unsupported,
        Error::NegativeAlpha(_) | Error::PlayerOutOfRange(_) | Error::InvalidPlayerCount(_) => {
            OnecvxStatus::InvalidArgument
        }
        _ => OnecvxStatus::Failed,
    };
    fail(status, e.to_string())
}

fn from_file_error(e: FileError) -> OnecvxStatus {
    let status = match e {
        FileError::Shape(_) => OnecvxStatus::Shape,
        FileError::Duplicate(_) => OnecvxStatus::Duplicate,
        _ => OnecvxStatus::Malformed,
    };
    fail(status, e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, OnecvxStatus> {
    if s.is_null() {
        return Err(fail(OnecvxStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(OnecvxStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn read_rational(s: *const c_char) -> Result<Rational, OnecvxStatus> {
    parse_rational(read_str(s)?).map_err(|e| fail(OnecvxStatus::InvalidArgument, e))
}

unsafe fn game_ref<'a>(g: *const OnecvxGame) -> Result<&'a Game, OnecvxStatus> {
    g.as_ref().map(|h| &h.game).ok_or_else(|| fail(OnecvxStatus::NullPointer, "null game"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> OnecvxStatus {
    if out.is_null() {
        return fail(OnecvxStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    OnecvxStatus::Ok
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no nul bytes").into_raw()
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Message of the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn onecvx_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a JSON game document.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_from_json(json: *const c_char, out: *mut *mut OnecvxGame) -> OnecvxStatus {
    let text = attempt!(read_str(json));
    let file = attempt!(GameFile::from_json(text).map_err(from_file_error));
    let game = attempt!(file.to_game().map_err(from_file_error));
    write_out(out, Box::into_raw(Box::new(OnecvxGame { game })))
}

/// Builds a minimal game from `n` singleton values and v(N).
///
/// # Safety
/// `singletons` must point to `n` nul-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_minimal(
    n: usize,
    singletons: *const *const c_char,
    grand: *const c_char,
    out: *mut *mut OnecvxGame,
) -> OnecvxStatus {
    if singletons.is_null() {
        return fail(OnecvxStatus::NullPointer, "null singleton array");
    }
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        values.push(attempt!(read_rational(*singletons.add(i))));
    }
    let grand = attempt!(read_rational(grand));
    let game = attempt!(IncompleteGame::minimal(&values, grand).map_err(from_error));
    write_out(out, Box::into_raw(Box::new(OnecvxGame { game: game.into() })))
}

/// # Safety
/// `game` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_free(game: *mut OnecvxGame) {
    if !game.is_null() {
        drop(Box::from_raw(game));
    }
}

/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_player_count(game: *const OnecvxGame, out: *mut usize) -> OnecvxStatus {
    let g = attempt!(game_ref(game));
    write_out(out, g.n())
}

/// Whether the game is complete (all coalition values known).
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_is_complete(game: *const OnecvxGame, out: *mut bool) -> OnecvxStatus {
    let g = attempt!(game_ref(game));
    write_out(out, g.as_complete().is_some())
}

/// 1-convexity of a complete game, or 1-convex extendability of an
/// incomplete one.
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_check(game: *const OnecvxGame, out: *mut bool) -> OnecvxStatus {
    let answer = match attempt!(game_ref(game)) {
        Game::Complete(g) => is_one_convex(g),
        Game::Incomplete(g) if g.shape() == KnownShape::General => extendable_by_lp(g),
        Game::Incomplete(g) => attempt!(is_extendable(g).map_err(from_error)),
    };
    write_out(out, answer)
}

/// The game as a JSON document; free with [`onecvx_string_free`].
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_game_to_json(game: *const OnecvxGame, out: *mut *mut c_char) -> OnecvxStatus {
    let g = attempt!(game_ref(game));
    write_out(out, owned_string(GameFile::from_game(g).to_json()))
}

/// The upper game of an extendable minimal or upper-vector game.
///
/// # Safety
/// `game` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_upper_game(game: *const OnecvxGame, out: *mut *mut OnecvxGame) -> OnecvxStatus {
    let Game::Incomplete(g) = attempt!(game_ref(game)) else {
        return fail(OnecvxStatus::InvalidArgument, "upper game needs an incomplete game");
    };
    let upper = attempt!(upper_game(g).map_err(from_error));
    write_out(out, Box::into_raw(Box::new(OnecvxGame { game: upper.into() })))
}

/// Evaluates a solution concept (tau, shapley, nucleolus, average,
/// solidarity, conic, conic-shapley). `alpha` may be null.
///
/// # Safety
/// `game` must be a live handle; strings nul-terminated; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_value(
    game: *const OnecvxGame,
    concept: *const c_char,
    alpha: *const c_char,
    out: *mut *mut OnecvxPayoff,
) -> OnecvxStatus {
    let g = attempt!(game_ref(game));
    let name = attempt!(read_str(concept));
    let alpha = if alpha.is_null() { None } else { Some(attempt!(read_rational(alpha))) };
    let Some(concept) = Concept::parse(name, alpha) else {
        return fail(OnecvxStatus::InvalidArgument, format!("unknown concept {name}"));
    };
    let report = match g {
        Game::Complete(c) => evaluate_complete(&concept, c),
        Game::Incomplete(i) => evaluate_incomplete(&concept, i),
    };
    let report = attempt!(report.map_err(from_error));
    write_out(out, Box::into_raw(Box::new(payoff_handle(&report.payoff))))
}

fn payoff_handle(x: &PayoffVector) -> OnecvxPayoff {
    OnecvxPayoff {
        entries: x
            .iter()
            .map(|v| CString::new(format_rational(v)).expect("no nul bytes"))
            .collect(),
    }
}

/// # Safety
/// `payoff` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn onecvx_payoff_len(payoff: *const OnecvxPayoff) -> usize {
    payoff.as_ref().map_or(0, |p| p.entries.len())
}

/// Entry `index` as "p/q"; borrowed, valid while the handle lives.
///
/// # Safety
/// `payoff` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn onecvx_payoff_entry(payoff: *const OnecvxPayoff, index: usize) -> *const c_char {
    payoff
        .as_ref()
        .and_then(|p| p.entries.get(index))
        .map_or(ptr::null(), |s| s.as_ptr())
}

/// # Safety
/// `payoff` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn onecvx_payoff_free(payoff: *mut OnecvxPayoff) {
    if !payoff.is_null() {
        drop(Box::from_raw(payoff));
    }
}

/// The claims report for `seed` as one line per claim: "id status".
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn onecvx_verify_claims(seed: u64, out: *mut *mut c_char) -> OnecvxStatus {
    let lines: String = verify_claims(seed, &[])
        .iter()
        .map(|r| format!("{} {}\n", r.claim.id(), r.status))
        .collect();
    write_out(out, owned_string(lines))
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn onecvx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
