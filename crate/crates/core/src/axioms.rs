//! Axioms as executable predicates over value functions and game suites.

use std::fmt;

use num_traits::Zero;

use crate::coalition::{player_orders, Coalition};
use crate::error::{Error, Result};
use crate::game::{CompleteGame, Game, IncompleteGame, PayoffVector};
use crate::oneconvex::minimal_right_vector;
use crate::rational::{int, rat, Rational};
use crate::values::{
    average_nucleolus, average_shapley, average_tau, average_value, centroid_game, equal_split,
    nucleolus, shapley, solidarity_tau, tau_quasi_balanced,
};

/// Games a value function or axiom speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Minimal incomplete games.
    Minimal,
    Complete,
    Any,
}

impl Domain {
    fn admits(self, other: Domain) -> bool {
        self == Domain::Any || other == Domain::Any || self == other
    }
}

/// A value function the harness can evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValueFn {
    Average,
    Solidarity,
    EqualSplit,
    AverageTau,
    AverageShapley,
    AverageNucleolus,
    Tau,
    Shapley,
    Nucleolus,
}

impl ValueFn {
    pub const ALL: [ValueFn; 9] = [
        ValueFn::Average,
        ValueFn::Solidarity,
        ValueFn::EqualSplit,
        ValueFn::AverageTau,
        ValueFn::AverageShapley,
        ValueFn::AverageNucleolus,
        ValueFn::Tau,
        ValueFn::Shapley,
        ValueFn::Nucleolus,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            ValueFn::Average => "average",
            ValueFn::Solidarity => "solidarity",
            ValueFn::EqualSplit => "equal-split",
            ValueFn::AverageTau => "average-tau",
            ValueFn::AverageShapley => "average-shapley",
            ValueFn::AverageNucleolus => "average-nucleolus",
            ValueFn::Tau => "tau",
            ValueFn::Shapley => "shapley",
            ValueFn::Nucleolus => "nucleolus",
        }
    }

    pub fn parse(id: &str) -> Option<ValueFn> {
        ValueFn::ALL.into_iter().find(|v| v.id() == id)
    }

    pub fn domain(&self) -> Domain {
        match self {
            ValueFn::Tau | ValueFn::Shapley | ValueFn::Nucleolus => Domain::Complete,
            _ => Domain::Minimal,
        }
    }

    pub fn eval(&self, game: &Game) -> Result<PayoffVector> {
        match (self, game) {
            (ValueFn::Tau, Game::Complete(g)) => tau_quasi_balanced(g),
            (ValueFn::Shapley, Game::Complete(g)) => Ok(shapley(g)),
            (ValueFn::Nucleolus, Game::Complete(g)) => nucleolus(g),
            (_, Game::Incomplete(g)) if self.domain() == Domain::Minimal => {
                g.require_minimal()?;
                match self {
                    ValueFn::Average => average_value(g),
                    ValueFn::Solidarity => solidarity_tau(g),
                    ValueFn::EqualSplit => equal_split(g),
                    ValueFn::AverageTau => average_tau(g),
                    ValueFn::AverageShapley => average_shapley(g),
                    _ => average_nucleolus(g),
                }
            }
            _ => Err(Error::AxiomDomain {
                axiom: "evaluation".into(),
                value: self.id().into(),
            }),
        }
    }
}

impl fmt::Display for ValueFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Arity {
    Single,
    Pair,
}

/// A concrete failure of an axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub games: Vec<Game>,
    pub players: Option<(usize, usize)>,
    pub values: Vec<PayoffVector>,
    pub detail: String,
}

type Evaluator = fn(ValueFn, &[&Game]) -> Result<Option<Counterexample>>;

pub struct Axiom {
    pub id: &'static str,
    pub arity: Arity,
    pub domain: Domain,
    evaluate: Evaluator,
}

impl fmt::Debug for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Axiom")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("domain", &self.domain)
            .finish()
    }
}

pub static AXIOMS: &[Axiom] = &[
    Axiom { id: "efficiency", arity: Arity::Single, domain: Domain::Any, evaluate: efficiency },
    Axiom {
        id: "individual-rationality",
        arity: Arity::Single,
        domain: Domain::Any,
        evaluate: individual_rationality,
    },
    Axiom {
        id: "elementary-symmetry",
        arity: Arity::Single,
        domain: Domain::Minimal,
        evaluate: elementary_symmetry,
    },
    Axiom {
        id: "zero-normalisation-invariance",
        arity: Arity::Single,
        domain: Domain::Minimal,
        evaluate: zero_normalisation_invariance,
    },
    Axiom {
        id: "elementary-additivity",
        arity: Arity::Pair,
        domain: Domain::Minimal,
        evaluate: elementary_additivity,
    },
    Axiom { id: "zero-excess", arity: Arity::Single, domain: Domain::Minimal, evaluate: zero_excess },
    Axiom {
        id: "elementary-triviality",
        arity: Arity::Single,
        domain: Domain::Minimal,
        evaluate: elementary_triviality,
    },
    Axiom {
        id: "elementary-fairness",
        arity: Arity::Pair,
        domain: Domain::Minimal,
        evaluate: elementary_fairness,
    },
    Axiom {
        id: "null-player-analogue",
        arity: Arity::Single,
        domain: Domain::Minimal,
        evaluate: null_player_analogue,
    },
    Axiom {
        id: "minimal-right",
        arity: Arity::Single,
        domain: Domain::Any,
        evaluate: minimal_right,
    },
    Axiom {
        id: "restricted-proportionality",
        arity: Arity::Single,
        domain: Domain::Any,
        evaluate: restricted_proportionality,
    },
    Axiom { id: "symmetry", arity: Arity::Single, domain: Domain::Complete, evaluate: symmetry },
    Axiom { id: "dummy-player", arity: Arity::Single, domain: Domain::Complete, evaluate: null_player },
    Axiom { id: "null-player", arity: Arity::Single, domain: Domain::Complete, evaluate: null_player },
    Axiom {
        id: "s-equivalence",
        arity: Arity::Single,
        domain: Domain::Complete,
        evaluate: s_equivalence,
    },
    Axiom { id: "additivity", arity: Arity::Pair, domain: Domain::Complete, evaluate: additivity },
];

/// The eight axioms characterising the average value on minimal games.
pub const AVERAGE_VALUE_AXIOMS: [&str; 8] = [
    "efficiency",
    "elementary-symmetry",
    "zero-normalisation-invariance",
    "elementary-additivity",
    "zero-excess",
    "individual-rationality",
    "elementary-triviality",
    "elementary-fairness",
];

pub fn axiom(id: &str) -> Option<&'static Axiom> {
    AXIOMS.iter().find(|a| a.id == id)
}

/// Axioms whose domain admits the value function.
pub fn applicable_axioms(value: ValueFn) -> impl Iterator<Item = &'static Axiom> {
    AXIOMS.iter().filter(move |a| a.domain.admits(value.domain()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomVerdict {
    pub axiom: &'static str,
    pub value: ValueFn,
    pub holds: bool,
    /// Suite elements (games or pairs) evaluated.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl AxiomVerdict {
    /// Re-evaluates the stored counterexample; true when it still fails.
    pub fn recheck(&self) -> Result<bool> {
        let Some(cx) = &self.counterexample else {
            return Ok(false);
        };
        let axiom = axiom(self.axiom).expect("verdicts name registered axioms");
        let games: Vec<&Game> = cx.games.iter().collect();
        Ok((axiom.evaluate)(self.value, &games)?.is_some())
    }
}

fn domain_check(axiom: &Axiom, value: ValueFn, games: &[&Game]) -> Result<()> {
    let mismatch = || Error::AxiomDomain { axiom: axiom.id.into(), value: value.id().into() };
    if !axiom.domain.admits(value.domain()) {
        return Err(mismatch());
    }
    let fits = |g: &Game| match g {
        Game::Complete(_) => value.domain() == Domain::Complete,
        Game::Incomplete(g) => value.domain() == Domain::Minimal && g.is_minimal(),
    };
    if games.iter().all(|g| fits(g)) {
        Ok(())
    } else {
        Err(mismatch())
    }
}

fn run(axiom: &'static Axiom, value: ValueFn, cases: Vec<Vec<&Game>>) -> Result<AxiomVerdict> {
    let mut verdict = AxiomVerdict { axiom: axiom.id, value, holds: true, checked: 0, counterexample: None };
    for case in cases {
        domain_check(axiom, value, &case)?;
        verdict.checked += 1;
        if let Some(cx) = (axiom.evaluate)(value, &case)? {
            verdict.holds = false;
            verdict.counterexample = Some(cx);
            break;
        }
    }
    Ok(verdict)
}

/// Single axioms run on every suite element; pair axioms on consecutive
/// pairs (an odd trailing element is ignored).
pub fn check_axiom(axiom: &'static Axiom, value: ValueFn, suite: &[Game]) -> Result<AxiomVerdict> {
    let cases = match axiom.arity {
        Arity::Single => suite.iter().map(|g| vec![g]).collect(),
        Arity::Pair => suite.chunks_exact(2).map(|p| vec![&p[0], &p[1]]).collect(),
    };
    run(axiom, value, cases)
}

/// Pair axioms on each pair; single axioms on both members of each pair.
pub fn check_axiom_pairwise(
    axiom: &'static Axiom,
    value: ValueFn,
    pairs: &[(Game, Game)],
) -> Result<AxiomVerdict> {
    let cases = match axiom.arity {
        Arity::Pair => pairs.iter().map(|(a, b)| vec![a, b]).collect(),
        Arity::Single => pairs.iter().flat_map(|(a, b)| [vec![a], vec![b]]).collect(),
    };
    run(axiom, value, cases)
}

fn fail(games: &[&Game], players: Option<(usize, usize)>, values: Vec<PayoffVector>, detail: String) -> Option<Counterexample> {
    Some(Counterexample {
        games: games.iter().map(|g| (*g).clone()).collect(),
        players,
        values,
        detail,
    })
}

fn grand_value(g: &Game) -> Rational {
    match g {
        Game::Complete(c) => c.value(c.grand()).clone(),
        Game::Incomplete(i) => i.require(i.grand()).expect("minimal games know N").clone(),
    }
}

fn singletons(g: &Game) -> PayoffVector {
    match g {
        Game::Complete(c) => c.singleton_values(),
        Game::Incomplete(i) => i.singleton_values().expect("minimal games know singletons"),
    }
}

fn minimal(g: &Game) -> &IncompleteGame {
    g.as_incomplete().expect("domain checked")
}

fn complete(g: &Game) -> &CompleteGame {
    g.as_complete().expect("domain checked")
}

fn efficiency(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let x = f.eval(games[0])?;
    let vn = grand_value(games[0]);
    Ok((x.total() != vn).then(|| fail(games, None, vec![x.clone()], format!("sum {} != v(N) = {vn}", x.total()))).flatten())
}

fn individual_rationality(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let x = f.eval(games[0])?;
    let v = singletons(games[0]);
    Ok((0..x.len()).find(|&i| x[i] < v[i]).and_then(|i| {
        fail(games, Some((i, i)), vec![x.clone()], format!("f_{} = {} < v({}) = {}", i + 1, x[i], i + 1, v[i]))
    }))
}

fn elementary_symmetry(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let x = f.eval(games[0])?;
    let v = singletons(games[0]);
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            if v[i] == v[j] && x[i] != x[j] {
                return Ok(fail(games, Some((i, j)), vec![x.clone()], format!("v({}) = v({}) but f differs", i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

fn zero_normalisation_invariance(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let g = minimal(games[0]);
    let x = f.eval(games[0])?;
    let x0 = f.eval(&g.zero_normalise_minimal()?.into())?;
    let v = g.singleton_values()?;
    let expected = &v + &x0;
    Ok((x != expected).then(|| fail(games, None, vec![x, expected], "f(v) != v(i) + f(v0)".into())).flatten())
}

fn pair_sum(games: &[&Game]) -> Result<Game> {
    let (a, b) = (minimal(games[0]), minimal(games[1]));
    Ok(a.try_add(b)?.into())
}

fn elementary_additivity(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let sum = f.eval(&pair_sum(games)?)?;
    let parts = &f.eval(games[0])? + &f.eval(games[1])?;
    Ok((sum != parts).then(|| fail(games, None, vec![sum, parts], "f(v + w) != f(v) + f(w)".into())).flatten())
}

fn zero_excess(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let g = minimal(games[0]);
    if !g.total_excess()?.is_zero() {
        return Ok(None);
    }
    let x = f.eval(games[0])?;
    let v = g.singleton_values()?;
    Ok((x != v).then(|| fail(games, None, vec![x, v], "Delta = 0 but f != singleton values".into())).flatten())
}

fn elementary_triviality(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let n = games[0].n();
    let zero: Game = IncompleteGame::minimal(&vec![Rational::zero(); n], Rational::zero())?.into();
    let x = f.eval(&zero)?;
    Ok((x != PayoffVector::zeros(n)).then(|| fail(&[&zero], None, vec![x], "f(zero game) != 0".into())).flatten())
}

fn elementary_fairness(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let w = minimal(games[1]).singleton_values()?;
    let before = f.eval(games[0])?;
    let after = f.eval(&pair_sum(games)?)?;
    let change = &after - &before;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j] && change[i] != change[j] {
                return Ok(fail(games, Some((i, j)), vec![before, after], format!("w({}) = w({}) but changes differ", i + 1, j + 1)));
            }
        }
    }
    Ok(None)
}

fn null_player_analogue(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let x = f.eval(games[0])?;
    let v = singletons(games[0]);
    Ok((0..x.len()).find(|&i| v[i].is_zero() && !x[i].is_zero()).and_then(|i| {
        fail(games, Some((i, i)), vec![x.clone()], format!("v({}) = 0 but f_{} = {}", i + 1, i + 1, x[i]))
    }))
}

/// The game the τ-axioms refer to: the game itself, or ṽ for minimal games.
fn reference_game(g: &Game) -> Result<CompleteGame> {
    match g {
        Game::Complete(c) => Ok(c.clone()),
        Game::Incomplete(i) => centroid_game(i),
    }
}

/// v − a coalitionwise, kept in the input's representation.
fn shift(g: &Game, a: &PayoffVector) -> Result<Game> {
    Ok(match g {
        Game::Complete(c) => c.shift_by(a).into(),
        Game::Incomplete(i) => {
            let v = i.singleton_values()?;
            let singles: Vec<Rational> = (0..v.len()).map(|k| &v[k] - &a[k]).collect();
            IncompleteGame::minimal(&singles, i.require(i.grand())? - a.total())?.into()
        }
    })
}

fn minimal_right(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let a = minimal_right_vector(&reference_game(games[0])?);
    let x = f.eval(games[0])?;
    let shifted = &a + &f.eval(&shift(games[0], &a)?)?;
    Ok((x != shifted).then(|| fail(games, None, vec![x, shifted], format!("f(v) != a + f(v - a) with a = {a}"))).flatten())
}

/// Minimal games: v(i) moved to 0. Complete games: v − a^v, the game whose
/// minimal right vector vanishes.
fn proportionality_base(g: &Game) -> Result<Game> {
    Ok(match g {
        Game::Complete(c) => c.shift_by(&minimal_right_vector(c)).into(),
        Game::Incomplete(i) => i.zero_normalise_minimal()?.into(),
    })
}

fn restricted_proportionality(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let v0 = proportionality_base(games[0])?;
    let b = reference_game(&v0)?.upper_vector();
    let x = f.eval(&v0)?;
    let proportional = match b.iter().position(|bi| !bi.is_zero()) {
        None => x.iter().all(Zero::is_zero),
        Some(k) => {
            let alpha = &x[k] / &b[k];
            x == b.scale(&alpha)
        }
    };
    Ok((!proportional).then(|| fail(games, None, vec![x, b], "f(v0) is not a multiple of b".into())).flatten())
}

/// Image of a payoff vector under a player permutation.
fn permute_payoff(x: &PayoffVector, perm: &[usize]) -> PayoffVector {
    let mut out = vec![Rational::zero(); x.len()];
    for (i, xi) in x.iter().enumerate() {
        out[perm[i]] = xi.clone();
    }
    PayoffVector::new(out)
}

fn symmetry(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let g = complete(games[0]);
    let x = f.eval(games[0])?;
    for perm in player_orders(g.n()) {
        let y = f.eval(&g.permute(&perm).into())?;
        let expected = permute_payoff(&x, &perm);
        if y != expected {
            return Ok(fail(games, None, vec![y, expected], format!("permutation {perm:?}")));
        }
    }
    Ok(None)
}

fn null_player(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let g = complete(games[0]);
    let n = g.n();
    let x = f.eval(games[0])?;
    for i in 0..n {
        let null = Coalition::all(n).filter(|s| !s.contains(i)).all(|s| g.value(s.with(i)) == g.value(s));
        if null && !x[i].is_zero() {
            return Ok(fail(games, Some((i, i)), vec![x.clone()], format!("player {} adds nothing but gets {}", i + 1, x[i])));
        }
    }
    Ok(None)
}

fn s_equivalence(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let g = complete(games[0]);
    let n = g.n();
    let x = f.eval(games[0])?;
    for k in [int(1), int(2), rat(1, 3)] {
        for c in [int(0), int(5)] {
            let shift = PayoffVector::new(vec![c.clone(); n]);
            let transformed = &g.scale(&k) + &CompleteGame::additive(&shift)?;
            let y = f.eval(&transformed.into())?;
            let expected = &x.scale(&k) + &shift;
            if y != expected {
                return Ok(fail(games, None, vec![y, expected], format!("k = {k}, c = {c}")));
            }
        }
    }
    Ok(None)
}

fn additivity(f: ValueFn, games: &[&Game]) -> Result<Option<Counterexample>> {
    let (a, b) = (complete(games[0]), complete(games[1]));
    if a.n() != b.n() {
        return Err(Error::IncompatiblePair);
    }
    let sum = f.eval(&(a + b).into())?;
    let parts = &f.eval(games[0])? + &f.eval(games[1])?;
    Ok((sum != parts).then(|| fail(games, None, vec![sum, parts], "f(v + w) != f(v) + f(w)".into())).flatten())
}

/// A game on which the average value and the solidarity value are
/// expected to differ or agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishingCase {
    pub label: &'static str,
    pub game: IncompleteGame,
    /// True when some v(i) ≠ v(j), where the two are expected to separate.
    pub expect_separated: bool,
}

pub fn distinguishing_suite() -> Vec<DistinguishingCase> {
    let m = |singles: &[i64], grand: i64| {
        let singles: Vec<Rational> = singles.iter().map(|v| int(*v)).collect();
        IncompleteGame::minimal(&singles, int(grand)).expect("valid")
    };
    vec![
        DistinguishingCase { label: "five players, unequal singletons", game: m(&[0, 1, 2, 1, 4], 10), expect_separated: true },
        DistinguishingCase { label: "equal singletons", game: m(&[1, 1, 1], 6), expect_separated: false },
        DistinguishingCase { label: "zero excess, unequal singletons", game: m(&[3, -1, 2], 4), expect_separated: true },
    ]
}

/// (ζ̃, τ^s) on a distinguishing case.
pub fn separation(case: &DistinguishingCase) -> Result<(PayoffVector, PayoffVector)> {
    Ok((average_value(&case.game)?, solidarity_tau(&case.game)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{ExcessSign, GameSampler};

    fn minimal_suite(seed: u64, n: usize, count: usize) -> Vec<Game> {
        let mut s = GameSampler::new(seed);
        (0..count).map(|_| s.minimal(n, ExcessSign::Extendable).into()).collect()
    }

    #[test]
    fn average_value_passes_its_axioms() {
        for n in 3..=4 {
            let suite = minimal_suite(n as u64, n, 12);
            for id in AVERAGE_VALUE_AXIOMS {
                let verdict = check_axiom(axiom(id).unwrap(), ValueFn::Average, &suite).unwrap();
                assert!(verdict.holds, "{id}: {:?}", verdict.counterexample);
            }
        }
    }

    #[test]
    fn null_player_analogue_fails_for_average_value() {
        let g: Game = IncompleteGame::minimal(&[int(0), int(1), int(1)], int(5)).unwrap().into();
        let v = check_axiom(axiom("null-player-analogue").unwrap(), ValueFn::Average, &[g]).unwrap();
        assert!(!v.holds);
        let cx = v.counterexample.clone().unwrap();
        assert_eq!(cx.values[0][0], int(1));
        assert!(v.recheck().unwrap());
    }

    #[test]
    fn equal_split_fails_zero_excess() {
        let g: Game = IncompleteGame::minimal(&[int(3), int(-1), int(2)], int(4)).unwrap().into();
        let ax = axiom("zero-excess").unwrap();
        assert!(!check_axiom(ax, ValueFn::EqualSplit, std::slice::from_ref(&g)).unwrap().holds);
        assert!(check_axiom(ax, ValueFn::Average, &[g]).unwrap().holds);
    }

    #[test]
    fn tau_axioms_on_one_convex_games() {
        let mut s = GameSampler::new(5);
        let suite: Vec<Game> = (0..6).map(|_| s.one_convex(3, false).into()).collect();
        for id in ["efficiency", "individual-rationality", "symmetry", "s-equivalence", "minimal-right", "restricted-proportionality"] {
            let v = check_axiom(axiom(id).unwrap(), ValueFn::Tau, &suite).unwrap();
            assert!(v.holds, "{id}: {:?}", v.counterexample);
        }
    }

    #[test]
    fn shapley_axioms_on_random_games() {
        let mut s = GameSampler::new(9);
        let suite: Vec<Game> = (0..6).map(|_| s.complete(3).into()).collect();
        for id in ["efficiency", "symmetry", "null-player", "additivity"] {
            let v = check_axiom(axiom(id).unwrap(), ValueFn::Shapley, &suite).unwrap();
            assert!(v.holds, "{id}");
        }
        let with_null: Game = CompleteGame::from_fn(3, |c| int(c.without(2).mask() as i64)).unwrap().into();
        assert!(check_axiom(axiom("null-player").unwrap(), ValueFn::Shapley, &[with_null]).unwrap().holds);
    }

    #[test]
    fn domain_mismatch_is_an_error() {
        let g: Game = IncompleteGame::minimal(&[int(0), int(1)], int(3)).unwrap().into();
        assert!(matches!(
            check_axiom(axiom("symmetry").unwrap(), ValueFn::Average, std::slice::from_ref(&g)),
            Err(Error::AxiomDomain { .. })
        ));
        assert!(matches!(
            check_axiom(axiom("efficiency").unwrap(), ValueFn::Tau, &[g]),
            Err(Error::AxiomDomain { .. })
        ));
    }

    #[test]
    fn incompatible_pairs_are_rejected() {
        let a: Game = IncompleteGame::minimal(&[int(0), int(1)], int(3)).unwrap().into();
        let b: Game = IncompleteGame::minimal(&[int(0), int(1), int(0)], int(3)).unwrap().into();
        assert_eq!(
            check_axiom_pairwise(axiom("elementary-additivity").unwrap(), ValueFn::Average, &[(a, b)]),
            Err(Error::IncompatiblePair)
        );
    }

    #[test]
    fn distinguishing_cases_follow_definitions() {
        for case in distinguishing_suite() {
            let (zeta, solidarity) = separation(&case).unwrap();
            assert_eq!(zeta, solidarity, "{}", case.label);
        }
    }
}
