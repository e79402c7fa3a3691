//! Complete and incomplete TU games with their derived quantities.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Sub};

use num_traits::Zero;

use crate::coalition::{Coalition, MAX_PLAYERS};
use crate::error::{Error, Result};
use crate::rational::{format_rational, sum, Rational};

fn check_players(n: usize) -> Result<()> {
    if n == 0 || n > MAX_PLAYERS {
        return Err(Error::InvalidPlayerCount(n));
    }
    Ok(())
}

/// A payoff (or upper, or concession) vector indexed by 0-based player.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PayoffVector(Vec<Rational>);

impl PayoffVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        PayoffVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        PayoffVector(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn total(&self) -> Rational {
        sum(&self.0)
    }

    /// x(S) = Σ_{i∈S} x_i.
    pub fn over(&self, coalition: Coalition) -> Rational {
        coalition.players().fold(Rational::zero(), |acc, i| acc + &self.0[i])
    }

    pub fn scale(&self, k: &Rational) -> PayoffVector {
        PayoffVector(self.0.iter().map(|x| x * k).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }
}

impl Index<usize> for PayoffVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &PayoffVector {
    type Output = PayoffVector;
    fn add(self, rhs: &PayoffVector) -> PayoffVector {
        PayoffVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &PayoffVector {
    type Output = PayoffVector;
    fn sub(self, rhs: &PayoffVector) -> PayoffVector {
        PayoffVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Space separated exact rationals, e.g. `2/5 7/5 12/5`.
impl fmt::Display for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All 2^n excesses sorted by value non-increasing, ties by ascending mask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExcessProfile {
    entries: Vec<(Coalition, Rational)>,
}

impl ExcessProfile {
    pub fn entries(&self) -> &[(Coalition, Rational)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lexicographic comparison of the sorted excess values (coalitions are ignored).
    pub fn lex_cmp(&self, other: &ExcessProfile) -> Ordering {
        for ((_, a), (_, b)) in self.entries.iter().zip(&other.entries) {
            match a.cmp(b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.entries.len().cmp(&other.entries.len())
    }
}

/// A game (N, v) with every coalition value known. `values[mask]` is v(S).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CompleteGame {
    n: usize,
    values: Vec<Rational>,
}

impl CompleteGame {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self> {
        check_players(n)?;
        if values.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                found: values.len(),
            });
        }
        if !values[0].is_zero() {
            return Err(Error::NonZeroEmpty);
        }
        Ok(CompleteGame { n, values })
    }

    /// Builds a game from a closure; the closure's value at ∅ is ignored.
    pub fn from_fn<F: FnMut(Coalition) -> Rational>(n: usize, mut f: F) -> Result<Self> {
        check_players(n)?;
        let values = Coalition::all(n)
            .map(|s| if s.is_empty() { Rational::zero() } else { f(s) })
            .collect();
        Ok(CompleteGame { n, values })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| Rational::zero())
    }

    /// v(S) = Σ_{i∈S} c_i.
    pub fn additive(weights: &PayoffVector) -> Result<Self> {
        Self::from_fn(weights.len(), |s| weights.over(s))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn value(&self, coalition: Coalition) -> &Rational {
        &self.values[coalition.index()]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn set(&mut self, coalition: Coalition, value: Rational) {
        assert!(!coalition.is_empty(), "v(∅) is fixed at 0");
        self.values[coalition.index()] = value;
    }

    pub fn scale(&self, k: &Rational) -> CompleteGame {
        CompleteGame {
            n: self.n,
            values: self.values.iter().map(|v| v * k).collect(),
        }
    }

    /// b_i = v(N) − v(N∖i).
    pub fn upper_vector(&self) -> PayoffVector {
        let grand = self.grand();
        let vn = self.value(grand);
        PayoffVector((0..self.n).map(|i| vn - self.value(grand.without(i))).collect())
    }

    /// g(S) = b(S) − v(S).
    pub fn gap(&self, coalition: Coalition) -> Rational {
        self.upper_vector().over(coalition) - self.value(coalition)
    }

    /// The gap for every coalition at once, indexed by mask.
    pub fn gaps(&self) -> Vec<Rational> {
        let b = self.upper_vector();
        Coalition::all(self.n)
            .map(|s| b.over(s) - self.value(s))
            .collect()
    }

    /// e(S, x) = v(S) − x(S).
    pub fn excess(&self, coalition: Coalition, x: &PayoffVector) -> Rational {
        self.value(coalition) - x.over(coalition)
    }

    pub fn excess_profile(&self, x: &PayoffVector) -> ExcessProfile {
        let mut entries: Vec<(Coalition, Rational)> = Coalition::all(self.n)
            .map(|s| (s, self.excess(s, x)))
            .collect();
        entries.sort_by(|(sa, a), (sb, b)| b.cmp(a).then(sa.cmp(sb)));
        ExcessProfile { entries }
    }

    /// v_0(S) = v(S) − Σ_{i∈S} v(i).
    pub fn zero_normalise(&self) -> CompleteGame {
        let singles = self.singleton_values();
        CompleteGame {
            n: self.n,
            values: Coalition::all(self.n)
                .map(|s| self.value(s) - singles.over(s))
                .collect(),
        }
    }

    pub fn singleton_values(&self) -> PayoffVector {
        PayoffVector((0..self.n).map(|i| self.value(Coalition::singleton(i)).clone()).collect())
    }

    /// (v − x)(S) = v(S) − x(S).
    pub fn shift_by(&self, x: &PayoffVector) -> CompleteGame {
        CompleteGame {
            n: self.n,
            values: Coalition::all(self.n)
                .map(|s| self.value(s) - x.over(s))
                .collect(),
        }
    }

    /// The game π*v with (π*v)(π(S)) = v(S); `perm[i]` is the image of player i.
    pub fn permute(&self, perm: &[usize]) -> CompleteGame {
        let mut values = vec![Rational::zero(); self.values.len()];
        for s in Coalition::all(self.n) {
            let image = Coalition::from_players(s.players().map(|i| perm[i]));
            values[image.index()] = self.value(s).clone();
        }
        CompleteGame { n: self.n, values }
    }

    pub fn restrict<I: IntoIterator<Item = Coalition>>(&self, known: I) -> IncompleteGame {
        let values = known
            .into_iter()
            .map(|s| (s, self.value(s).clone()))
            .collect();
        IncompleteGame::new(self.n, values).expect("restriction of a valid game is valid")
    }

    fn zip_with(&self, other: &CompleteGame, f: impl Fn(&Rational, &Rational) -> Rational) -> CompleteGame {
        assert_eq!(self.n, other.n, "player count mismatch");
        CompleteGame {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl Add for &CompleteGame {
    type Output = CompleteGame;
    fn add(self, rhs: &CompleteGame) -> CompleteGame {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &CompleteGame {
    type Output = CompleteGame;
    fn sub(self, rhs: &CompleteGame) -> CompleteGame {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// Shape of the known set K.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KnownShape {
    /// Exactly ∅, the singletons and N.
    Minimal,
    /// Contains N and every N∖i.
    DefinedUpperVector,
    General,
}

/// An incomplete game (N, K, v): values are known exactly on K.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncompleteGame {
    n: usize,
    values: BTreeMap<Coalition, Rational>,
}

impl IncompleteGame {
    /// ∅ is added with value 0 when absent.
    pub fn new(n: usize, mut values: BTreeMap<Coalition, Rational>) -> Result<Self> {
        check_players(n)?;
        for s in values.keys() {
            if !s.fits(n) {
                return Err(Error::CoalitionOutOfRange(*s));
            }
        }
        match values.get(&Coalition::EMPTY) {
            Some(v) if !v.is_zero() => return Err(Error::NonZeroEmpty),
            Some(_) => {}
            None => {
                values.insert(Coalition::EMPTY, Rational::zero());
            }
        }
        Ok(IncompleteGame { n, values })
    }

    /// The minimal game with the given singleton values and v(N).
    pub fn minimal(singletons: &[Rational], grand: Rational) -> Result<Self> {
        let n = singletons.len();
        check_players(n)?;
        let mut values: BTreeMap<Coalition, Rational> = singletons
            .iter()
            .enumerate()
            .map(|(i, v)| (Coalition::singleton(i), v.clone()))
            .collect();
        values.insert(Coalition::grand(n), grand);
        Self::new(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn grand(&self) -> Coalition {
        Coalition::grand(self.n)
    }

    pub fn is_known(&self, coalition: Coalition) -> bool {
        self.values.contains_key(&coalition)
    }

    pub fn value(&self, coalition: Coalition) -> Option<&Rational> {
        self.values.get(&coalition)
    }

    pub fn require(&self, coalition: Coalition) -> Result<&Rational> {
        self.value(coalition).ok_or(Error::MissingCoalition(coalition))
    }

    /// Known coalitions with their values, ascending by mask.
    pub fn known(&self) -> impl Iterator<Item = (Coalition, &Rational)> {
        self.values.iter().map(|(s, v)| (*s, v))
    }

    pub fn known_count(&self) -> usize {
        self.values.len()
    }

    /// Coalitions outside K, ascending by mask.
    pub fn unknown(&self) -> Vec<Coalition> {
        Coalition::all(self.n).filter(|s| !self.is_known(*s)).collect()
    }

    pub fn is_minimal(&self) -> bool {
        let grand = self.grand();
        self.values.len() == minimal_known_count(self.n)
            && self
                .values
                .keys()
                .all(|s| s.is_empty() || *s == grand || s.size() == 1)
            && self.is_known(grand)
    }

    pub fn has_defined_upper_vector(&self) -> bool {
        let grand = self.grand();
        self.is_known(grand) && (0..self.n).all(|i| self.is_known(grand.without(i)))
    }

    /// Minimal takes precedence; for n ≤ 2 a minimal K is also complete.
    pub fn shape(&self) -> KnownShape {
        if self.is_minimal() {
            KnownShape::Minimal
        } else if self.has_defined_upper_vector() {
            KnownShape::DefinedUpperVector
        } else {
            KnownShape::General
        }
    }

    pub fn require_minimal(&self) -> Result<()> {
        if self.is_minimal() {
            Ok(())
        } else {
            Err(Error::NotMinimal)
        }
    }

    pub fn require_upper_vector(&self) -> Result<()> {
        if self.has_defined_upper_vector() {
            Ok(())
        } else {
            Err(Error::NoUpperVector)
        }
    }

    /// The upper vector b, computable when K contains N and every N∖i.
    pub fn upper_vector(&self) -> Result<PayoffVector> {
        self.require_upper_vector()?;
        let grand = self.grand();
        let vn = &self.values[&grand];
        Ok(PayoffVector::new(
            (0..self.n).map(|i| vn - &self.values[&grand.without(i)]).collect(),
        ))
    }

    /// Singleton values v(i); errors if one is unknown.
    pub fn singleton_values(&self) -> Result<PayoffVector> {
        (0..self.n)
            .map(|i| self.require(Coalition::singleton(i)).cloned())
            .collect::<Result<Vec<_>>>()
            .map(PayoffVector::new)
    }

    /// Δ = v(N) − Σ_i v(i).
    pub fn total_excess(&self) -> Result<Rational> {
        let vn = self.require(self.grand())?;
        Ok(vn - self.singleton_values()?.total())
    }

    /// Zero-normalisation of a minimal game: singletons 0, v_0(N) = Δ.
    pub fn zero_normalise_minimal(&self) -> Result<IncompleteGame> {
        self.require_minimal()?;
        let delta = self.total_excess()?;
        IncompleteGame::minimal(&vec![Rational::zero(); self.n], delta)
    }

    /// True when `w` has the same player count and matches v on all of K.
    pub fn agrees_with(&self, w: &CompleteGame) -> bool {
        self.first_disagreement(w).is_none() && w.n() == self.n
    }

    pub fn first_disagreement(&self, w: &CompleteGame) -> Option<Coalition> {
        self.values
            .iter()
            .find(|(s, v)| !s.fits(w.n()) || w.value(**s) != *v)
            .map(|(s, _)| *s)
    }

    pub fn same_known_set(&self, other: &IncompleteGame) -> bool {
        self.n == other.n && self.values.keys().eq(other.values.keys())
    }

    /// Coordinatewise sum over a shared K.
    pub fn try_add(&self, other: &IncompleteGame) -> Result<IncompleteGame> {
        if !self.same_known_set(other) {
            return Err(Error::IncompatiblePair);
        }
        let values = self
            .values
            .iter()
            .map(|(s, v)| (*s, v + &other.values[s]))
            .collect();
        IncompleteGame::new(self.n, values)
    }

    pub fn scale(&self, k: &Rational) -> IncompleteGame {
        IncompleteGame {
            n: self.n,
            values: self.values.iter().map(|(s, v)| (*s, v * k)).collect(),
        }
    }

    pub fn permute(&self, perm: &[usize]) -> IncompleteGame {
        IncompleteGame {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(s, v)| (Coalition::from_players(s.players().map(|i| perm[i])), v.clone()))
                .collect(),
        }
    }
}

/// |K_min|: ∅, n singletons and N (collapsing for n = 1).
pub fn minimal_known_count(n: usize) -> usize {
    if n == 1 {
        2
    } else {
        n + 2
    }
}

/// Either kind of game, as read from a file or held in a suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Game {
    Complete(CompleteGame),
    Incomplete(IncompleteGame),
}

impl Game {
    pub fn n(&self) -> usize {
        match self {
            Game::Complete(g) => g.n(),
            Game::Incomplete(g) => g.n(),
        }
    }

    pub fn as_complete(&self) -> Option<&CompleteGame> {
        match self {
            Game::Complete(g) => Some(g),
            Game::Incomplete(_) => None,
        }
    }

    pub fn as_incomplete(&self) -> Option<&IncompleteGame> {
        match self {
            Game::Complete(_) => None,
            Game::Incomplete(g) => Some(g),
        }
    }
}

impl From<CompleteGame> for Game {
    fn from(g: CompleteGame) -> Self {
        Game::Complete(g)
    }
}

impl From<IncompleteGame> for Game {
    fn from(g: IncompleteGame) -> Self {
        Game::Incomplete(g)
    }
}
