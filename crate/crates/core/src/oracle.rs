//! Brute-force ground truth: permutation Shapley, LP bounds and vertex
//! enumeration over the full 1-convexity system, seeded game generators,
//! and a report that checks stated results against direct computation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coalition::{player_orders, Coalition};
use crate::error::{Error, Result};
use crate::game::{CompleteGame, Game, IncompleteGame, KnownShape, PayoffVector};
use crate::linalg::{solve_square, EchelonBasis};
use crate::lp::{solve, Constraint, LinearProgram, LpStatus, Relation, Sense};
use crate::oneconvex::{
    decompose, decompose_minimal, description, extreme_game_minimal, is_extendable,
    is_extendable_minimal, is_one_convex, is_upper_game_one_convex, one_convexity_slack,
    upper_game, upper_game_one_convexity_formula, DecompositionCertificate, ExtensionDescription,
    Membership,
};
use crate::rational::{int, rat, Rational};
use crate::values::{
    average_nucleolus, average_shapley, average_tau, average_value, conic_shapley, conic_tau,
    equal_split, nucleolus, ray_centre_marginal, ray_centre_shapley, ray_centre_shapley_closed_form,
    shapley, shapley_alternate, solidarity_tau, tau_one_convex,
};

pub const PERMUTATION_ORACLE_MAX: usize = 8;
pub const VERTEX_MAX_MINIMAL: usize = 4;
pub const VERTEX_MAX_UPPER_VECTOR: usize = 5;

/// Average of marginal-contribution vectors over all n! orders.
pub fn shapley_permutation_oracle(g: &CompleteGame) -> Result<PayoffVector> {
    let n = g.n();
    if n > PERMUTATION_ORACLE_MAX {
        return Err(Error::TooLarge { n, max: PERMUTATION_ORACLE_MAX });
    }
    let mut totals = vec![Rational::zero(); n];
    let orders = player_orders(n);
    for order in &orders {
        let mut before = Coalition::EMPTY;
        for &i in order {
            let after = before.with(i);
            totals[i] += g.value(after) - g.value(before);
            before = after;
        }
    }
    let count = int(orders.len() as i64);
    Ok(PayoffVector::new(totals.into_iter().map(|t| t / &count).collect()))
}

/// Sparse rows of the 1-convexity system over coalition values:
/// w(S) − w(N) + Σ_{j∉S} (w(N) − w(N∖j)) ≤ 0 for ∅ ≠ S ⊊ N, and
/// Σ_j (w(N) − w(N∖j)) − w(N) ≥ 0.
fn one_convexity_rows(n: usize) -> Vec<(BTreeMap<Coalition, Rational>, Relation)> {
    let grand = Coalition::grand(n);
    let mut rows = Vec::new();
    let add = |row: &mut BTreeMap<Coalition, Rational>, s: Coalition, c: i64| {
        *row.entry(s).or_insert_with(Rational::zero) += int(c);
    };
    for s in Coalition::all(n).filter(|s| !s.is_empty() && *s != grand) {
        let mut row = BTreeMap::new();
        add(&mut row, s, 1);
        add(&mut row, grand, -1);
        for j in s.complement(n).players() {
            add(&mut row, grand, 1);
            add(&mut row, grand.without(j), -1);
        }
        rows.push((row, Relation::Le));
    }
    let mut row = BTreeMap::new();
    for j in 0..n {
        add(&mut row, grand, 1);
        add(&mut row, grand.without(j), -1);
    }
    add(&mut row, grand, -1);
    rows.push((row, Relation::Ge));
    rows
}

/// The 1-convexity system of an incomplete game with the known values
/// substituted; variables are the unknown coalition values.
#[derive(Clone, Debug)]
pub struct ExtensionSystem {
    game: IncompleteGame,
    unknowns: Vec<Coalition>,
    /// Rows over the unknowns, all in ≤ form.
    rows: Vec<Constraint>,
    constants_hold: bool,
}

impl ExtensionSystem {
    pub fn new(g: &IncompleteGame) -> Self {
        let unknowns = g.unknown();
        let position: BTreeMap<Coalition, usize> =
            unknowns.iter().enumerate().map(|(k, s)| (*s, k)).collect();
        let mut rows = Vec::new();
        let mut constants_hold = true;
        for (row, relation) in one_convexity_rows(g.n()) {
            let sign = if relation == Relation::Ge { -int(1) } else { int(1) };
            let mut coefficients = vec![Rational::zero(); unknowns.len()];
            let mut rhs = Rational::zero();
            for (s, c) in row {
                let c = &c * &sign;
                match g.value(s) {
                    Some(v) => rhs -= c * v,
                    None => coefficients[position[&s]] += c,
                }
            }
            if coefficients.iter().all(Zero::is_zero) {
                constants_hold &= !rhs.is_negative();
            } else {
                rows.push(Constraint { coefficients, relation: Relation::Le, rhs });
            }
        }
        ExtensionSystem { game: g.clone(), unknowns, rows, constants_hold }
    }

    pub fn unknowns(&self) -> &[Coalition] {
        &self.unknowns
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    fn program(&self, sense: Sense, objective: Vec<Rational>) -> LinearProgram {
        let mut lp = LinearProgram::new(self.unknowns.len(), sense, objective).expect("has unknowns");
        for row in &self.rows {
            lp.add_constraint(row.coefficients.clone(), row.relation, row.rhs.clone())
                .expect("row width matches");
        }
        lp
    }

    /// Whether some 1-convex game agrees with the known values.
    pub fn is_feasible(&self) -> bool {
        if !self.constants_hold {
            return false;
        }
        if self.unknowns.is_empty() {
            return true;
        }
        let lp = self.program(Sense::Minimize, vec![Rational::zero(); self.unknowns.len()]);
        solve(&lp).status == LpStatus::Optimal
    }

    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        self.constants_hold && self.rows.iter().all(|r| r.is_satisfied(x))
    }

    /// The complete game with the unknown values taken from `x`.
    pub fn game_from(&self, x: &[Rational]) -> CompleteGame {
        let mut values: BTreeMap<Coalition, Rational> =
            self.game.known().map(|(s, v)| (s, v.clone())).collect();
        for (s, v) in self.unknowns.iter().zip(x) {
            values.insert(*s, v.clone());
        }
        CompleteGame::from_fn(self.game.n(), |s| values[&s].clone()).expect("valid n")
    }

    fn extent(&self, target: usize, sense: Sense) -> Extent {
        let mut objective = vec![Rational::zero(); self.unknowns.len()];
        objective[target] = Rational::one();
        let outcome = solve(&self.program(sense, objective));
        match outcome.status {
            LpStatus::Optimal => Extent::Finite(outcome.objective_value.expect("optimal")),
            _ => Extent::Unbounded,
        }
    }
}

/// Whether the known values extend to a 1-convex game, decided by LP.
pub fn extendable_by_lp(g: &IncompleteGame) -> bool {
    ExtensionSystem::new(g).is_feasible()
}

/// A finite optimum or an unbounded direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extent {
    Finite(Rational),
    Unbounded,
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{}", crate::rational::format_rational(v)),
            Extent::Unbounded => write!(f, "unbounded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateBounds {
    pub max: Extent,
    pub min: Extent,
}

/// Exact sup and inf of every unknown coordinate over all 1-convex extensions.
pub fn coordinate_bounds_lp(g: &IncompleteGame) -> Result<BTreeMap<Coalition, CoordinateBounds>> {
    let system = ExtensionSystem::new(g);
    if !system.is_feasible() {
        return Err(Error::NotExtendable("no 1-convex game agrees with the known values".into()));
    }
    Ok(system
        .unknowns
        .iter()
        .enumerate()
        .map(|(k, s)| {
            let bounds = CoordinateBounds {
                max: system.extent(k, Sense::Maximize),
                min: system.extent(k, Sense::Minimize),
            };
            (*s, bounds)
        })
        .collect())
}

/// All vertices of the true extension polyhedron, found by solving every
/// linearly independent choice of tight constraints.
pub fn vertex_enumeration(g: &IncompleteGame) -> Result<Vec<CompleteGame>> {
    let n = g.n();
    let max = match g.shape() {
        KnownShape::Minimal => VERTEX_MAX_MINIMAL,
        KnownShape::DefinedUpperVector => VERTEX_MAX_UPPER_VECTOR,
        KnownShape::General => return Err(Error::UnsupportedShape),
    };
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    let system = ExtensionSystem::new(g);
    if !system.constants_hold {
        return Ok(Vec::new());
    }
    let u = system.unknowns.len();
    if u == 0 {
        return Ok(vec![system.game_from(&[])]);
    }
    let mut found = BTreeSet::new();
    let mut chosen = Vec::new();
    tight_subsets(&system, 0, &EchelonBasis::new(), &mut chosen, &mut found);
    Ok(found.into_iter().map(|x| system.game_from(&x)).collect())
}

fn tight_subsets(
    system: &ExtensionSystem,
    start: usize,
    basis: &EchelonBasis,
    chosen: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<Rational>>,
) {
    let u = system.unknowns.len();
    if chosen.len() == u {
        let a = chosen.iter().map(|&r| system.rows[r].coefficients.clone()).collect();
        let b = chosen.iter().map(|&r| system.rows[r].rhs.clone()).collect();
        if let Some(x) = solve_square(a, b) {
            if system.is_satisfied_by(&x) {
                found.insert(x);
            }
        }
        return;
    }
    let m = system.rows.len();
    for r in start..m {
        if m - r < u - chosen.len() {
            break;
        }
        let mut next = basis.clone();
        if next.try_insert(&system.rows[r].coefficients) {
            chosen.push(r);
            tight_subsets(system, r + 1, &next, chosen, found);
            chosen.pop();
        }
    }
}

/// Sign of Δ requested from [`GameSampler::minimal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExcessSign {
    Positive,
    Zero,
    Negative,
    /// Positive, zero or negative with weights 3:1:2.
    Mixed,
    /// Positive or zero.
    Extendable,
}

/// Seeded generator of game instances with small-denominator rationals.
pub struct GameSampler {
    rng: ChaCha8Rng,
}

const DENOMINATORS: [i64; 5] = [1, 2, 3, 4, 6];

impl GameSampler {
    pub fn new(seed: u64) -> Self {
        GameSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A rational in [lo, hi] with denominator from {1, 2, 3, 4, 6}.
    pub fn rational(&mut self, lo: i64, hi: i64) -> Rational {
        let d = DENOMINATORS[self.rng.gen_range(0..DENOMINATORS.len())];
        rat(self.rng.gen_range(lo * d..=hi * d), d)
    }

    fn positive(&mut self, hi: i64) -> Rational {
        loop {
            let r = self.rational(0, hi);
            if r.is_positive() {
                return r;
            }
        }
    }

    pub fn coin(&mut self, numerator: u32, denominator: u32) -> bool {
        self.rng.gen_ratio(numerator, denominator)
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn minimal(&mut self, n: usize, sign: ExcessSign) -> IncompleteGame {
        let sign = match sign {
            ExcessSign::Mixed => match self.rng.gen_range(0..6) {
                0..=2 => ExcessSign::Positive,
                3 => ExcessSign::Zero,
                _ => ExcessSign::Negative,
            },
            ExcessSign::Extendable => {
                if self.coin(1, 4) {
                    ExcessSign::Zero
                } else {
                    ExcessSign::Positive
                }
            }
            other => other,
        };
        let singles: Vec<Rational> = (0..n).map(|_| self.rational(-3, 3)).collect();
        let delta = match sign {
            ExcessSign::Positive => self.positive(5),
            ExcessSign::Zero => Rational::zero(),
            _ => -self.positive(5),
        };
        let grand = singles.iter().fold(delta, |acc, v| acc + v);
        IncompleteGame::minimal(&singles, grand).expect("valid minimal game")
    }

    /// A 1-convex game built from a random upper vector b and gaps
    /// g(S) ≥ g(N) with g(N∖i) = g(N).
    pub fn one_convex(&mut self, n: usize, zero_grand_gap: bool) -> CompleteGame {
        let b = PayoffVector::new((0..n).map(|_| self.rational(-3, 5)).collect());
        let grand_gap = if zero_grand_gap || n == 1 || self.coin(1, 4) {
            Rational::zero()
        } else {
            self.rational(0, 4)
        };
        let mut game = CompleteGame::zero(n).expect("valid n");
        for s in Coalition::all(n).filter(|s| !s.is_empty()) {
            let gap = if s.size() + 1 >= n || self.coin(1, 4) {
                grand_gap.clone()
            } else {
                &grand_gap + self.positive(4)
            };
            game.set(s, b.over(s) - gap);
        }
        game
    }

    pub fn complete(&mut self, n: usize) -> CompleteGame {
        CompleteGame::from_fn(n, |_| self.rational(-5, 5)).expect("valid n")
    }

    /// A game whose known set contains N and every N∖i, obtained by
    /// restricting a random 1-convex game; at least one coalition is
    /// unknown whenever n ≥ 3.
    pub fn upper_vector(&mut self, n: usize) -> IncompleteGame {
        let full = self.one_convex(n, false);
        let grand = Coalition::grand(n);
        let optional: Vec<Coalition> = Coalition::all(n)
            .filter(|s| !s.is_empty() && *s != grand && s.size() + 1 != n)
            .collect();
        let mut unknown: BTreeSet<Coalition> =
            optional.iter().copied().filter(|_| self.coin(1, 2)).collect();
        if unknown.is_empty() && !optional.is_empty() {
            unknown.insert(optional[self.index(optional.len())]);
        }
        full.restrict(Coalition::all(n).filter(|s| !unknown.contains(s)))
    }

    /// Random convex weights over the extreme games and nonnegative ray weights.
    pub fn certificate(&mut self, d: &ExtensionDescription) -> DecompositionCertificate {
        let raw: Vec<Rational> = (0..d.extreme_games.len())
            .map(|_| if self.coin(1, 3) { Rational::zero() } else { self.positive(5) })
            .collect();
        let total = raw.iter().fold(Rational::zero(), |a, x| a + x);
        let alphas = if total.is_zero() {
            let k = d.extreme_games.len();
            let mut alphas = vec![Rational::zero(); k];
            alphas[self.index(k)] = Rational::one();
            alphas
        } else {
            raw.into_iter().map(|x| x / &total).collect()
        };
        let betas = d
            .ray_index_set
            .iter()
            .map(|t| (*t, if self.coin(1, 3) { Rational::zero() } else { self.rational(0, 3) }))
            .collect();
        DecompositionCertificate { alphas, betas }
    }
}

/// The n = 3 minimal game with zero singletons and v(N) = 1.
pub fn three_player_instance() -> IncompleteGame {
    IncompleteGame::minimal(&[int(0), int(0), int(0)], int(1)).expect("valid")
}

/// The 5-player minimal game with singletons (0, 1, 2, 1, 4) and v(N) = 10.
pub fn five_player_instance() -> IncompleteGame {
    IncompleteGame::minimal(&[int(0), int(1), int(2), int(1), int(4)], int(10)).expect("valid")
}

/// The game w(S) = |S| · per_player restricted to K = 2^N minus `hidden`.
pub fn additive_with_hidden(n: usize, per_player: i64, hidden: &[Coalition]) -> IncompleteGame {
    CompleteGame::from_fn(n, |s| int(per_player * s.size() as i64))
        .expect("valid n")
        .restrict(Coalition::all(n).filter(|s| !hidden.contains(s)))
}

fn built_in_instances() -> Vec<Game> {
    let singleton = |i| Coalition::singleton(i);
    let all_singletons = |n: usize| (0..n).map(Coalition::singleton).collect::<Vec<_>>();
    vec![
        five_player_instance().into(),
        three_player_instance().into(),
        IncompleteGame::minimal(&[int(1), int(1), int(1)], int(3)).expect("valid").into(),
        IncompleteGame::minimal(&[int(1), int(2), int(0), int(-1)], int(2)).expect("valid").into(),
        IncompleteGame::minimal(&[int(1), int(1), int(1)], int(2)).expect("valid").into(),
        additive_with_hidden(3, 2, &[singleton(0)]).into(),
        additive_with_hidden(4, 2, &[singleton(0)]).into(),
        additive_with_hidden(4, 3, &all_singletons(4)).into(),
    ]
}

/// Instances shared by every claim: the caller's, the built-in ones, then
/// a seeded random pool.
pub fn claim_pool(seed: u64, extra: &[Game]) -> Vec<Game> {
    let mut pool: Vec<Game> = extra.to_vec();
    pool.extend(built_in_instances());
    let mut sampler = GameSampler::new(seed);
    for n in 3..=5 {
        for _ in 0..12 {
            pool.push(sampler.minimal(n, ExcessSign::Mixed).into());
        }
        for _ in 0..4 {
            pool.push(sampler.minimal(n, ExcessSign::Zero).into());
        }
        for _ in 0..6 {
            pool.push(sampler.upper_vector(n).into());
        }
        for _ in 0..6 {
            pool.push(sampler.one_convex(n, false).into());
        }
        pool.push(sampler.complete(n).into());
    }
    pool.push(sampler.complete(6).into());
    pool
}

/// A result whose statement the report checks on concrete instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    ExtendableIffNonnegativeExcess,
    UpperGameFormula,
    UpperGameOneConvexityCriterion,
    ExtremeGamesAreVertices,
    ExtremeGamesTight,
    DescriptionSoundness,
    DescriptionCompleteness,
    ZeroExcessSingleExtension,
    AverageValueCoincidences,
    SolidarityTauEqualSplit,
    NucleolusEqualsTau,
    ShapleyFormulasAgree,
    UpperVectorSingleVertex,
    UpperVectorDescriptionCompleteness,
    UpperVectorTauInvariant,
    RayCentreMarginalTable,
    RayCentreShapleyClosedForm,
    RayCentreShapleyNegated,
    SmallGameShapleyCoincidence,
    SingletonsUnknownShapleyDivergence,
}

impl Claim {
    pub const ALL: [Claim; 20] = [
        Claim::ExtendableIffNonnegativeExcess,
        Claim::UpperGameFormula,
        Claim::UpperGameOneConvexityCriterion,
        Claim::ExtremeGamesAreVertices,
        Claim::ExtremeGamesTight,
        Claim::DescriptionSoundness,
        Claim::DescriptionCompleteness,
        Claim::ZeroExcessSingleExtension,
        Claim::AverageValueCoincidences,
        Claim::SolidarityTauEqualSplit,
        Claim::NucleolusEqualsTau,
        Claim::ShapleyFormulasAgree,
        Claim::UpperVectorSingleVertex,
        Claim::UpperVectorDescriptionCompleteness,
        Claim::UpperVectorTauInvariant,
        Claim::RayCentreMarginalTable,
        Claim::RayCentreShapleyClosedForm,
        Claim::RayCentreShapleyNegated,
        Claim::SmallGameShapleyCoincidence,
        Claim::SingletonsUnknownShapleyDivergence,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Claim::ExtendableIffNonnegativeExcess => "extendable-iff-nonnegative-excess",
            Claim::UpperGameFormula => "upper-game-formula",
            Claim::UpperGameOneConvexityCriterion => "upper-game-one-convexity-criterion",
            Claim::ExtremeGamesAreVertices => "extreme-games-are-vertices",
            Claim::ExtremeGamesTight => "extreme-games-tight",
            Claim::DescriptionSoundness => "description-soundness",
            Claim::DescriptionCompleteness => "description-completeness",
            Claim::ZeroExcessSingleExtension => "zero-excess-single-extension",
            Claim::AverageValueCoincidences => "average-value-coincidences",
            Claim::SolidarityTauEqualSplit => "solidarity-tau-equal-split",
            Claim::NucleolusEqualsTau => "nucleolus-equals-tau",
            Claim::ShapleyFormulasAgree => "shapley-formulas-agree",
            Claim::UpperVectorSingleVertex => "upper-vector-single-vertex",
            Claim::UpperVectorDescriptionCompleteness => "upper-vector-description-completeness",
            Claim::UpperVectorTauInvariant => "upper-vector-tau-invariant",
            Claim::RayCentreMarginalTable => "ray-centre-marginal-table",
            Claim::RayCentreShapleyClosedForm => "ray-centre-shapley-closed-form",
            Claim::RayCentreShapleyNegated => "ray-centre-shapley-negated",
            Claim::SmallGameShapleyCoincidence => "small-game-shapley-coincidence",
            Claim::SingletonsUnknownShapleyDivergence => "singletons-unknown-shapley-divergence",
        }
    }

    pub fn from_id(id: &str) -> Option<Claim> {
        Claim::ALL.into_iter().find(|c| c.id() == id)
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Claim::ExtendableIffNonnegativeExcess => {
                "a minimal game has a 1-convex extension iff Delta >= 0"
            }
            Claim::UpperGameFormula => "LP maxima of unknown coordinates equal the upper game",
            Claim::UpperGameOneConvexityCriterion => {
                "the closed-form criterion decides whether the upper game of a minimal game is 1-convex"
            }
            Claim::ExtremeGamesAreVertices => "each v^i is a vertex of the extension set",
            Claim::ExtremeGamesTight => {
                "each v^i satisfies every 1-convexity inequality with equality"
            }
            Claim::DescriptionSoundness => {
                "convex combinations of extreme games plus nonnegative rays are 1-convex extensions"
            }
            Claim::DescriptionCompleteness => {
                "every vertex of the extension set of a minimal game decomposes over v^1..v^n and the rays"
            }
            Claim::ZeroExcessSingleExtension => {
                "a minimal game with Delta = 0 has the upper game as its only extension"
            }
            Claim::AverageValueCoincidences => {
                "average tau, average Shapley, conic tau, conic Shapley and nucleolus of the centroid equal v(i) + Delta/n"
            }
            Claim::SolidarityTauEqualSplit => "the solidarity tau-value equals v(N)/n",
            Claim::NucleolusEqualsTau => "nucleolus equals tau on 1-convex games",
            Claim::ShapleyFormulasAgree => {
                "definition, alternate formula and permutation average of Shapley agree"
            }
            Claim::UpperVectorSingleVertex => {
                "with N and all N\\i known, the upper game is the only vertex"
            }
            Claim::UpperVectorDescriptionCompleteness => {
                "with N and all N\\i known, the extension set is the upper game minus the unknown-coordinate cone"
            }
            Claim::UpperVectorTauInvariant => {
                "with N and all N\\i known, every extension has the same tau-value"
            }
            Claim::RayCentreMarginalTable => {
                "the four-case table gives the marginal contributions of the ray centroid"
            }
            Claim::RayCentreShapleyClosedForm => {
                "the double-sum closed form equals the Shapley value of the ray centroid"
            }
            Claim::RayCentreShapleyNegated => {
                "the double-sum closed form equals minus the Shapley value of the ray centroid"
            }
            Claim::SmallGameShapleyCoincidence => {
                "for n <= 3 with N and all N\\i known, average and conic Shapley coincide"
            }
            Claim::SingletonsUnknownShapleyDivergence => {
                "for n >= 4 with exactly the singletons unknown, average and conic Shapley differ"
            }
        }
    }

    /// Whether the claim speaks about this instance at a checkable size.
    pub fn applies(&self, game: &Game) -> bool {
        let minimal = |g: &IncompleteGame| g.shape() == KnownShape::Minimal && g.n() >= 2;
        let upper = |g: &IncompleteGame| g.shape() == KnownShape::DefinedUpperVector;
        let extendable = |g: &IncompleteGame| is_extendable(g).unwrap_or(false);
        let with_rays = |g: &IncompleteGame| upper(g) && extendable(g) && !g.unknown().is_empty();
        match (self, game) {
            (Claim::NucleolusEqualsTau, Game::Complete(g)) => g.n() <= 5 && is_one_convex(g),
            (Claim::ShapleyFormulasAgree, Game::Complete(g)) => g.n() <= 6,
            (_, Game::Complete(_)) => false,
            (Claim::NucleolusEqualsTau | Claim::ShapleyFormulasAgree, _) => false,
            (Claim::ExtendableIffNonnegativeExcess, Game::Incomplete(g)) => minimal(g) && g.n() <= 5,
            (Claim::UpperGameFormula, Game::Incomplete(g)) => {
                (minimal(g) || upper(g)) && g.n() <= 5 && extendable(g)
            }
            (
                Claim::UpperGameOneConvexityCriterion
                | Claim::ExtremeGamesTight
                | Claim::AverageValueCoincidences
                | Claim::SolidarityTauEqualSplit,
                Game::Incomplete(g),
            ) => minimal(g) && g.n() <= 6 && extendable(g),
            (Claim::ExtremeGamesAreVertices | Claim::DescriptionCompleteness, Game::Incomplete(g)) => {
                minimal(g) && g.n() <= VERTEX_MAX_MINIMAL && extendable(g)
            }
            (Claim::DescriptionSoundness, Game::Incomplete(g)) => {
                (minimal(g) || upper(g)) && g.n() <= 5 && extendable(g)
            }
            (Claim::ZeroExcessSingleExtension, Game::Incomplete(g)) => {
                minimal(g) && g.n() <= 5 && g.total_excess().is_ok_and(|d| d.is_zero())
            }
            (
                Claim::UpperVectorSingleVertex
                | Claim::UpperVectorDescriptionCompleteness
                | Claim::UpperVectorTauInvariant,
                Game::Incomplete(g),
            ) => upper(g) && g.n() <= VERTEX_MAX_UPPER_VECTOR && extendable(g),
            (
                Claim::RayCentreMarginalTable
                | Claim::RayCentreShapleyClosedForm
                | Claim::RayCentreShapleyNegated,
                Game::Incomplete(g),
            ) => with_rays(g) && g.n() <= 5,
            (Claim::SmallGameShapleyCoincidence, Game::Incomplete(g)) => with_rays(g) && g.n() <= 3,
            (Claim::SingletonsUnknownShapleyDivergence, Game::Incomplete(g)) => {
                let singletons: Vec<Coalition> = (0..g.n()).map(Coalition::singleton).collect();
                with_rays(g) && (4..=5).contains(&g.n()) && g.unknown() == singletons
            }
        }
    }

    /// Evaluates the claim on one instance; `applies` must hold.
    pub fn evaluate(&self, game: &Game) -> Result<Check> {
        match game {
            Game::Complete(g) => self.evaluate_complete(g),
            Game::Incomplete(g) => self.evaluate_incomplete(g),
        }
    }

    fn evaluate_complete(&self, g: &CompleteGame) -> Result<Check> {
        match self {
            Claim::NucleolusEqualsTau => {
                let (eta, tau) = (nucleolus(g)?, tau_one_convex(g)?);
                Ok(Check::compare(eta, tau))
            }
            Claim::ShapleyFormulasAgree => {
                let (a, b, c) = (shapley(g), shapley_alternate(g), shapley_permutation_oracle(g)?);
                let holds = a == b && b == c;
                Ok(Check::new(holds, a, format!("alternate {b}; permutations {c}")))
            }
            _ => Err(Error::UnsupportedShape),
        }
    }

    fn evaluate_incomplete(&self, g: &IncompleteGame) -> Result<Check> {
        let n = g.n();
        match self {
            Claim::ExtendableIffNonnegativeExcess => {
                let by_excess = is_extendable_minimal(g)?;
                let by_lp = extendable_by_lp(g);
                Ok(Check::new(
                    by_excess == by_lp,
                    format!("Delta = {} (extendable: {by_excess})", g.total_excess()?),
                    format!("LP feasible: {by_lp}"),
                ))
            }
            Claim::UpperGameFormula => {
                let upper = upper_game(g)?;
                let bounds = coordinate_bounds_lp(g)?;
                let mismatch = bounds
                    .iter()
                    .find(|(s, b)| b.max != Extent::Finite(upper.value(**s).clone()));
                Ok(match mismatch {
                    None => Check::new(true, "upper game", format!("{} LP maxima", bounds.len())),
                    Some((s, b)) => Check::new(
                        false,
                        format!("upper game at {s} = {}", upper.value(*s)),
                        format!("LP max {}", b.max),
                    ),
                })
            }
            Claim::UpperGameOneConvexityCriterion => {
                let formula = upper_game_one_convexity_formula(g)?;
                let direct = is_upper_game_one_convex(g)?;
                Ok(Check::new(
                    formula == direct,
                    format!("criterion: {formula}"),
                    format!("upper game 1-convex: {direct}"),
                ))
            }
            Claim::ExtremeGamesAreVertices => {
                let vertices = vertex_enumeration(g)?;
                for i in 0..n {
                    let vi = extreme_game_minimal(g, i)?;
                    if !vertices.contains(&vi) {
                        return Ok(Check::new(
                            false,
                            format!("v^{} = {}", i + 1, game_summary(&vi)),
                            format!("not among {} vertices", vertices.len()),
                        ));
                    }
                }
                Ok(Check::new(true, format!("{n} extreme games"), format!("{} vertices", vertices.len())))
            }
            Claim::ExtremeGamesTight => {
                for i in 0..n {
                    let slack = one_convexity_slack(&extreme_game_minimal(g, i)?);
                    if let Some((s, value)) = slack.slack_coalitions().into_iter().next() {
                        return Ok(Check::new(
                            false,
                            format!("v^{} has slack {value} at {s}", i + 1),
                            "slack 0 everywhere",
                        ));
                    }
                    if !slack.grand.is_zero() {
                        return Ok(Check::new(
                            false,
                            format!("v^{} has b(N) - v(N) = {}", i + 1, slack.grand),
                            "0",
                        ));
                    }
                }
                Ok(Check::new(true, "no slack", "no slack"))
            }
            Claim::DescriptionSoundness => {
                let d = description(g)?;
                for cert in fixed_certificates(&d) {
                    let w = d.reconstruct(&cert);
                    if !is_one_convex(&w) || !g.agrees_with(&w) {
                        return Ok(Check::new(false, game_summary(&w), "not a 1-convex extension"));
                    }
                }
                Ok(Check::new(true, "all reconstructions", "1-convex extensions"))
            }
            Claim::DescriptionCompleteness => {
                for w in vertex_enumeration(g)? {
                    if let Membership::NotMember(reason) = decompose_minimal(g, &w)? {
                        return Ok(Check::new(
                            false,
                            format!("vertex {}", game_summary(&w)),
                            format!("rejected: {reason}"),
                        ));
                    }
                }
                Ok(Check::new(true, "every vertex", "decomposes"))
            }
            Claim::ZeroExcessSingleExtension => {
                let bounds = coordinate_bounds_lp(g)?;
                let loose = bounds.iter().find(|(_, b)| b.max != b.min);
                Ok(match loose {
                    None => Check::new(true, "every unknown coordinate pinned", "single extension"),
                    Some((s, b)) => Check::new(
                        false,
                        format!("coordinate {s}"),
                        format!("ranges over [{}, {}]", b.min, b.max),
                    ),
                })
            }
            Claim::AverageValueCoincidences => {
                let zeta = average_value(g)?;
                let mut others = vec![
                    ("average tau", average_tau(g)?),
                    ("average Shapley", average_shapley(g)?),
                    ("nucleolus of centroid", average_nucleolus(g)?),
                ];
                for alpha in [0, 1, 7] {
                    others.push(("conic tau", conic_tau(g, &int(alpha))?));
                    others.push(("conic Shapley", conic_shapley(g, &int(alpha))?));
                }
                Ok(match others.into_iter().find(|(_, x)| *x != zeta) {
                    None => Check::new(true, zeta, "all coincide"),
                    Some((name, x)) => Check::new(false, zeta, format!("{name} {x}")),
                })
            }
            Claim::SolidarityTauEqualSplit => Ok(Check::compare(solidarity_tau(g)?, equal_split(g)?)),
            Claim::UpperVectorSingleVertex => {
                let vertices = vertex_enumeration(g)?;
                let upper = upper_game(g)?;
                Ok(Check::new(
                    vertices == [upper.clone()],
                    format!("{} vertices", vertices.len()),
                    format!("upper game {}", game_summary(&upper)),
                ))
            }
            Claim::UpperVectorDescriptionCompleteness => {
                let system = ExtensionSystem::new(g);
                let coupled = system
                    .rows
                    .iter()
                    .find(|r| r.coefficients.iter().filter(|c| !c.is_zero()).count() > 1);
                if coupled.is_some() {
                    return Ok(Check::new(false, "a constraint couples unknowns", "box structure"));
                }
                let upper = upper_game(g)?;
                let bounds = coordinate_bounds_lp(g)?;
                let off = bounds.iter().find(|(s, b)| {
                    b.max != Extent::Finite(upper.value(**s).clone()) || b.min != Extent::Unbounded
                });
                Ok(match off {
                    None => Check::new(true, "each unknown ranges over (-inf, upper]", "box structure"),
                    Some((s, b)) => {
                        Check::new(false, format!("coordinate {s}"), format!("[{}, {}]", b.min, b.max))
                    }
                })
            }
            Claim::UpperVectorTauInvariant => {
                let d = description(g)?;
                let reference = tau_one_convex(&upper_game(g)?)?;
                for cert in fixed_certificates(&d) {
                    let tau = tau_one_convex(&d.reconstruct(&cert))?;
                    if tau != reference {
                        return Ok(Check::compare(tau, reference));
                    }
                }
                Ok(Check::new(true, reference, "same on sampled extensions"))
            }
            Claim::RayCentreMarginalTable => {
                let rays = description(g)?.centroid_rays();
                for s in Coalition::all(n) {
                    for i in (0..n).filter(|i| !s.contains(*i)) {
                        let table = ray_centre_marginal(g, s, i)?;
                        let direct = rays.value(s.with(i)) - rays.value(s);
                        if table != direct {
                            return Ok(Check::new(
                                false,
                                format!("table {table} at S = {s}, i = {}", i + 1),
                                format!("direct {direct}"),
                            ));
                        }
                    }
                }
                Ok(Check::new(true, "table", "direct differences"))
            }
            Claim::RayCentreShapleyClosedForm | Claim::RayCentreShapleyNegated => {
                let closed = PayoffVector::new(
                    (0..n)
                        .map(|i| ray_centre_shapley_closed_form(g, i))
                        .collect::<Result<Vec<_>>>()?,
                );
                let direct = ray_centre_shapley(g)?;
                let target = if *self == Claim::RayCentreShapleyNegated {
                    &PayoffVector::zeros(n) - &direct
                } else {
                    direct
                };
                Ok(Check::compare(closed, target))
            }
            Claim::SmallGameShapleyCoincidence => {
                Ok(Check::compare(average_shapley(g)?, conic_shapley(g, &int(1))?))
            }
            Claim::SingletonsUnknownShapleyDivergence => {
                let (plain, conic) = (average_shapley(g)?, conic_shapley(g, &int(1))?);
                Ok(Check::new(plain != conic, plain, conic))
            }
            Claim::NucleolusEqualsTau | Claim::ShapleyFormulasAgree => Err(Error::UnsupportedShape),
        }
    }
}

/// Each extreme game alone, the centroid, and each extreme game plus
/// every ray at weight 1 and at weight 2.
fn fixed_certificates(d: &ExtensionDescription) -> Vec<DecompositionCertificate> {
    let k = d.extreme_games.len();
    let no_rays: BTreeMap<Coalition, Rational> =
        d.ray_index_set.iter().map(|t| (*t, Rational::zero())).collect();
    let unit = |i: usize| {
        let mut alphas = vec![Rational::zero(); k];
        alphas[i] = Rational::one();
        alphas
    };
    let mut out = Vec::new();
    for i in 0..k {
        out.push(DecompositionCertificate { alphas: unit(i), betas: no_rays.clone() });
        for t in &d.ray_index_set {
            let mut betas = no_rays.clone();
            betas.insert(*t, Rational::one());
            out.push(DecompositionCertificate { alphas: unit(i), betas });
        }
        let all_rays = d.ray_index_set.iter().map(|t| (*t, int(2))).collect();
        out.push(DecompositionCertificate { alphas: unit(i), betas: all_rays });
    }
    out.push(DecompositionCertificate { alphas: vec![rat(1, k as i64); k], betas: no_rays });
    out
}

fn game_summary(g: &CompleteGame) -> String {
    Coalition::all(g.n())
        .filter(|s| !s.is_empty())
        .map(|s| format!("{s}={}", g.value(s)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Outcome of one claim on one instance with both computed sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub holds: bool,
    pub left: String,
    pub right: String,
}

impl Check {
    fn new(holds: bool, left: impl ToString, right: impl ToString) -> Check {
        Check { holds, left: left.to_string(), right: right.to_string() }
    }

    fn compare(left: PayoffVector, right: PayoffVector) -> Check {
        Check::new(left == right, &left, &right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimStatus {
    Confirmed,
    RefutedOnInstance,
    NotCheckable,
}

impl ClaimStatus {
    pub fn label(&self) -> &'static str {
        match self {
            ClaimStatus::Confirmed => "confirmed",
            ClaimStatus::RefutedOnInstance => "refuted-on-instance",
            ClaimStatus::NotCheckable => "not-checkable",
        }
    }
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: Claim,
    pub status: ClaimStatus,
    /// Number of instances evaluated before the verdict.
    pub checked: usize,
    /// The refuting instance, or the first confirming one.
    pub instance: Option<Game>,
    pub evidence: Option<Check>,
}

/// Runs one claim over the pool in order, stopping at the first refutation.
pub fn verify_claim(claim: Claim, pool: &[Game]) -> ClaimReport {
    let mut report = ClaimReport {
        claim,
        status: ClaimStatus::NotCheckable,
        checked: 0,
        instance: None,
        evidence: None,
    };
    for game in pool.iter().filter(|g| claim.applies(g)) {
        let Ok(check) = claim.evaluate(game) else {
            continue;
        };
        report.checked += 1;
        if !check.holds {
            report.status = ClaimStatus::RefutedOnInstance;
            report.instance = Some(game.clone());
            report.evidence = Some(check);
            return report;
        }
        if report.instance.is_none() {
            report.instance = Some(game.clone());
            report.evidence = Some(check);
        }
        report.status = ClaimStatus::Confirmed;
    }
    report
}

/// One report per claim over [`claim_pool`].
pub fn verify_claims(seed: u64, extra: &[Game]) -> Vec<ClaimReport> {
    let pool = claim_pool(seed, extra);
    Claim::ALL.iter().map(|c| verify_claim(*c, &pool)).collect()
}

/// Re-evaluates a report's stored instance.
pub fn replay(report: &ClaimReport) -> Result<ClaimStatus> {
    let Some(game) = &report.instance else {
        return Ok(ClaimStatus::NotCheckable);
    };
    Ok(if report.claim.evaluate(game)?.holds {
        ClaimStatus::Confirmed
    } else {
        ClaimStatus::RefutedOnInstance
    })
}

/// The instances decompose rejects among the vertices, paired with the reason.
pub fn undecomposable_vertices(g: &IncompleteGame) -> Result<Vec<(CompleteGame, Membership)>> {
    let mut out = Vec::new();
    for w in vertex_enumeration(g)? {
        let m = decompose(g, &w)?;
        if !m.is_member() {
            out.push((w, m));
        }
    }
    Ok(out)
}
