//! Solution concepts for complete games and for minimal and
//! defined-upper-vector incomplete games.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{CompleteGame, IncompleteGame, KnownShape, PayoffVector};
use crate::linalg::EchelonBasis;
use crate::lp::{solve, LinearProgram, LpStatus, Relation, Sense};
use crate::oneconvex::{
    description, description_minimal, is_one_convex, is_quasi_balanced, minimal_right_vector,
};
use crate::rational::{binomial, factorial, int, one, Rational};

/// τ_i = b_i − g(N)/n on 1-convex games.
pub fn tau_one_convex(g: &CompleteGame) -> Result<PayoffVector> {
    if !is_one_convex(g) {
        return Err(Error::NotOneConvex);
    }
    let b = g.upper_vector();
    let share = g.gap(g.grand()) / int(g.n() as i64);
    Ok(PayoffVector::new(b.iter().map(|bi| bi - &share).collect()))
}

/// The efficient point on the segment between the minimal right vector a
/// and the upper vector b.
pub fn tau_quasi_balanced(g: &CompleteGame) -> Result<PayoffVector> {
    if !is_quasi_balanced(g) {
        return Err(Error::NotQuasiBalanced);
    }
    let a = minimal_right_vector(g);
    let b = g.upper_vector();
    let (sa, sb) = (a.total(), b.total());
    if sa == sb {
        return Ok(a);
    }
    let t = (g.value(g.grand()) - &sa) / (sb - &sa);
    Ok(&a + &(&b - &a).scale(&t))
}

/// Weights s!(n−s−1)!/n! indexed by |S| for S ∌ i.
fn marginal_weights(n: usize) -> Vec<Rational> {
    let nf = factorial(n);
    (0..n)
        .map(|s| Rational::new(factorial(s) * factorial(n - s - 1), nf.clone()))
        .collect()
}

/// φ_i = Σ_{S∋i} (|S|−1)!(n−|S|)!/n! · (v(S) − v(S∖i)).
pub fn shapley(g: &CompleteGame) -> PayoffVector {
    let n = g.n();
    let weights = marginal_weights(n);
    PayoffVector::new(
        (0..n)
            .map(|i| {
                Coalition::all(n)
                    .filter(|s| s.contains(i))
                    .fold(Rational::zero(), |acc, s| {
                        acc + &weights[s.size() - 1] * (g.value(s) - g.value(s.without(i)))
                    })
            })
            .collect(),
    )
}

/// φ_i = (1/n) Σ_{S⊆N∖i} C(n−1, s)^{-1} (v(S∪i) − v(S)).
pub fn shapley_alternate(g: &CompleteGame) -> PayoffVector {
    let n = g.n();
    let inverse: Vec<Rational> = (0..n)
        .map(|s| Rational::new(1.into(), binomial(n - 1, s) * n))
        .collect();
    PayoffVector::new(
        (0..n)
            .map(|i| {
                g.grand()
                    .without(i)
                    .subsets()
                    .fold(Rational::zero(), |acc, s| {
                        acc + &inverse[s.size()] * (g.value(s.with(i)) - g.value(s))
                    })
            })
            .collect(),
    )
}

fn indicator(n: usize, s: Coalition) -> Vec<Rational> {
    (0..n)
        .map(|i| if s.contains(i) { one() } else { Rational::zero() })
        .collect()
}

/// The lexicographic minimiser of the sorted excess vector over imputations.
///
/// Each round minimises the largest unfixed excess t, then fixes every
/// coalition whose excess cannot drop below t on the optimal face; rounds
/// stop once the fixed coalitions pin x down.
pub fn nucleolus(g: &CompleteGame) -> Result<PayoffVector> {
    let n = g.n();
    let grand = g.grand();
    let singles = g.singleton_values();
    let vn = g.value(grand).clone();
    if vn < singles.total() {
        return Err(Error::EmptyImputationSet);
    }
    if n == 1 {
        return Ok(PayoffVector::new(vec![vn]));
    }
    // variables x_0..x_{n−1}, t
    let m = n + 1;
    let row_for = |s: Coalition, t_coef: i64| {
        let mut row = indicator(n, s);
        row.push(int(t_coef));
        row
    };
    let mut base = LinearProgram::feasibility(m)?;
    base.add_constraint(row_for(grand, 0), Relation::Eq, vn.clone())?;
    for i in 0..n {
        base.add_constraint(row_for(Coalition::singleton(i), 0), Relation::Ge, singles[i].clone())?;
    }
    let mut span = EchelonBasis::new();
    span.try_insert(&indicator(n, grand));
    let mut active: Vec<Coalition> = Coalition::all(n)
        .filter(|s| !s.is_empty() && *s != grand)
        .collect();

    let mut t_objective = vec![Rational::zero(); m];
    t_objective[n] = one();
    loop {
        // v(S) − x(S) ≤ t  ⇔  x(S) + t ≥ v(S)
        let mut stage = base.clone();
        for s in &active {
            stage.add_constraint(row_for(*s, 1), Relation::Ge, g.value(*s).clone())?;
        }
        stage.set_objective(Sense::Minimize, t_objective.clone())?;
        let outcome = solve(&stage);
        let (Some(x), Some(level)) = (outcome.solution, outcome.objective_value) else {
            return Err(Error::Lp(crate::lp::LpError::StageFailed {
                stage: 0,
                status: outcome.status,
            }));
        };
        let mut face = stage.clone();
        face.add_constraint(t_objective.clone(), Relation::Eq, level.clone())?;

        let mut newly_fixed = Vec::new();
        for s in &active {
            let current = g.value(*s) - x[..n].iter().enumerate().filter(|(i, _)| s.contains(*i)).fold(Rational::zero(), |a, (_, xi)| a + xi);
            if current != level {
                continue;
            }
            face.set_objective(Sense::Maximize, row_for(*s, 0))?;
            let best = solve(&face);
            let max_share = best.objective_value.expect("face is bounded");
            if g.value(*s) - max_share == level {
                newly_fixed.push(*s);
            }
        }
        debug_assert!(!newly_fixed.is_empty());
        for s in &newly_fixed {
            let fixed_value = g.value(*s) - &level;
            base.add_constraint(row_for(*s, 0), Relation::Eq, fixed_value)?;
            span.try_insert(&indicator(n, *s));
        }
        active.retain(|s| !newly_fixed.contains(s) && !span.spans(&indicator(n, *s)));
        if span.rank() == n || active.is_empty() {
            let point = solve(&base);
            debug_assert_eq!(point.status, LpStatus::Optimal);
            let sol = point.solution.expect("fixed system is feasible");
            return Ok(PayoffVector::new(sol[..n].to_vec()));
        }
    }
}

fn require_extendable(g: &IncompleteGame) -> Result<()> {
    if crate::oneconvex::is_extendable(g)? {
        Ok(())
    } else {
        Err(Error::NotExtendable(match g.shape() {
            KnownShape::Minimal => format!("Delta = {} < 0", g.total_excess()?),
            _ => "1-convexity conditions fail on the known coalitions".to_string(),
        }))
    }
}

/// ṽ, the centroid of the extreme games (minimal or defined-upper-vector K).
pub fn centroid_game(g: &IncompleteGame) -> Result<CompleteGame> {
    require_extendable(g)?;
    Ok(description(g)?.centroid_games())
}

/// ṽ + αẽ.
pub fn conic_game(g: &IncompleteGame, alpha: &Rational) -> Result<CompleteGame> {
    if alpha.is_negative() {
        return Err(Error::NegativeAlpha(alpha.clone()));
    }
    require_extendable(g)?;
    let d = description(g)?;
    Ok(&d.centroid_games() + &d.centroid_rays().scale(alpha))
}

/// τ̃ = τ(ṽ).
pub fn average_tau(g: &IncompleteGame) -> Result<PayoffVector> {
    tau_one_convex(&centroid_game(g)?)
}

/// τ^s = (1/n) Σ_i τ(v^i) over the extreme games of a minimal game.
pub fn solidarity_tau(g: &IncompleteGame) -> Result<PayoffVector> {
    g.require_minimal()?;
    require_extendable(g)?;
    let d = description_minimal(g)?;
    let n = g.n();
    let mut acc = PayoffVector::zeros(n);
    for game in &d.extreme_games {
        acc = &acc + &tau_one_convex(game)?;
    }
    Ok(acc.scale(&Rational::new(1.into(), n.into())))
}

/// The equal split v(N)/n of a minimal game.
pub fn equal_split(g: &IncompleteGame) -> Result<PayoffVector> {
    let n = g.n();
    let vn = g.require(g.grand())?;
    Ok(PayoffVector::new(vec![vn / int(n as i64); n]))
}

/// τ^α = τ(ṽ + αẽ).
pub fn conic_tau(g: &IncompleteGame, alpha: &Rational) -> Result<PayoffVector> {
    tau_one_convex(&conic_game(g, alpha)?)
}

/// ζ̃_i = v(i) + Δ/n.
pub fn average_value(g: &IncompleteGame) -> Result<PayoffVector> {
    g.require_minimal()?;
    require_extendable(g)?;
    let share = g.total_excess()? / int(g.n() as i64);
    let singles = g.singleton_values()?;
    Ok(PayoffVector::new(singles.iter().map(|v| v + &share).collect()))
}

/// φ̃ = φ(ṽ).
pub fn average_shapley(g: &IncompleteGame) -> Result<PayoffVector> {
    Ok(shapley(&centroid_game(g)?))
}

/// φ^α = φ(ṽ + αẽ).
pub fn conic_shapley(g: &IncompleteGame, alpha: &Rational) -> Result<PayoffVector> {
    Ok(shapley(&conic_game(g, alpha)?))
}

/// η(ṽ).
pub fn average_nucleolus(g: &IncompleteGame) -> Result<PayoffVector> {
    nucleolus(&centroid_game(g)?)
}

fn duv_ray_count(g: &IncompleteGame) -> Result<usize> {
    g.require_upper_vector()?;
    require_extendable(g)?;
    let count = g.unknown().len();
    if count == 0 {
        return Err(Error::NoRays);
    }
    Ok(count)
}

/// ẽ(S∪i) − ẽ(S) by the four-case table on membership of S and S∪i in K.
pub fn ray_centre_marginal(g: &IncompleteGame, s: Coalition, player: usize) -> Result<Rational> {
    if player >= g.n() {
        return Err(Error::PlayerOutOfRange(player));
    }
    if s.contains(player) {
        return Err(Error::PlayerInCoalition(player));
    }
    let e = int(duv_ray_count(g)? as i64);
    Ok(match (g.is_known(s), g.is_known(s.with(player))) {
        (true, true) | (false, false) => Rational::zero(),
        (false, true) => one() / e,
        (true, false) => -one() / e,
    })
}

/// The double-sum expression
/// (1/(|E| n!)) (Σ_{S∈K, S∪i∉K} s!(n−s−1)! − Σ_{S∉K, S∪i∈K} s!(n−s−1)!),
/// evaluated as written. Its sign is opposite to φ_i(ẽ); see
/// [`ray_centre_shapley`] for the direct value.
pub fn ray_centre_shapley_closed_form(g: &IncompleteGame, player: usize) -> Result<Rational> {
    if player >= g.n() {
        return Err(Error::PlayerOutOfRange(player));
    }
    let e = duv_ray_count(g)?;
    let n = g.n();
    let mut first = num_bigint::BigInt::zero();
    let mut second = num_bigint::BigInt::zero();
    for s in g.grand().without(player).subsets() {
        let weight = factorial(s.size()) * factorial(n - s.size() - 1);
        match (g.is_known(s), g.is_known(s.with(player))) {
            (true, false) => first += weight,
            (false, true) => second += weight,
            _ => {}
        }
    }
    Ok(Rational::new(first - second, factorial(n) * e))
}

/// φ(ẽ) computed from the centroid of the rays.
pub fn ray_centre_shapley(g: &IncompleteGame) -> Result<PayoffVector> {
    duv_ray_count(g)?;
    Ok(shapley(&description(g)?.centroid_rays()))
}

/// A named solution concept, as selected on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Concept {
    Tau,
    Shapley,
    Nucleolus,
    Average,
    Solidarity,
    ConicTau(Rational),
    ConicShapley(Rational),
}

impl Concept {
    pub fn parse(name: &str, alpha: Option<Rational>) -> Option<Concept> {
        let alpha = || alpha.clone().unwrap_or_else(one);
        Some(match name {
            "tau" => Concept::Tau,
            "shapley" => Concept::Shapley,
            "nucleolus" => Concept::Nucleolus,
            "average" => Concept::Average,
            "solidarity" => Concept::Solidarity,
            "conic" | "conic-tau" => Concept::ConicTau(alpha()),
            "conic-shapley" => Concept::ConicShapley(alpha()),
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Concept::Tau => "tau",
            Concept::Shapley => "shapley",
            Concept::Nucleolus => "nucleolus",
            Concept::Average => "average",
            Concept::Solidarity => "solidarity",
            Concept::ConicTau(_) => "conic",
            Concept::ConicShapley(_) => "conic-shapley",
        }
    }
}

impl fmt::Display for Concept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Concept::ConicTau(a) | Concept::ConicShapley(a) => write!(f, "{}(alpha={a})", self.name()),
            other => write!(f, "{}", other.name()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueReport {
    pub payoff: PayoffVector,
    pub method: String,
    /// The complete game the value was computed on, when one was built.
    pub witness: Option<CompleteGame>,
}

/// Complete games accept τ (quasi-balanced form), Shapley and nucleolus.
pub fn evaluate_complete(concept: &Concept, g: &CompleteGame) -> Result<ValueReport> {
    let payoff = match concept {
        Concept::Tau => tau_quasi_balanced(g)?,
        Concept::Shapley => shapley(g),
        Concept::Nucleolus => nucleolus(g)?,
        _ => return Err(Error::UnsupportedShape),
    };
    Ok(ValueReport {
        payoff,
        method: concept.to_string(),
        witness: None,
    })
}

/// On incomplete games τ, Shapley and nucleolus are taken at the centroid ṽ.
pub fn evaluate_incomplete(concept: &Concept, g: &IncompleteGame) -> Result<ValueReport> {
    let (payoff, witness) = match concept {
        Concept::Tau => {
            let c = centroid_game(g)?;
            (tau_one_convex(&c)?, Some(c))
        }
        Concept::Shapley => {
            let c = centroid_game(g)?;
            (shapley(&c), Some(c))
        }
        Concept::Nucleolus => {
            let c = centroid_game(g)?;
            (nucleolus(&c)?, Some(c))
        }
        Concept::Average => (average_value(g)?, None),
        Concept::Solidarity => (solidarity_tau(g)?, None),
        Concept::ConicTau(alpha) => {
            let c = conic_game(g, alpha)?;
            (tau_one_convex(&c)?, Some(c))
        }
        Concept::ConicShapley(alpha) => {
            let c = conic_game(g, alpha)?;
            (shapley(&c), Some(c))
        }
    };
    Ok(ValueReport {
        payoff,
        method: concept.to_string(),
        witness,
    })
}
