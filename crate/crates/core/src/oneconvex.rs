//! 1-convexity of complete games and the 1-convex extension sets of
//! minimal and defined-upper-vector incomplete games.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::{CompleteGame, IncompleteGame, KnownShape, PayoffVector};
use crate::rational::{int, sum, Rational};

/// Checks v(S) ≤ v(N) − b(N∖S) for every nonempty S, and b(N) ≥ v(N).
pub fn is_one_convex(g: &CompleteGame) -> bool {
    let n = g.n();
    let b = g.upper_vector();
    let vn = g.value(g.grand());
    if &b.total() < vn {
        return false;
    }
    Coalition::all(n)
        .skip(1)
        .all(|s| g.value(s) <= &(vn - b.over(s.complement(n))))
}

/// The gap characterisation: 0 ≤ g(N) ≤ g(S) for every nonempty S.
pub fn is_one_convex_by_gaps(g: &CompleteGame) -> bool {
    let gaps = g.gaps();
    let at_grand = &gaps[g.grand().index()];
    !at_grand.is_negative() && gaps.iter().skip(1).all(|x| x >= at_grand)
}

/// Slack of both 1-convexity conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneConvexitySlack {
    /// `per_coalition[mask]` = v(N) − b(N∖S) − v(S); the ∅ entry is 0.
    pub per_coalition: Vec<Rational>,
    /// b(N) − v(N).
    pub grand: Rational,
}

impl OneConvexitySlack {
    /// Nonempty coalitions whose condition is not tight.
    pub fn slack_coalitions(&self) -> Vec<(Coalition, Rational)> {
        self.per_coalition
            .iter()
            .enumerate()
            .skip(1)
            .filter(|(_, s)| !s.is_zero())
            .map(|(m, s)| (Coalition::from_mask(m as u32), s.clone()))
            .collect()
    }
}

pub fn one_convexity_slack(g: &CompleteGame) -> OneConvexitySlack {
    let n = g.n();
    let b = g.upper_vector();
    let vn = g.value(g.grand());
    let per_coalition = Coalition::all(n)
        .map(|s| {
            if s.is_empty() {
                Rational::zero()
            } else {
                vn - b.over(s.complement(n)) - g.value(s)
            }
        })
        .collect();
    OneConvexitySlack {
        per_coalition,
        grand: b.total() - vn,
    }
}

/// λ_i = min over S ∋ i of the gap g(S).
pub fn concession_vector(g: &CompleteGame) -> PayoffVector {
    let gaps = g.gaps();
    PayoffVector::new(
        (0..g.n())
            .map(|i| {
                Coalition::all(g.n())
                    .filter(|s| s.contains(i))
                    .map(|s| &gaps[s.index()])
                    .min()
                    .expect("every player lies in N")
                    .clone()
            })
            .collect(),
    )
}

/// a = b − λ.
pub fn minimal_right_vector(g: &CompleteGame) -> PayoffVector {
    &g.upper_vector() - &concession_vector(g)
}

pub fn is_quasi_balanced(g: &CompleteGame) -> bool {
    let b = g.upper_vector();
    let a = minimal_right_vector(g);
    let vn = g.value(g.grand());
    a.iter().zip(b.iter()).all(|(ai, bi)| ai <= bi) && &a.total() <= vn && vn <= &b.total()
}

pub fn total_excess(g: &IncompleteGame) -> Result<Rational> {
    g.total_excess()
}

/// Minimal games are extendable exactly when Δ ≥ 0.
pub fn is_extendable_minimal(g: &IncompleteGame) -> Result<bool> {
    g.require_minimal()?;
    Ok(!g.total_excess()?.is_negative())
}

fn extendable_minimal_delta(g: &IncompleteGame) -> Result<Rational> {
    g.require_minimal()?;
    let delta = g.total_excess()?;
    if delta.is_negative() {
        return Err(Error::NotExtendable(format!("Delta = {delta} < 0")));
    }
    Ok(delta)
}

/// v̄(S) = v(S) on K, v(N) − Σ_{i∉S} v(i) elsewhere.
pub fn upper_game_minimal(g: &IncompleteGame) -> Result<CompleteGame> {
    extendable_minimal_delta(g)?;
    let n = g.n();
    let singles = g.singleton_values()?;
    let vn = g.require(g.grand())?.clone();
    CompleteGame::from_fn(n, |s| match g.value(s) {
        Some(v) => v.clone(),
        None => &vn - singles.over(s.complement(n)),
    })
}

/// Whether the upper game of a minimal game is 1-convex, decided on the
/// constructed game. For n ≥ 2 this reduces to Δ = 0.
pub fn is_upper_game_one_convex(g: &IncompleteGame) -> Result<bool> {
    Ok(is_one_convex(&upper_game_minimal(g)?))
}

/// The closed-form criterion "Δ = 0 and v(N) ≤ min over ∅ ≠ S ⊊ N of
/// 2/(n−s) Σ_{i∉S} v(i)", evaluated literally. It does not always agree
/// with [`is_upper_game_one_convex`]; the claims report records where.
pub fn upper_game_one_convexity_formula(g: &IncompleteGame) -> Result<bool> {
    let delta = extendable_minimal_delta(g)?;
    let n = g.n();
    let singles = g.singleton_values()?;
    let vn = g.require(g.grand())?;
    let grand = g.grand();
    let bound = Coalition::all(n)
        .filter(|s| !s.is_empty() && *s != grand)
        .map(|s| int(2) / int((n - s.size()) as i64) * singles.over(s.complement(n)))
        .min();
    Ok(delta.is_zero() && bound.is_none_or(|m| vn <= &m))
}

fn check_player(n: usize, player: usize) -> Result<()> {
    if player >= n {
        return Err(Error::PlayerOutOfRange(player));
    }
    Ok(())
}

/// The extreme game v^i (0-based `player`): off K, coalitions containing
/// the player get v(N) − Σ_{j∉S} v(j), the others that minus Δ.
pub fn extreme_game_minimal(g: &IncompleteGame, player: usize) -> Result<CompleteGame> {
    let delta = extendable_minimal_delta(g)?;
    let n = g.n();
    check_player(n, player)?;
    let singles = g.singleton_values()?;
    let vn = g.require(g.grand())?.clone();
    CompleteGame::from_fn(n, |s| match g.value(s) {
        Some(v) => v.clone(),
        None if s.contains(player) => &vn - singles.over(s.complement(n)),
        None => &vn - singles.over(s.complement(n)) - &delta,
    })
}

/// E = 2^N minus ∅, N, the singletons and every N∖i.
pub fn ray_index_set_minimal(n: usize) -> Vec<Coalition> {
    Coalition::all(n)
        .filter(|s| {
            let size = s.size();
            size > 1 && size + 1 < n
        })
        .collect()
}

/// e_T: −1 at T, 0 elsewhere.
pub fn extreme_ray(t: Coalition, n: usize) -> Result<CompleteGame> {
    if t.is_empty() || !t.fits(n) {
        return Err(Error::CoalitionOutOfRange(t));
    }
    CompleteGame::from_fn(n, |s| if s == t { int(-1) } else { Rational::zero() })
}

/// Extreme games, extreme rays and the ray index set E of an extension set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDescription {
    pub n: usize,
    pub extreme_games: Vec<CompleteGame>,
    /// `extreme_rays[k]` is e_T for `T = ray_index_set[k]`.
    pub extreme_rays: Vec<CompleteGame>,
    pub ray_index_set: Vec<Coalition>,
}

impl ExtensionDescription {
    /// Coordinatewise average of the extreme games.
    pub fn centroid_games(&self) -> CompleteGame {
        average(self.n, &self.extreme_games)
    }

    /// Coordinatewise average of the extreme rays; the zero game when E = ∅.
    pub fn centroid_rays(&self) -> CompleteGame {
        average(self.n, &self.extreme_rays)
    }

    /// Σ α_k x_k + Σ β_T e_T.
    pub fn reconstruct(&self, cert: &DecompositionCertificate) -> CompleteGame {
        let mut values = vec![Rational::zero(); 1 << self.n];
        for (alpha, game) in cert.alphas.iter().zip(&self.extreme_games) {
            if alpha.is_zero() {
                continue;
            }
            for (acc, v) in values.iter_mut().zip(game.values()) {
                *acc += alpha * v;
            }
        }
        // e_T is −1 at T and 0 elsewhere.
        for (t, beta) in &cert.betas {
            values[t.index()] -= beta;
        }
        CompleteGame::new(self.n, values).expect("valid n")
    }
}

fn average(n: usize, games: &[CompleteGame]) -> CompleteGame {
    let zero = CompleteGame::zero(n).expect("valid n");
    if games.is_empty() {
        return zero;
    }
    let total = games.iter().fold(zero, |acc, g| &acc + g);
    total.scale(&(Rational::from_integer(1.into()) / int(games.len() as i64)))
}

pub fn centroid_games(d: &ExtensionDescription) -> CompleteGame {
    d.centroid_games()
}

pub fn centroid_rays(d: &ExtensionDescription) -> CompleteGame {
    d.centroid_rays()
}

/// The extreme games v^1..v^n and rays e_T, T ∈ E, of a minimal game.
/// When Δ = 0 (or n ≤ 2) the n extreme games coincide.
pub fn description_minimal(g: &IncompleteGame) -> Result<ExtensionDescription> {
    extendable_minimal_delta(g)?;
    let n = g.n();
    let extreme_games = (0..n)
        .map(|i| extreme_game_minimal(g, i))
        .collect::<Result<Vec<_>>>()?;
    let ray_index_set = ray_index_set_minimal(n);
    let extreme_rays = ray_index_set
        .iter()
        .map(|t| extreme_ray(*t, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtensionDescription {
        n,
        extreme_games,
        extreme_rays,
        ray_index_set,
    })
}

/// Weights reproducing a game from an [`ExtensionDescription`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    /// One weight per extreme game (for minimal games: per player).
    pub alphas: Vec<Rational>,
    pub betas: BTreeMap<Coalition, Rational>,
}

/// First violated requirement, checked in the order α sign, α sum, β sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonMember {
    NegativeAlpha { index: usize, value: Rational },
    AlphaSum { sum: Rational },
    NegativeBeta { coalition: Coalition, value: Rational },
    /// The weights are valid but the reconstruction differs at this coalition.
    Mismatch { coalition: Coalition },
}

impl std::fmt::Display for NonMember {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NonMember::NegativeAlpha { index, value } => write!(f, "alpha_{} = {value} < 0", index + 1),
            NonMember::AlphaSum { sum } => write!(f, "alphas sum to {sum}, not 1"),
            NonMember::NegativeBeta { coalition, value } => write!(f, "beta{coalition} = {value} < 0"),
            NonMember::Mismatch { coalition } => write!(f, "reconstruction differs at {coalition}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(DecompositionCertificate),
    NotMember(NonMember),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

fn require_agreement(g: &IncompleteGame, w: &CompleteGame) -> Result<()> {
    if w.n() != g.n() {
        return Err(Error::PlayerCountMismatch(g.n(), w.n()));
    }
    match g.first_disagreement(w) {
        Some(s) => Err(Error::DisagreesOnKnown(s)),
        None => Ok(()),
    }
}

fn finish_decomposition(
    d: &ExtensionDescription,
    w: &CompleteGame,
    alphas: Vec<Rational>,
    betas: BTreeMap<Coalition, Rational>,
) -> Membership {
    if let Some((index, value)) = alphas.iter().enumerate().find(|(_, a)| a.is_negative()) {
        return Membership::NotMember(NonMember::NegativeAlpha {
            index,
            value: value.clone(),
        });
    }
    let total = sum(&alphas);
    if total != int(1) {
        return Membership::NotMember(NonMember::AlphaSum { sum: total });
    }
    if let Some((t, value)) = betas.iter().find(|(_, b)| b.is_negative()) {
        return Membership::NotMember(NonMember::NegativeBeta {
            coalition: *t,
            value: value.clone(),
        });
    }
    let cert = DecompositionCertificate { alphas, betas };
    let rebuilt = d.reconstruct(&cert);
    if let Some(s) = Coalition::all(d.n).find(|s| rebuilt.value(*s) != w.value(*s)) {
        return Membership::NotMember(NonMember::Mismatch { coalition: s });
    }
    Membership::Member(cert)
}

/// Tries to write `w` as Σα_i v^i + Σβ_T e_T with
/// α_j = (v(N) − v(j) − w(N∖j))/Δ and β_T = Σα_i v^i(T) − w(T).
/// Δ = 0 (or n ≤ 2) uses uniform α, since all v^i coincide.
///
/// Non-membership here refers to the described set only, which does not
/// contain every 1-convex extension.
pub fn decompose_minimal(g: &IncompleteGame, w: &CompleteGame) -> Result<Membership> {
    let delta = extendable_minimal_delta(g)?;
    require_agreement(g, w)?;
    let n = g.n();
    let d = description_minimal(g)?;
    let vn = g.require(g.grand())?;
    let alphas: Vec<Rational> = if delta.is_zero() || n <= 2 {
        vec![Rational::from_integer(1.into()) / int(n as i64); n]
    } else {
        (0..n)
            .map(|j| {
                let vj = g.require(Coalition::singleton(j)).expect("minimal K");
                (vn - vj - w.value(g.grand().without(j))) / &delta
            })
            .collect()
    };
    let betas = d
        .ray_index_set
        .iter()
        .map(|t| {
            let combined = alphas
                .iter()
                .zip(&d.extreme_games)
                .fold(Rational::zero(), |acc, (a, x)| acc + a * x.value(*t));
            (*t, combined - w.value(*t))
        })
        .collect();
    Ok(finish_decomposition(&d, w, alphas, betas))
}

/// Extendability of a game whose K contains N and every N∖i: the
/// 1-convexity conditions must hold on K itself.
pub fn is_extendable_duv(g: &IncompleteGame) -> Result<bool> {
    let b = g.upper_vector()?;
    let n = g.n();
    let vn = g.require(g.grand())?;
    if &b.total() < vn {
        return Ok(false);
    }
    Ok(g
        .known()
        .filter(|(s, _)| !s.is_empty())
        .all(|(s, v)| v <= &(vn - b.over(s.complement(n)))))
}

fn require_extendable_duv(g: &IncompleteGame) -> Result<PayoffVector> {
    if !is_extendable_duv(g)? {
        return Err(Error::NotExtendable(
            "1-convexity conditions fail on the known coalitions".to_string(),
        ));
    }
    g.upper_vector()
}

/// v̄(S) = v(S) on K, v(N) − b(N∖S) elsewhere.
pub fn upper_game_duv(g: &IncompleteGame) -> Result<CompleteGame> {
    let b = require_extendable_duv(g)?;
    let n = g.n();
    let vn = g.require(g.grand())?.clone();
    CompleteGame::from_fn(n, |s| match g.value(s) {
        Some(v) => v.clone(),
        None => &vn - b.over(s.complement(n)),
    })
}

/// The single extreme game v̄ and one ray per unknown coalition.
pub fn description_duv(g: &IncompleteGame) -> Result<ExtensionDescription> {
    let upper = upper_game_duv(g)?;
    let n = g.n();
    let ray_index_set = g.unknown();
    let extreme_rays = ray_index_set
        .iter()
        .map(|t| extreme_ray(*t, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtensionDescription {
        n,
        extreme_games: vec![upper],
        extreme_rays,
        ray_index_set,
    })
}

/// β_T = v̄(T) − w(T) for every unknown T; member iff all β_T ≥ 0.
pub fn decompose_duv(g: &IncompleteGame, w: &CompleteGame) -> Result<Membership> {
    let d = description_duv(g)?;
    require_agreement(g, w)?;
    let upper = &d.extreme_games[0];
    let betas = d
        .ray_index_set
        .iter()
        .map(|t| (*t, upper.value(*t) - w.value(*t)))
        .collect();
    Ok(finish_decomposition(&d, w, vec![int(1)], betas))
}

/// Extendability for either supported K shape.
pub fn is_extendable(g: &IncompleteGame) -> Result<bool> {
    match g.shape() {
        KnownShape::Minimal => is_extendable_minimal(g),
        KnownShape::DefinedUpperVector => is_extendable_duv(g),
        KnownShape::General => Err(Error::UnsupportedShape),
    }
}

pub fn upper_game(g: &IncompleteGame) -> Result<CompleteGame> {
    match g.shape() {
        KnownShape::Minimal => upper_game_minimal(g),
        KnownShape::DefinedUpperVector => upper_game_duv(g),
        KnownShape::General => Err(Error::UnsupportedShape),
    }
}

pub fn description(g: &IncompleteGame) -> Result<ExtensionDescription> {
    match g.shape() {
        KnownShape::Minimal => description_minimal(g),
        KnownShape::DefinedUpperVector => description_duv(g),
        KnownShape::General => Err(Error::UnsupportedShape),
    }
}

pub fn decompose(g: &IncompleteGame, w: &CompleteGame) -> Result<Membership> {
    match g.shape() {
        KnownShape::Minimal => decompose_minimal(g, w),
        KnownShape::DefinedUpperVector => decompose_duv(g, w),
        KnownShape::General => Err(Error::UnsupportedShape),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn three_player_example() -> IncompleteGame {
        IncompleteGame::minimal(&[int(0), int(0), int(0)], int(1)).unwrap()
    }

    fn five_player_example() -> IncompleteGame {
        IncompleteGame::minimal(&[int(0), int(1), int(2), int(1), int(4)], int(10)).unwrap()
    }

    fn pairs_game(pair: Rational) -> CompleteGame {
        CompleteGame::from_fn(3, |s| match s.size() {
            1 => int(0),
            2 => pair.clone(),
            _ => int(1),
        })
        .unwrap()
    }

    fn c(players: &[usize]) -> Coalition {
        Coalition::from_players(players.iter().copied())
    }

    #[test]
    fn upper_game_of_three_player_example_is_not_one_convex() {
        let upper = upper_game_minimal(&three_player_example()).unwrap();
        assert_eq!(upper, pairs_game(int(1)));
        assert!(!is_one_convex(&upper));
        assert!(!is_one_convex_by_gaps(&upper));
        assert!(!is_quasi_balanced(&upper));
        assert!(!is_upper_game_one_convex(&three_player_example()).unwrap());
        assert!(!upper_game_one_convexity_formula(&three_player_example()).unwrap());
    }

    #[test]
    fn half_pairs_game_is_one_convex() {
        let g = pairs_game(rat(1, 2));
        assert!(is_one_convex(&g));
        assert!(is_one_convex_by_gaps(&g));
        assert_eq!(concession_vector(&g), PayoffVector::new(vec![rat(1, 2); 3]));
        assert!(is_quasi_balanced(&g));
    }

    #[test]
    fn additive_games() {
        let w = PayoffVector::new(vec![int(1), int(-2), rat(3, 4)]);
        let g = CompleteGame::additive(&w).unwrap();
        assert!(is_quasi_balanced(&g));
        assert!(is_one_convex(&g));
        assert_eq!(concession_vector(&g), PayoffVector::zeros(3));
    }

    #[test]
    fn upper_game_formula_versus_direct_check() {
        // v(i) = 1, v(N) = 3: the upper game is additive, hence 1-convex,
        // while the closed-form criterion evaluates 3 ≤ 2 and says no.
        let g = IncompleteGame::minimal(&[int(1), int(1), int(1)], int(3)).unwrap();
        let upper = upper_game_minimal(&g).unwrap();
        assert!(is_one_convex(&upper));
        assert!(is_upper_game_one_convex(&g).unwrap());
        assert!(!upper_game_one_convexity_formula(&g).unwrap());
    }

    #[test]
    fn not_extendable_error_paths() {
        let g = IncompleteGame::minimal(&[int(1), int(1), int(1)], int(2)).unwrap();
        assert!(!is_extendable_minimal(&g).unwrap());
        assert!(matches!(is_upper_game_one_convex(&g), Err(Error::NotExtendable(_))));
        assert!(matches!(upper_game_minimal(&g), Err(Error::NotExtendable(_))));
        assert!(matches!(description_minimal(&g), Err(Error::NotExtendable(_))));
    }

    #[test]
    fn minimal_only_operations_reject_other_k() {
        let full = pairs_game(rat(1, 2)).restrict(Coalition::all(3));
        assert_eq!(is_extendable_minimal(&full), Err(Error::NotMinimal));
        assert_eq!(is_upper_game_one_convex(&full), Err(Error::NotMinimal));
    }

    #[test]
    fn five_player_upper_and_extreme_values() {
        let g = five_player_example();
        assert_eq!(total_excess(&g).unwrap(), int(2));
        assert!(is_extendable_minimal(&g).unwrap());
        let upper = upper_game_minimal(&g).unwrap();
        assert_eq!(upper.value(c(&[0, 1])), &int(3));
        assert_eq!(upper.value(c(&[2])), &int(2));
        let v1 = extreme_game_minimal(&g, 0).unwrap();
        assert_eq!(v1.value(c(&[1, 2])), &int(3));
    }

    #[test]
    fn extreme_games_of_three_player_example() {
        let g = three_player_example();
        let v1 = extreme_game_minimal(&g, 0).unwrap();
        assert_eq!(v1.value(c(&[0, 1])), &int(1));
        assert_eq!(v1.value(c(&[0, 2])), &int(1));
        assert_eq!(v1.value(c(&[1, 2])), &int(0));
        // b_1 = v(N) − v({2,3}) = 1, b_2 = b_3 = 1 − 1 = 0
        assert_eq!(v1.upper_vector(), PayoffVector::new(vec![int(1), int(0), int(0)]));
        assert_eq!(v1.gap(v1.grand()), int(0));
        assert!(is_one_convex(&v1));
        assert_eq!(concession_vector(&v1), PayoffVector::zeros(3));
        assert!(extreme_game_minimal(&g, 3).is_err());
    }

    #[test]
    fn extreme_game_slack_sits_only_at_own_singleton() {
        let g = five_player_example();
        for i in 0..5 {
            let slack = one_convexity_slack(&extreme_game_minimal(&g, i).unwrap());
            assert_eq!(slack.grand, int(0));
            assert_eq!(slack.slack_coalitions(), vec![(Coalition::singleton(i), int(2))]);
        }
    }

    #[test]
    fn zero_delta_extreme_games_equal_upper_game() {
        let g = IncompleteGame::minimal(&[int(1), int(2), int(0), int(-1)], int(2)).unwrap();
        let upper = upper_game_minimal(&g).unwrap();
        for i in 0..4 {
            assert_eq!(extreme_game_minimal(&g, i).unwrap(), upper);
        }
    }

    #[test]
    fn ray_index_sets() {
        assert!(ray_index_set_minimal(3).is_empty());
        let four = ray_index_set_minimal(4);
        assert_eq!(four.len(), 6);
        assert!(four.iter().all(|s| s.size() == 2));
        let five = ray_index_set_minimal(5);
        assert_eq!(five.len(), 20);
        assert!(five.iter().all(|s| s.size() == 2 || s.size() == 3));
        assert!(ray_index_set_minimal(2).is_empty());
    }

    #[test]
    fn extreme_ray_values_and_cone_membership() {
        let t = c(&[0, 1]);
        let e = extreme_ray(t, 4).unwrap();
        assert_eq!(e.value(t), &int(-1));
        assert!(Coalition::all(4).filter(|s| *s != t).all(|s| e.value(s).is_zero()));
        let g = IncompleteGame::minimal(&[int(0), int(1), int(0), int(2)], int(5)).unwrap();
        let v1 = extreme_game_minimal(&g, 0).unwrap();
        for t in ray_index_set_minimal(4) {
            let moved = &v1 + &extreme_ray(t, 4).unwrap().scale(&int(5));
            assert!(is_one_convex(&moved));
        }
    }

    #[test]
    fn description_counts() {
        let d = description_minimal(&five_player_example()).unwrap();
        assert_eq!(d.extreme_games.len(), 5);
        assert_eq!(d.extreme_rays.len(), 20);
        let d3 = description_minimal(&three_player_example()).unwrap();
        assert!(d3.extreme_rays.is_empty());
        assert_eq!(d3.centroid_rays(), CompleteGame::zero(3).unwrap());
    }

    #[test]
    fn centroid_closed_form() {
        let g = five_player_example();
        let d = description_minimal(&g).unwrap();
        let centroid = d.centroid_games();
        assert_eq!(centroid.value(c(&[0, 1])), &rat(9, 5));
        let singles = g.singleton_values().unwrap();
        for s in Coalition::all(5).filter(|s| !g.is_known(*s)) {
            let closed = int(10) - singles.over(s.complement(5))
                - int((5 - s.size()) as i64) / int(5) * int(2);
            assert_eq!(centroid.value(s), &closed);
        }
        let e = d.centroid_rays();
        for t in &d.ray_index_set {
            assert_eq!(e.value(*t), &rat(-1, 20));
        }
    }

    #[test]
    fn decompose_extreme_game_and_centroid() {
        let g = five_player_example();
        let d = description_minimal(&g).unwrap();
        match decompose_minimal(&g, &d.extreme_games[0]).unwrap() {
            Membership::Member(cert) => {
                assert_eq!(cert.alphas, vec![int(1), int(0), int(0), int(0), int(0)]);
                assert!(cert.betas.values().all(Zero::is_zero));
            }
            other => panic!("{other:?}"),
        }
        match decompose_minimal(&g, &d.centroid_games()).unwrap() {
            Membership::Member(cert) => assert_eq!(cert.alphas, vec![rat(1, 5); 5]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn decompose_rejects_half_pairs_vertex() {
        let g = three_player_example();
        let w = pairs_game(rat(1, 2));
        assert!(is_one_convex(&w));
        assert_eq!(
            decompose_minimal(&g, &w).unwrap(),
            Membership::NotMember(NonMember::AlphaSum { sum: rat(3, 2) })
        );
    }

    #[test]
    fn decompose_reports_alpha_sign_first() {
        let g = three_player_example();
        // w(N∖1) = 2 gives α_1 = (1 − 0 − 2)/1 = −1
        let mut w = pairs_game(int(1));
        w.set(c(&[1, 2]), int(2));
        assert_eq!(
            decompose_minimal(&g, &w).unwrap(),
            Membership::NotMember(NonMember::NegativeAlpha { index: 0, value: int(-1) })
        );
    }

    #[test]
    fn decompose_requires_agreement_on_k() {
        let g = three_player_example();
        let w = CompleteGame::zero(3).unwrap();
        assert_eq!(decompose_minimal(&g, &w), Err(Error::DisagreesOnKnown(c(&[0, 1, 2]))));
    }

    fn duv_example(pair: Rational) -> IncompleteGame {
        let mut values = BTreeMap::new();
        values.insert(Coalition::grand(3), int(1));
        for s in [c(&[0, 1]), c(&[0, 2]), c(&[1, 2])] {
            values.insert(s, pair.clone());
        }
        IncompleteGame::new(3, values).unwrap()
    }

    #[test]
    fn duv_extendability() {
        assert!(is_extendable_duv(&duv_example(rat(1, 2))).unwrap());
        assert!(!is_extendable_duv(&duv_example(int(1))).unwrap());
        let minimal = three_player_example();
        assert_eq!(is_extendable_duv(&minimal), Err(Error::NoUpperVector));
        let restricted = pairs_game(rat(1, 2)).restrict(Coalition::all(3));
        assert!(is_extendable_duv(&restricted).unwrap());
    }

    #[test]
    fn duv_upper_game_and_description() {
        let mut g = duv_example(rat(1, 2));
        let mut values: BTreeMap<Coalition, Rational> = g.known().map(|(s, v)| (s, v.clone())).collect();
        values.insert(c(&[1]), int(0));
        values.insert(c(&[2]), int(0));
        g = IncompleteGame::new(3, values).unwrap();
        let upper = upper_game_duv(&g).unwrap();
        assert_eq!(upper.value(c(&[0])), &int(0));
        let d = description_duv(&g).unwrap();
        assert_eq!(d.extreme_games.len(), 1);
        assert_eq!(d.ray_index_set, vec![c(&[0])]);
        assert_eq!(d.extreme_rays.len(), 8 - g.known_count());
    }

    #[test]
    fn duv_decomposition() {
        let g = duv_example(rat(1, 2));
        let upper = upper_game_duv(&g).unwrap();
        match decompose_duv(&g, &upper).unwrap() {
            Membership::Member(cert) => assert!(cert.betas.values().all(Zero::is_zero)),
            other => panic!("{other:?}"),
        }
        let t = c(&[1]);
        let lowered = &upper + &extreme_ray(t, 3).unwrap();
        match decompose_duv(&g, &lowered).unwrap() {
            Membership::Member(cert) => assert_eq!(cert.betas[&t], int(1)),
            other => panic!("{other:?}"),
        }
        let raised = &upper - &extreme_ray(t, 3).unwrap();
        assert!(!is_one_convex(&raised));
        assert_eq!(
            decompose_duv(&g, &raised).unwrap(),
            Membership::NotMember(NonMember::NegativeBeta { coalition: t, value: int(-1) })
        );
    }
}
