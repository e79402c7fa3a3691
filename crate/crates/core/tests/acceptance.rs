//! Acceptance criteria 1–12. Prints one line per criterion and exits
//! non-zero when any criterion fails. All comparisons are exact.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use onecvx::axioms::{axiom, check_axiom, separation, distinguishing_suite, ValueFn, AVERAGE_VALUE_AXIOMS};
use onecvx::oneconvex::{
    decompose_duv, decompose_minimal, description, description_minimal, is_extendable_minimal, is_one_convex,
    upper_game, upper_game_duv, Membership, NonMember,
};
use onecvx::oracle::{
    coordinate_bounds_lp, extendable_by_lp, five_player_instance, shapley_permutation_oracle, three_player_instance,
    additive_with_hidden, claim_pool, vertex_enumeration, verify_claim, verify_claims, Claim, ClaimStatus, ExcessSign, Extent, GameSampler,
};
use onecvx::rational::{int, rat};
use onecvx::values::{
    average_shapley, average_tau, average_value, conic_shapley, conic_tau, nucleolus, ray_centre_marginal,
    ray_centre_shapley, ray_centre_shapley_closed_form, shapley, shapley_alternate, tau_one_convex,
};
use onecvx::{Coalition, CompleteGame, Game, IncompleteGame, PayoffVector, Rational};

type Outcome = Result<String, String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn err(e: onecvx::Error) -> String {
    e.to_string()
}

fn payoff(values: &[(i64, i64)]) -> PayoffVector {
    PayoffVector::new(values.iter().map(|(p, q)| rat(*p, *q)).collect())
}

fn extendable_minimal(s: &mut GameSampler, n: usize) -> IncompleteGame {
    s.minimal(n, ExcessSign::Extendable)
}

fn c1() -> Outcome {
    let x = average_value(&five_player_instance()).map_err(err)?;
    let expected = payoff(&[(2, 5), (7, 5), (12, 5), (7, 5), (22, 5)]);
    ensure(x == expected, || format!("got {x}"))?;
    Ok(format!("average value {x}"))
}

fn c2() -> Outcome {
    let mut s = GameSampler::new(2);
    let (mut negative, mut total) = (0, 0);
    for n in 3..=5 {
        for k in 0..200 {
            let sign = if k % 4 == 0 { ExcessSign::Negative } else { ExcessSign::Mixed };
            let g = s.minimal(n, sign);
            let closed = is_extendable_minimal(&g).map_err(err)?;
            ensure(closed == extendable_by_lp(&g), || format!("disagreement on n={n} game #{k}"))?;
            negative += usize::from(!closed);
            total += 1;
        }
    }
    ensure(negative > 0, || "no Delta < 0 case sampled".into())?;
    Ok(format!("{total} games agree, {negative} not extendable"))
}

fn c3() -> Outcome {
    let mut s = GameSampler::new(3);
    let mut unknowns = 0;
    for shape in ["minimal", "upper-vector"] {
        for k in 0..50 {
            let n = 3 + k % 2;
            let g = if shape == "minimal" { extendable_minimal(&mut s, n) } else { s.upper_vector(n) };
            let upper = upper_game(&g).map_err(err)?;
            for (t, bounds) in coordinate_bounds_lp(&g).map_err(err)? {
                unknowns += 1;
                ensure(bounds.max == Extent::Finite(upper.value(t).clone()), || {
                    format!("{shape} n={n}: max at {t} is {} but upper game has {}", bounds.max, upper.value(t))
                })?;
                if shape == "minimal" {
                    let interior = t.size() > 1 && t.size() + 1 < n;
                    ensure(interior == (bounds.min == Extent::Unbounded), || {
                        format!("minimal n={n}: min at {t} is {}", bounds.min)
                    })?;
                }
            }
        }
    }
    Ok(format!("{unknowns} unknown coordinates match"))
}

fn c4() -> Outcome {
    let mut s = GameSampler::new(4);
    let mut games = vec![five_player_instance()];
    for n in 2..=5 {
        games.extend((0..10).map(|_| extendable_minimal(&mut s, n)));
    }
    for g in &games {
        let n = g.n();
        let d = description_minimal(g).map_err(err)?;
        for (i, vi) in d.extreme_games.iter().enumerate() {
            let b = vi.upper_vector();
            let vn = vi.value(vi.grand());
            ensure(&b.total() == vn, || format!("v^{}: b(N) = {} but v(N) = {vn}", i + 1, b.total()))?;
            for t in Coalition::all(n).skip(1) {
                let bound = vn - b.over(t.complement(n));
                ensure(vi.value(t) == &bound, || {
                    format!(
                        "n={n} Delta={}: v^{} has slack {} at {t}",
                        g.total_excess().unwrap(),
                        i + 1,
                        &bound - vi.value(t)
                    )
                })?;
            }
        }
    }
    Ok(format!("{} games, every inequality tight", games.len()))
}

fn c5() -> Outcome {
    let mut s = GameSampler::new(5);
    let mut certificates = 0;
    for n in 3..=5 {
        for _ in 0..50 {
            let g = extendable_minimal(&mut s, n);
            let d = description_minimal(&g).map_err(err)?;
            for _ in 0..1000 {
                let w = d.reconstruct(&s.certificate(&d));
                ensure(is_one_convex(&w) && g.agrees_with(&w), || format!("n={n}: reconstruction not a 1-convex extension"))?;
                certificates += 1;
            }
        }
    }
    Ok(format!("{certificates} certificates reconstruct to 1-convex extensions"))
}

fn c6() -> Outcome {
    let g = three_player_instance();
    let vertices = vertex_enumeration(&g).map_err(err)?;
    ensure(vertices.len() == 4, || format!("{} vertices", vertices.len()))?;
    let half = rat(1, 2);
    let pairs = CompleteGame::from_fn(3, |t| match t.size() {
        2 => half.clone(),
        3 => int(1),
        _ => int(0),
    })
    .map_err(err)?;
    ensure(vertices.contains(&pairs), || "all-pairs-1/2 game is not a vertex".into())?;
    match decompose_minimal(&g, &pairs).map_err(err)? {
        Membership::NotMember(NonMember::AlphaSum { sum }) if sum == rat(3, 2) => {}
        other => return Err(format!("decompose gave {other:?}")),
    }
    let completeness = verify_claim(Claim::DescriptionCompleteness, &claim_pool(42, &[]));
    ensure(completeness.status == ClaimStatus::RefutedOnInstance, || format!("claims report: {}", completeness.status))?;
    Ok("4 vertices; half-pairs vertex rejected with alpha sum 3/2; report refutes completeness".into())
}

fn c7() -> Outcome {
    let mut s = GameSampler::new(7);
    let alphas = [int(0), int(1), int(7)];
    for n in 3..=5 {
        for k in 0..50 {
            let g = extendable_minimal(&mut s, n);
            let zeta = average_value(&g).map_err(err)?;
            let mut all = vec![("average tau", average_tau(&g)), ("average shapley", average_shapley(&g))];
            for a in &alphas {
                all.push(("conic tau", conic_tau(&g, a)));
                all.push(("conic shapley", conic_shapley(&g, a)));
            }
            for (name, x) in all {
                let x = x.map_err(err)?;
                ensure(x == zeta, || format!("n={n} game #{k}: {name} {x} vs {zeta}"))?;
            }
        }
    }
    Ok("150 games, alpha in {0, 1, 7}: all coincide with the closed form".into())
}

fn c8() -> Outcome {
    let mut s = GameSampler::new(8);
    for n in 3..=5 {
        for k in 0..50 {
            let g = s.one_convex(n, false);
            let eta = nucleolus(&g).map_err(err)?;
            let tau = tau_one_convex(&g).map_err(err)?;
            ensure(eta == tau, || format!("n={n} game #{k}: nucleolus {eta} vs tau {tau}"))?;
        }
    }
    Ok("150 1-convex games".into())
}

fn c9() -> Outcome {
    let mut s = GameSampler::new(9);
    for k in 0..100 {
        let n = 1 + k % 6;
        let g = s.complete(n);
        let (a, b) = (shapley(&g), shapley_alternate(&g));
        let c = shapley_permutation_oracle(&g).map_err(err)?;
        ensure(a == b && b == c, || format!("n={n}: {a} / {b} / {c}"))?;
    }
    Ok("100 games, n = 1..6".into())
}

fn c10() -> Outcome {
    let mut s = GameSampler::new(10);
    let mut members = 0;
    let mut rejected = 0;
    for k in 0..50 {
        let n = 3 + k % 2;
        let g = s.upper_vector(n);
        let upper = upper_game_duv(&g).map_err(err)?;
        let vertices = vertex_enumeration(&g).map_err(err)?;
        ensure(vertices == vec![upper.clone()], || format!("n={n}: {} vertices", vertices.len()))?;
        let mut candidates = vec![upper.clone()];
        for _ in 0..6 {
            let mut lowered = upper.clone();
            let mut random = upper.clone();
            let mut raised = upper.clone();
            for t in g.unknown() {
                lowered.set(t, upper.value(t) - s.rational(0, 3));
                random.set(t, s.rational(-5, 5));
            }
            let unknown = g.unknown();
            let t = unknown[s.index(unknown.len())];
            raised.set(t, upper.value(t) + rat(1, 6) + s.rational(0, 2));
            candidates.extend([lowered, random, raised]);
        }
        for w in &candidates {
            let member = decompose_duv(&g, w).map_err(err)?.is_member();
            ensure(member == is_one_convex(w), || format!("n={n}: decompose says {member} on {w:?}"))?;
            if member {
                members += 1;
            } else {
                rejected += 1;
            }
        }
    }
    Ok(format!("50 games single vertex; {members} accepted, {rejected} rejected, all matching 1-convexity"))
}

fn c11() -> Outcome {
    let mut s = GameSampler::new(11);
    let mut pairs = 0;
    for k in 0..30 {
        let n = 3 + k % 3;
        let g = s.upper_vector(n);
        let e = description(&g).map_err(err)?.centroid_rays();
        for t in Coalition::all(n) {
            for i in (0..n).filter(|i| !t.contains(*i)) {
                let direct = e.value(t.with(i)) - e.value(t);
                let table = ray_centre_marginal(&g, t, i).map_err(err)?;
                ensure(table == direct, || format!("n={n} S={t} i={}: {table} vs {direct}", i + 1))?;
                pairs += 1;
            }
        }
    }
    for k in 0..50 {
        let n = 3 + k % 3;
        let g = s.upper_vector(n);
        let direct = ray_centre_shapley(&g).map_err(err)?;
        for i in 0..n {
            let closed = ray_centre_shapley_closed_form(&g, i).map_err(err)?;
            ensure(closed == -direct[i].clone(), || format!("n={n} player {}: {closed} vs {}", i + 1, direct[i]))?;
        }
    }
    let symmetric = |n: usize, size: usize| -> Vec<Coalition> { Coalition::all(n).filter(|t| t.size() == size).collect() };
    for g in [
        additive_with_hidden(3, 2, &symmetric(3, 1)),
        additive_with_hidden(4, 2, &symmetric(4, 1)),
        additive_with_hidden(4, 2, &symmetric(4, 2)),
        additive_with_hidden(5, 1, &symmetric(5, 2)),
        additive_with_hidden(5, 1, &symmetric(5, 3)),
    ] {
        let direct = ray_centre_shapley(&g).map_err(err)?;
        for i in 0..g.n() {
            let closed = ray_centre_shapley_closed_form(&g, i).map_err(err)?;
            ensure(closed == int(0) && direct[i] == int(0), || {
                format!("symmetric unknown set, n={}: {closed} / {}", g.n(), direct[i])
            })?;
        }
    }
    Ok(format!("{pairs} marginal pairs; closed form = -direct on 50 games; zero on symmetric sets"))
}

fn c12() -> Outcome {
    let mut s = GameSampler::new(12);
    let mut problems = Vec::new();
    for n in 3..=5 {
        let suite: Vec<Game> = (0..50).map(|_| extendable_minimal(&mut s, n).into()).collect();
        for id in AVERAGE_VALUE_AXIOMS {
            let v = check_axiom(axiom(id).unwrap(), ValueFn::Average, &suite).map_err(err)?;
            if !v.holds {
                problems.push(format!("average value fails {id} at n={n}"));
            }
        }
        for id in ["efficiency", "elementary-symmetry", "elementary-additivity"] {
            let v = check_axiom(axiom(id).unwrap(), ValueFn::Solidarity, &suite).map_err(err)?;
            if !v.holds {
                problems.push(format!("solidarity value fails {id} at n={n}"));
            }
        }
    }

    for n in 3..=5 {
        for _ in 0..10 {
            let mut singles: Vec<Rational> = (0..n).map(|_| s.rational(-3, 3)).collect();
            singles[s.index(n)] = int(0);
            let grand = singles.iter().sum::<Rational>() + rat(1, 6) + s.rational(0, 4);
            let g: Game = IncompleteGame::minimal(&singles, grand).map_err(err)?.into();
            let null = check_axiom(axiom("null-player-analogue").unwrap(), ValueFn::Average, &[g]).map_err(err)?;
            if null.holds || null.counterexample.is_none() || !null.recheck().map_err(err)? {
                problems.push(format!("null-player analogue not refuted at n={n} with Delta > 0"));
            }
        }
    }

    let mut zero_excess_suite: Vec<Game> = vec![five_player_instance().into()];
    zero_excess_suite.extend((3..=5).map(|n| Game::from(s.minimal(n, ExcessSign::Positive))));
    zero_excess_suite.extend((3..=5).map(|n| Game::from(s.minimal(n, ExcessSign::Zero))));
    let zero_excess = check_axiom(axiom("zero-excess").unwrap(), ValueFn::Solidarity, &zero_excess_suite).map_err(err)?;
    if zero_excess.holds {
        problems.push("solidarity value satisfies zero-excess (expected to fail)".into());
    }

    let five = distinguishing_suite().into_iter().find(|c| c.game == five_player_instance()).unwrap();
    let (zeta, tau_s) = separation(&five).map_err(err)?;
    if zeta == tau_s {
        problems.push(format!("solidarity value {tau_s} equals the average value on the 5-player game"));
    }

    if problems.is_empty() {
        Ok("eight axioms hold; null-player analogue refuted; solidarity value separated".into())
    } else {
        Err(problems.join("; "))
    }
}

fn claims_report() -> Outcome {
    use ClaimStatus::{Confirmed as C, RefutedOnInstance as R};
    let expected = [C, C, R, C, R, C, R, R, C, R, C, C, C, C, C, C, R, C, R, R];
    let report = verify_claims(42, &[]);
    for (r, want) in report.iter().zip(expected) {
        ensure(r.status == want, || format!("{}: {} (expected {want})", r.claim.id(), r.status))?;
    }
    ensure(report.len() == expected.len(), || format!("{} claims", report.len()))?;
    let refuted = expected.iter().filter(|s| **s == R).count();
    Ok(format!("{} claims, {refuted} refuted-on-instance as documented", report.len()))
}

type Criterion = (&'static str, &'static str, Option<u64>, fn() -> Outcome);

const CRITERIA: [Criterion; 13] = [
    ("1", "5-player average value", Some(1), c1),
    ("2", "extendability vs LP feasibility", Some(30), c2),
    ("3", "upper game vs LP coordinate bounds", Some(60), c3),
    ("4", "extreme-game tightness", None, c4),
    ("5", "description soundness", Some(60), c5),
    ("6", "description completeness discrepancy", None, c6),
    ("7", "value coincidences", None, c7),
    ("8", "nucleolus equals tau on 1-convex games", Some(120), c8),
    ("9", "Shapley triple agreement", None, c9),
    ("10", "upper-vector structure", None, c10),
    ("11", "ray-centre lemmas", None, c11),
    ("12", "axioms for the average value", None, c12),
    ("-", "claims report under seed 42", None, claims_report),
];

fn main() {
    let mut failed = 0;
    for (id, name, limit, run) in CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(secs)) if elapsed > Duration::from_secs(secs) => {
                Err(format!("took {:.2}s, limit {secs}s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        let (verdict, detail) = match outcome {
            Ok(d) => ("pass", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {id:>2} {verdict} ({:.2}s) {name}: {detail}", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
