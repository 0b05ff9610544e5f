//! One line per acceptance criterion; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use ratrig::affine::{analyze_triangle, VectorTriangle};
use ratrig::examples::{self, MINKOWSKI_TRIANGLE, MINKOWSKI_TRIPOD};
use ratrig::field::{FieldElement, FieldSpec};
use ratrig::linalg::Vec3;
use ratrig::metric::BilinearForm;
use ratrig::projective::{
    analyze_tripod, asymmetric_cross_law_sides, pythagoras_spread_solutions, Tripod,
};
use ratrig::rng::Lcg64;
use ratrig::verify::{self, Identity, Mode};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn eq(what: &str, got: impl ToString, want: &str) -> Outcome {
    let got = got.to_string();
    ensure(got == want, || {
        format!("{what}: got {got}, expected {want}")
    })
}

fn opt(x: &Option<FieldElement>) -> String {
    x.as_ref().map_or("undefined".into(), |x| x.to_string())
}

const Q: FieldSpec = FieldSpec::rational();

fn methane() -> Outcome {
    for (q, want) in [("1", "3"), ("2", "12"), ("7/3", "49/3")] {
        let r = examples::methane(Q.parse(q).unwrap()).map_err(|e| e.to_string())?;
        ensure(r.deviations.is_empty(), || {
            format!("Q={q}: {:?}", r.deviations)
        })?;
        eq("s", &r.s, "3/4")?;
        eq("q", &r.q, "3/4")?;
        eq("a", &r.a, "1/2")?;
        eq("S", &r.spread_faces, "8/9")?;
        eq(&format!("quadrea at Q={q}"), &r.quadrea, want)?;
        eq(&format!("3Q² at Q={q}"), &r.quadrea_closed_form, want)?;
    }
    Ok(())
}

fn affine_minkowski() -> Outcome {
    let b = BilinearForm::minkowski(Q);
    let [v1, v2] = MINKOWSKI_TRIANGLE.map(|c| Vec3::from_i64(Q, c));
    let t = VectorTriangle::from_two(v1, v2).unwrap();
    let r = analyze_triangle(&b, &t).unwrap();
    for (i, want) in ["6", "13", "1"].iter().enumerate() {
        eq(&format!("Q{}", i + 1), &r.quadrances[i], want)?;
    }
    for (i, want) in ["-3/13", "-1/2", "-1/26"].iter().enumerate() {
        eq(&format!("s{}", i + 1), opt(&r.spreads[i]), want)?;
    }
    eq("quadrea", &r.quadrea, "-12")?;
    eq("spread ratio", opt(&r.spread_ratio()), "-1/26")?;
    ensure(!r.any_failed(), || format!("law checks {:?}", r.checks))?;
    let ex = examples::minkowski_affine();
    eq("triple spread lhs", &ex.triple_spread_sides[0], "-3/169")?;
    eq("triple spread rhs", &ex.triple_spread_sides[1], "-3/169")?;
    ensure(ex.deviations.is_empty(), || format!("{:?}", ex.deviations))
}

fn projective_minkowski() -> Outcome {
    let b = BilinearForm::minkowski(Q);
    let [p1, p2, p3] = MINKOWSKI_TRIPOD.map(|c| Vec3::from_i64(Q, c));
    let t = Tripod::from_vectors(&p1, &p2, &p3).unwrap();
    let r = analyze_tripod(&b, &t).unwrap();
    let q = ["239/203", "-2/7", "197/116"];
    let s = ["169/394", "-4901/47083", "1183/1912"];
    let duals = [[20, 8, 15], [4, -1, 3], [15, 6, 8]];
    for i in 0..3 {
        eq(&format!("q{}", i + 1), opt(&r.quadrances[i]), q[i])?;
        eq(&format!("S{}", i + 1), opt(&r.spreads[i]), s[i])?;
        let want = ratrig::ProjectivePoint::new(&Vec3::from_i64(Q, duals[i])).unwrap();
        ensure(r.dual.points()[i] == want, || {
            format!("dual {}: got {}", i + 1, r.dual.points()[i])
        })?;
    }
    eq("common ratio", opt(&r.spread_ratio()), "34307/94166")?;
    eq("a_B", opt(&r.quadrea), "-169/812")?;
    eq("l_B", opt(&r.quadreal), "-28561/376664")?;
    ensure(!r.any_failed(), || format!("law checks {:?}", r.checks))?;

    let d = analyze_tripod(&b, &r.dual).unwrap();
    ensure(
        d.quadrances == r.spreads && d.spreads == r.quadrances,
        || "dual swaps q and S".into(),
    )?;
    ensure(d.quadrea == r.quadreal && d.quadreal == r.quadrea, || {
        "dual swaps a and l".into()
    })?;

    let ex = examples::minkowski_projective();
    eq("cross law lhs", &ex.cross_law_sides[0], "26244/41209")?;
    eq("cross law rhs", &ex.cross_law_sides[1], "26244/41209")?;
    ensure(ex.deviations.is_empty(), || format!("{:?}", ex.deviations))
}

/// Zero failures, each identity evaluated on every case, skips only where
/// preconditions fail (the summary never counts a skip as a pass).
fn check_summary(
    label: &str,
    s: &verify::Summary,
    expect_tested: impl Fn(Identity) -> Option<u64>,
) -> Outcome {
    ensure(s.failures == 0, || {
        let bad: Vec<_> = s
            .identities
            .iter()
            .filter(|(_, c)| c.failed > 0)
            .map(|(k, c)| format!("{k}: {c:?}"))
            .collect();
        format!("{label}: {} failures: {bad:?}", s.failures)
    })?;
    for &id in Identity::ALL {
        let c = s.counts(id);
        ensure(c.passed + c.skipped == c.tested, || {
            format!("{label}: {} counts {c:?}", id.name())
        })?;
        if let Some(n) = expect_tested(id) {
            ensure(c.tested == n, || {
                format!("{label}: {} tested {} of {n}", id.name(), c.tested)
            })?;
            ensure(c.passed > 0, || {
                format!("{label}: {} never applicable", id.name())
            })?;
        }
    }
    Ok(())
}

fn random_sweep() -> Outcome {
    for spec in [Q, FieldSpec::prime(101).unwrap()] {
        for b in [BilinearForm::euclidean(spec), BilinearForm::minkowski(spec)] {
            let s = verify::run(
                &b,
                Mode::Random {
                    seed: 1,
                    cases: 1000,
                },
            )
            .map_err(|e| e.to_string())?;
            let label = format!("{spec} {:?}", s.form);
            check_summary(&label, &s, |_| Some(1000))?;
        }
    }
    Ok(())
}

fn exhaustive_sweep() -> Outcome {
    for p in [3u64, 5] {
        let spec = FieldSpec::prime(p).unwrap();
        for b in [BilinearForm::euclidean(spec), BilinearForm::minkowski(spec)] {
            let s = verify::run(&b, Mode::Exhaustive { prime: p }).map_err(|e| e.to_string())?;
            let n = p.pow(3);
            let label = format!("F{p} {:?}", s.form);
            check_summary(&label, &s, |id| match id.arity() {
                2 => Some(n * n),
                3 => Some(n * n * n),
                _ => (p == 3).then(|| n.pow(4)),
            })?;
        }
    }
    Ok(())
}

fn induced_form() -> Outcome {
    let c = verify::induced_form_sweep(1, 100, 20);
    ensure(c.tested == 2000 && c.passed == 2000, || format!("{c:?}"))
}

fn pythagoras_solutions() -> Outcome {
    let mut rng = Lcg64::new(1);
    let mut draw = || loop {
        let x = Q
            .from_ratio(rng.range_i64(-20, 20), rng.range_i64(1, 20))
            .unwrap();
        if !x.is_zero() {
            return x;
        }
    };
    for _ in 0..50 {
        let (q2, q3) = (draw(), draw());
        let q1 = &q2 + &q3 - &q2 * &q3;
        let sols = pythagoras_spread_solutions(&q2, &q3, &q1).map_err(|e| e.to_string())?;
        ensure(sols[0] == Q.one(), || "first solution is 1".into())?;
        for s1 in &sols {
            let (lhs, rhs) = asymmetric_cross_law_sides(&q1, &q2, &q3, s1);
            ensure(lhs == rhs, || {
                format!("q2={q2} q3={q3} S1={s1}: {lhs} != {rhs}")
            })?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 methane replay", methane, Duration::from_secs(1)),
        (
            "2 affine Minkowski replay",
            affine_minkowski,
            Duration::from_secs(1),
        ),
        (
            "3 projective Minkowski replay",
            projective_minkowski,
            Duration::from_secs(1),
        ),
        (
            "4 random identity sweep",
            random_sweep,
            Duration::from_secs(60),
        ),
        (
            "5 exhaustive identity sweep",
            exhaustive_sweep,
            Duration::from_secs(300),
        ),
        ("6 induced form", induced_form, Duration::from_secs(5)),
        (
            "7 Pythagoras second solution",
            pythagoras_solutions,
            Duration::from_secs(1),
        ),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let result = f();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })
        });
        match result {
            Ok(()) => println!("PASS  {name} ({elapsed:.2?})"),
            Err(e) => {
                failed += 1;
                println!("FAIL  {name} ({elapsed:.2?}): {e}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
