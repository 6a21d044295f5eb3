use std::io::Write;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::Rng;
use serde_json::json;

use schurdet::hring::det_rat;
use schurdet::identities::{
    bazin_sides, code_lemma_holds, factorial_entries, verify_converse, verify_factorial,
    verify_general_hg, verify_lp, verify_lp_straight, verify_main, FactorialForm, Verdict,
};
use schurdet::random;
use schurdet::schur::{classical_value, rat, ssyt_value};
use schurdet::shapes::{
    partitions_bounded, partitions_in_box, Cell, CellSet, FrobeniusPair, Partition, SkewShape,
};
use schurdet::strips::{
    decompose, kreiman, lascoux_pragacz, outer_strip, strip_with_endpoints, swap_by_strips,
    BorderStrip, CompatWindow, Decomposition, StripPlan, StripSlice,
};
use schurdet::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn p(v: &[i64]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn skew(o: &[i64], i: &[i64]) -> SkewShape {
    SkewShape::new(p(o), p(i)).unwrap()
}

fn cells(v: &[(i64, i64)]) -> CellSet {
    v.iter().map(|&(row, col)| Cell { row, col }).collect()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn points(seed: u64, count: usize, d: usize) -> Vec<Vec<BigRational>> {
    random::rational_points(&mut random::rng(seed), count, d)
}

fn factorial_counterexample() -> Outcome {
    let (l, m) = (p(&[2, 1]), p(&[1]));
    let zeros = vec![rat(0); 8];
    let pts = points(101, 5, 2);
    for x in &pts {
        for (form, target) in [
            (
                FactorialForm::Corrected,
                ssyt_value(&skew(&[3, 1], &[]), x) + ssyt_value(&skew(&[2, 2], &[]), x),
            ),
            (FactorialForm::Original, ssyt_value(&skew(&[3, 1], &[]), x)),
        ] {
            let entries = factorial_entries(&l, &m, form).map_err(|e| e.to_string())?;
            let matrix: Vec<Vec<BigRational>> = entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| match e {
                            None => rat(0),
                            Some((neg, part)) => {
                                let v = ssyt_value(&SkewShape::straight(part.clone()), x);
                                if *neg {
                                    -v
                                } else {
                                    v
                                }
                            }
                        })
                        .collect()
                })
                .collect();
            let d = det_rat(&matrix).map_err(|e| e.to_string())?;
            check(d == target, || {
                format!("{form:?} determinant at {x:?} is {d}, expected {target}")
            })?;
        }
    }
    let corrected = verify_factorial(&l, &m, &zeros, &pts, FactorialForm::Corrected)
        .map_err(|e| e.to_string())?;
    let original = verify_factorial(&l, &m, &zeros, &pts, FactorialForm::Original)
        .map_err(|e| e.to_string())?;
    check(corrected.verdict == Verdict::Pass, || {
        format!("corrected: {:?}", corrected.verdict)
    })?;
    check(original.verdict == Verdict::Fail, || {
        format!("original: {:?}", original.verdict)
    })?;
    Ok("corrected = s31 + s22 passes, original = s31 fails".into())
}

fn main_suite() -> Outcome {
    let box_parts = partitions_in_box(3, 3);
    let (mut pass, mut zero, mut trivial) = (0, 0, 0);
    for l in &box_parts {
        for m in &box_parts {
            for n in &box_parts {
                for r in
                    verify_main(l, m, n, Some(3)).map_err(|e| format!("{l:?} {m:?} {n:?}: {e}"))?
                {
                    match r.verdict {
                        Verdict::Pass => pass += 1,
                        Verdict::Zero => zero += 1,
                        Verdict::TrivialPass => trivial += 1,
                        Verdict::Fail => return Err(format!("{} fails on {}", r.form, r.instance)),
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} triples: {pass} pass, {zero} zero, {trivial} trivial",
        box_parts.len().pow(3)
    ))
}

fn example_lp_upper() -> Outcome {
    let (l, m, n) = (p(&[6, 6, 6, 3, 3]), p(&[4, 3, 2]), p(&[7, 6, 6, 5, 3, 2]));
    let reports = verify_lp(&l, &m, &n, Some(6)).map_err(|e| e.to_string())?;
    let upper = reports
        .iter()
        .find(|r| r.form == "LP2")
        .ok_or("no LP2 report")?;
    check(upper.verdict == Verdict::Pass, || {
        format!("LP2: {:?}", upper.verdict)
    })?;
    let theta = lascoux_pragacz(&SkewShape::new(l, m).unwrap()).map_err(|e| e.to_string())?;
    check(theta.len() == 3, || format!("k = {}", theta.len()))?;
    let (pp, q) = (theta.p(), theta.q());
    let negative: Vec<(usize, usize)> = (0..3)
        .flat_map(|i| (0..3).map(move |j| (i, j)))
        .filter(|&(i, j)| pp[j] > q[i])
        .map(|(i, j)| (i + 1, j + 1))
        .collect();
    check(negative == vec![(3, 2)], || {
        format!("negative entries at {negative:?}")
    })?;
    Ok(format!(
        "LP2 passes, p = {pp:?}, q = {q:?}, one negative entry at (q3, p2)"
    ))
}

fn example_lp_straight() -> Outcome {
    let r = verify_lp_straight(&p(&[6, 6, 6, 3, 3]), &p(&[4, 3, 2])).map_err(|e| e.to_string())?;
    check(r.verdict == Verdict::Pass, || format!("{:?}", r.verdict))?;
    Ok(format!("k = {}", r.k))
}

fn example_general_hg() -> Outcome {
    let nu = p(&[8, 8, 8, 6, 6, 5, 4]);
    let lambda = p(&[8, 8, 6, 6, 6, 3, 3]);
    let mu = p(&[4, 3]);
    let xy = [
        (0, 0),
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (1, 4),
        (2, 4),
        (2, 5),
        (2, 6),
        (3, 6),
        (3, 7),
        (4, 7),
        (5, 7),
        (6, 7),
    ];
    let gamma =
        BorderStrip::new(&cells(&xy.map(|(x, y)| (8 - y, x + 2)))).map_err(|e| e.to_string())?;
    check((gamma.p(), gamma.q()) == (-6, 7), || {
        format!("γ runs {}..{}", gamma.p(), gamma.q())
    })?;
    let r = verify_general_hg(&nu, &lambda, &mu, &gamma, CompatWindow::Widened)
        .map_err(|e| e.to_string())?;
    check(r.verdict == Verdict::Pass, || format!("{:?}", r.verdict))?;
    check(r.detail["r"] == json!([3, 2]), || {
        format!("r = {}", r.detail["r"])
    })?;
    Ok(format!("k = {}, r = {}", r.k, r.detail["r"]))
}

fn bazin() -> Outcome {
    let mut rng = random::rng(606);
    for t in 0..100 {
        let b = random::bazin_instance(&mut rng);
        let (lhs, rhs) = bazin_sides(&b.matrix, &b.a, &b.b, &b.c).map_err(|e| e.to_string())?;
        check(lhs == rhs, || format!("instance {t}: {lhs} != {rhs}"))?;
    }
    Ok("100 instances".into())
}

fn strip_of(gamma: &BorderStrip, strip: &BorderStrip) -> bool {
    gamma
        .clip(strip.p(), strip.q())
        .diagonal_offset(&strip.cell_set())
        .is_some()
}

fn decomposition_ok(s: &SkewShape, d: &Decomposition, gamma: &BorderStrip) -> bool {
    let total: usize = d.strips.iter().map(BorderStrip::len).sum();
    d.cells() == s.cells()
        && total == s.cells().len()
        && d.strips.iter().all(|t| strip_of(gamma, t))
}

fn outer_and_inner() -> Outcome {
    let (mut pairs, mut swaps) = (0usize, 0usize);
    for l in partitions_bounded(10, 4, 10) {
        let n = l.len();
        let Some(gamma) = outer_strip(&l) else {
            continue;
        };
        let code = l.content_code(n).map_err(|e| e.to_string())?;
        for a in code.values().to_vec() {
            for b in -(n as i64)..=l.part(1) + 1 {
                let Ok(direct) = l.swap_content(n, a, b) else {
                    continue;
                };
                let by_strips =
                    swap_by_strips(&l, a, b).map_err(|e| format!("λ = {l:?}, ({a}, {b}): {e}"))?;
                check(direct == by_strips, || {
                    format!("λ = {l:?}, ({a}, {b}): {direct:?} vs {by_strips:?}")
                })?;
                swaps += 1;
            }
        }
        for m in partitions_bounded(l.size(), 4, l.part(1))
            .into_iter()
            .filter(|m| l.contains(m))
        {
            let s = SkewShape::new(l.clone(), m.clone()).unwrap();
            let lp = lascoux_pragacz(&s).map_err(|e| e.to_string())?;
            check(decomposition_ok(&s, &lp, &gamma), || {
                format!("LP decomposition of {s:?}")
            })?;
            check(
                code_lemma_holds(&l, &m, n, &lp).map_err(|e| e.to_string())?,
                || format!("endpoint sets of {s:?}"),
            )?;
            let kr = kreiman(&s).map_err(|e| e.to_string())?;
            if let Some(inner) = schurdet::strips::inner_strip(&s).map_err(|e| e.to_string())? {
                check(decomposition_ok(&s, &kr, &inner), || {
                    format!("Kreiman decomposition of {s:?}")
                })?;
            } else {
                check(kr.is_empty(), || {
                    format!("Kreiman decomposition of empty {s:?}")
                })?;
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} shapes, {swaps} swaps"))
}

fn oracle() -> Outcome {
    let mut rng = random::rng(808);
    for t in 0..100 {
        let s = loop {
            let outer = random::partition(&mut rng, 14, 4, 5);
            let inner = random::subpartition(&mut rng, &outer);
            let s = SkewShape::new(outer, inner).unwrap();
            if s.size() <= 10 {
                break s;
            }
        };
        let d = rng.gen_range(1..=3);
        for x in random::rational_points(&mut rng, 5, d) {
            let a = classical_value(&s, &x).map_err(|e| e.to_string())?;
            let b = ssyt_value(&s, &x);
            check(a == b, || format!("shape {t} {s:?} at {x:?}: {a} vs {b}"))?;
        }
    }
    Ok("100 shapes at 5 points".into())
}

fn round_trip<R: Rng>(rng: &mut R) -> Result<bool, String> {
    let lo = rng.gen_range(-6..=0);
    let hi = lo + rng.gen_range(2..=10);
    let gamma = random::border_strip(rng, lo, hi);
    let k = rng.gen_range(1..=3);
    let Some((a, b)) = random::ballot_endpoints(rng, &gamma, k) else {
        return Ok(false);
    };
    let taus =
        strip_with_endpoints(&gamma, &a, &b, StripPlan::default()).map_err(|e| e.to_string())?;
    for tau in &taus {
        let d = decompose(tau, &gamma).map_err(|e| e.to_string())?;
        let (mut ps, mut qs) = (d.p(), d.q());
        ps.sort_unstable();
        qs.sort_unstable();
        check(ps == a && qs == b, || {
            format!("γ {gamma:?}, a {a:?}, b {b:?}: got {ps:?}, {qs:?}")
        })?;
        check(tau.normalized().is_skew_shape(), || {
            format!("{tau:?} is not a skew shape")
        })?;
    }
    Ok(true)
}

fn converse() -> Outcome {
    let mut rng = random::rng(909);
    let (mut witnessed, mut zero, mut counter, mut unavailable, mut draws) = (0, 0, 0, 0, 0);
    while witnessed < 50 {
        draws += 1;
        check(draws <= 1000, || {
            format!("only {witnessed} witnessed instances in 1000 draws")
        })?;
        let c = random::converse_instance(&mut rng, 12, 3);
        let x = random::rational_points(&mut rng, 5, 3);
        match verify_converse(&c.alpha, &c.a, &c.b, &x) {
            Ok(r) => match r.verdict {
                Verdict::Pass => witnessed += 1,
                Verdict::Zero => zero += 1,
                Verdict::Fail if r.detail.get("schur_expansion").is_some() => counter += 1,
                v => return Err(format!("{v:?} on {}", r.instance)),
            },
            Err(Error::ConstructionUnavailable(_)) => unavailable += 1,
            Err(e) => return Err(format!("{e} on {c:?}")),
        }
    }
    let mut trips = 0;
    while trips < 200 {
        if round_trip(&mut rng)? {
            trips += 1;
        }
    }
    let xy: Vec<(i64, i64)> = [
        (0, 0),
        (0, 1),
        (1, 1),
        (2, 1),
        (3, 1),
        (3, 2),
        (4, 2),
        (5, 2),
        (5, 3),
        (5, 4),
        (6, 4),
        (7, 4),
        (7, 5),
        (8, 5),
    ]
    .iter()
    .map(|&(x, y)| (6 - y, x + 1))
    .collect();
    let gamma = BorderStrip::new(&cells(&xy)).map_err(|e| e.to_string())?;
    let expected = skew(&[9, 8, 6, 6, 5, 5, 2], &[7, 5, 3, 3, 2, 1, 1]).cells();
    let taus = strip_with_endpoints(&gamma, &[-5, -2, 1], &[0, 2, 8], StripPlan { limit: 64 })
        .map_err(|e| e.to_string())?;
    check(
        taus.iter().any(|t| t.diagonal_offset(&expected).is_some()),
        || format!("τ not among {} shapes", taus.len()),
    )?;
    Ok(format!(
        "{witnessed} witnessed in {draws} draws ({zero} zero, {counter} certified counterexamples, {unavailable} unavailable); 200 round trips"
    ))
}

fn golden() -> Outcome {
    let code = p(&[6, 6, 4, 2])
        .content_code(6)
        .map_err(|e| e.to_string())?;
    check(code.descending() == vec![5, 4, 1, -2, -5, -6], || {
        format!("C_6 = {:?}", code.descending())
    })?;
    let xy = [
        (0, 0),
        (1, 0),
        (1, 1),
        (2, 1),
        (3, 1),
        (3, 2),
        (4, 2),
        (4, 3),
        (5, 3),
    ];
    let gamma =
        BorderStrip::new(&cells(&xy.map(|(x, y)| (4 - y, x + 1)))).map_err(|e| e.to_string())?;
    check((gamma.p(), gamma.q()) == (-3, 5), || {
        format!("p, q = {}, {}", gamma.p(), gamma.q())
    })?;
    check(gamma.slice(3, 2) == Ok(StripSlice::Empty), || {
        "γ[3,2] is not empty".into()
    })?;
    check(gamma.slice(2, -1) == Ok(StripSlice::Undefined), || {
        "γ[2,-1] is defined".into()
    })?;
    let f = FrobeniusPair::new(vec![4, 2, 1], vec![3, 1, 0]).map_err(|e| e.to_string())?;
    check(f.to_partition() == p(&[5, 4, 4, 1]), || {
        format!("{:?}", f.to_partition())
    })?;
    Ok("content code, strip slices, Frobenius".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (
            "factorial Schur counterexample",
            Duration::from_secs(1),
            factorial_counterexample,
        ),
        (
            "free-ring identity on (3,3,3)",
            Duration::from_secs(60),
            main_suite,
        ),
        (
            "Lascoux-Pragacz with nu on top",
            Duration::from_secs(30),
            example_lp_upper,
        ),
        (
            "Lascoux-Pragacz straight form",
            Duration::from_secs(30),
            example_lp_straight,
        ),
        (
            "generalized Hamel-Goulden example",
            Duration::from_secs(60),
            example_general_hg,
        ),
        ("Bazin identity", Duration::from_secs(5), bazin),
        (
            "endpoint sets, swaps, decompositions",
            Duration::from_secs(60),
            outer_and_inner,
        ),
        ("SSYT oracle", Duration::from_secs(60), oracle),
        (
            "converse and strip construction",
            Duration::from_secs(120),
            converse,
        ),
        ("golden values", Duration::from_secs(1), golden),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if t <= *limit {
                Ok(msg)
            } else {
                Err(format!("{msg}; took {t:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => writeln!(out, "PASS {:>2} {name} [{t:.2?}]: {msg}", i + 1).unwrap(),
            Err(msg) => {
                writeln!(out, "FAIL {:>2} {name} [{t:.2?}]: {msg}", i + 1).unwrap();
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
