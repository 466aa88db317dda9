//! End-to-end acceptance checks. Prints one line per criterion and exits
//! non-zero if any fails.

use std::time::{Duration, Instant};

use twincover::{
    brute_force_twin_search, classify_montesinos, classify_torus, constrained_cf, cover_jsj_satellite,
    cover_of_montesinos, cover_of_torus_knot, cover_of_torus_knot_with, decide, eval_cf,
    is_tn1_montesinos, lift_two_bridge, oracle_verdict, parse_presentation, verify_twin, CfForm,
    Chirality, JsjPiece, Knot64, KnotPresentation, MontesinosKnot, Rational, SatelliteTn1, Sfs64,
    Tangle, TorusCoverIndex, TorusKnot, TwoBridge, Verdict,
};
use twincover_cli::census::{self, CensusRow};

const TORUS_MAX: i64 = 25;
const TORUS_TIME_LIMIT: Duration = Duration::from_secs(1);
const MONTESINOS_MAX_ALPHA: i64 = 20;
const MONTESINOS_MAX_B: i64 = 3;
const MONTESINOS_TIME_LIMIT: Duration = Duration::from_secs(60);
const LIFT_MAX_ALPHA: i64 = 50;
const SATELLITE_MAX_PATTERN: i64 = 20;
const SATELLITE_MAX_COMPANION: i64 = 7;

type Check = Result<String, String>;

/// Everything later criteria sweep over.
#[derive(Default)]
struct Produced {
    covers: Vec<Sfs64>,
    knots: Vec<Knot64>,
    rows: Vec<CensusRow>,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

fn torus_pairs(max: i64) -> Vec<(i64, i64)> {
    (2..=max)
        .flat_map(|p| (p + 1..=max).map(move |qq| (p, qq)))
        .filter(|&(p, qq)| gcd(p, qq) == 1)
        .collect()
}

/// Cover of `T(p, q)` worked by hand from the parity cases, reduced with `%`.
fn hand_cover(p: i64, qq: i64) -> (Vec<(i64, i64)>, Rational) {
    let x = (0..p).find(|x| (-1 - x * qq) % p == 0).unwrap();
    let y = (-1 - x * qq) / p;
    let (mut fibers, e) = if p % 2 == 1 && qq % 2 == 1 {
        let k = (1 - p * qq) / 2;
        (vec![(2, 1), (p, k * x), (qq, k * y)], q(1, 2 * p * qq))
    } else if p % 2 == 0 {
        (vec![(p / 2, x), (qq, y), (qq, y)], q(1, p / 2 * qq))
    } else {
        (vec![(p, x), (p, x), (qq / 2, y)], q(1, qq / 2 * p))
    };
    for f in &mut fibers {
        f.1 = f.1.rem_euclid(f.0);
    }
    fibers.retain(|f| f.0 > 1);
    fibers.sort();
    (fibers, e)
}

fn pairs_of(c: &Sfs64) -> Vec<(i64, i64)> {
    c.fibers.iter().map(|f| (f.alpha, f.beta)).collect()
}

fn criterion_1(out: &mut Produced) -> Check {
    let start = Instant::now();
    let mut decisions = Vec::new();
    for (p, qq) in torus_pairs(TORUS_MAX) {
        let d = classify_torus(&TorusKnot::new(p, qq).unwrap()).map_err(|e| e.to_string())?;
        decisions.push((p, qq, d));
    }
    let elapsed = start.elapsed();
    let mut mismatches = Vec::new();
    for (p, qq, d) in &decisions {
        let expected = *p == 2 || (*p, *qq) == (3, 4) || (*p, *qq) == (3, 5);
        if (d.verdict == Verdict::Determined) != expected {
            mismatches.push(format!("T({p},{qq})"));
        }
        if let Some(c) = &d.evidence.cover {
            out.covers.push(c.clone());
        }
        out.knots.push(KnotPresentation::Torus(TorusKnot::new(*p, *qq).unwrap()));
    }
    ensure(mismatches.is_empty(), || format!("mismatches: {}", mismatches.join(" ")))?;
    ensure(elapsed < TORUS_TIME_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("{} knots, 0 mismatches, {:.3} s", decisions.len(), elapsed.as_secs_f64()))
}

fn criterion_2(out: &mut Produced) -> Check {
    let cases = [
        (3, 5, vec![(2, 1), (3, 2), (5, 4)], q(1, 30)),
        (4, 5, vec![(2, 1), (5, 1), (5, 1)], q(1, 10)),
        (3, 4, vec![(2, 1), (3, 2), (3, 2)], q(1, 6)),
    ];
    for (p, qq, fibers, e) in cases {
        let (c, _) = cover_of_torus_knot(&TorusKnot::new(p, qq).unwrap()).map_err(|e| e.to_string())?;
        ensure(pairs_of(&c) == fibers && c.euler == e, || format!("T({p},{qq}) gave {c:?}"))?;
        ensure(hand_cover(p, qq) == (fibers.clone(), e.clone()), || format!("hand reduction of T({p},{qq})"))?;
        out.covers.push(c);
    }
    Ok("T(3,5), T(4,5), T(3,4) exact".into())
}

fn criterion_3(out: &mut Produced) -> Check {
    let mut compared = 0;
    for (p, qq) in torus_pairs(TORUS_MAX).into_iter().filter(|(p, qq)| p % 2 == 1 && qq % 2 == 1) {
        let t = TorusKnot::new(p, qq).unwrap();
        let (base, _) = cover_of_torus_knot(&t).map_err(|e| e.to_string())?;
        for d in [1, 3, 5, 7] {
            for shift in -2..=2 {
                let (c, der) = cover_of_torus_knot_with(&t, &d, &shift).map_err(|e| e.to_string())?;
                ensure(der.y * p + der.x * qq == -1, || format!("T({p},{qq}) Bezout pair"))?;
                ensure(c == base, || format!("T({p},{qq}) d={d} shift={shift}"))?;
                out.covers.push(c);
                compared += 1;
            }
        }
    }
    Ok(format!("{compared} variants identical"))
}

fn criterion_4(out: &mut Produced) -> Check {
    let mut checked = 0;
    for (p, qq) in torus_pairs(TORUS_MAX) {
        let t = TorusKnot::new(p, qq).unwrap();
        let d = classify_torus(&t).map_err(|e| e.to_string())?;
        if d.verdict != Verdict::NotDetermined {
            continue;
        }
        let twin = d.twin.clone().ok_or_else(|| format!("T({p},{qq}) has no twin"))?;
        let k = KnotPresentation::Torus(t);
        ensure(verify_twin(&k, &twin).map_err(|e| e.to_string())?, || format!("T({p},{qq}) vs {twin}"))?;
        if let KnotPresentation::Montesinos(m) = &twin {
            let c = cover_of_montesinos(m).map_err(|e| e.to_string())?;
            ensure((pairs_of(&c), c.euler.clone()) == hand_cover(p, qq), || format!("{twin} cover"))?;
            out.covers.push(c);
        }
        out.knots.push(twin);
        checked += 1;
    }
    Ok(format!("{checked} twins verified"))
}

/// Independent enumeration: every normalized triple, tested for tunnel
/// number one with no shape pruning.
fn all_tn1_triples(max_alpha: i64, max_b: i64) -> Vec<MontesinosKnot> {
    census::montesinos_grid(&max_alpha, &max_b)
        .into_iter()
        .filter(|k| is_tn1_montesinos(k).unwrap().0)
        .collect()
}

fn criterion_5(out: &mut Produced) -> Check {
    let start = Instant::now();
    let grid = census::tn1_montesinos_grid(&MONTESINOS_MAX_ALPHA, &MONTESINOS_MAX_B).map_err(|e| e.to_string())?;
    let max_bound = 4 * MONTESINOS_MAX_ALPHA * MONTESINOS_MAX_ALPHA;
    let index = TorusCoverIndex::build(max_bound).map_err(|e| e.to_string())?;
    let mut twins = 0;
    for k in &grid {
        let d = classify_montesinos(k).map_err(|e| e.to_string())?;
        let bound = 4 * k.tangles[1].alpha * k.tangles[2].alpha;
        let found = index.search(k, &bound).map_err(|e| e.to_string())?;
        ensure(oracle_verdict(found.as_ref()) == d.verdict, || {
            format!("{} classified {:?}, scan found {found:?}", KnotPresentation::Montesinos(k.clone()), d.verdict)
        })?;
        if d.verdict == Verdict::NotDetermined {
            let emitted = d.torus_twin().ok_or("twin is not a torus knot")?;
            let hit = found.as_ref().ok_or("scan found nothing")?;
            ensure(emitted == hit, || format!("emitted {emitted}, scan found {hit}"))?;
            twins += 1;
            out.knots.push(KnotPresentation::Torus(emitted.clone()));
        }
        if let Some(c) = &d.evidence.cover {
            out.covers.push(c.clone());
        }
        out.knots.push(KnotPresentation::Montesinos(k.clone()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < MONTESINOS_TIME_LIMIT, || format!("took {elapsed:?}"))?;

    // The pruned grid is the full filtered grid, and the index is the scan.
    let full = all_tn1_triples(MONTESINOS_MAX_ALPHA, MONTESINOS_MAX_B);
    ensure(full == grid, || format!("pruned grid has {}, full filter {}", grid.len(), full.len()))?;
    let mut literal = 0;
    for k in grid.iter().filter(|k| k.tangles[2].alpha <= 7) {
        let bound = 4 * k.tangles[1].alpha * k.tangles[2].alpha;
        let scan = brute_force_twin_search(k, &bound).map_err(|e| e.to_string())?;
        ensure(scan == index.search(k, &bound).unwrap(), || format!("index differs from scan on {k:?}"))?;
        literal += 1;
    }
    out.rows = census::montesinos_rows(&MONTESINOS_MAX_ALPHA, &MONTESINOS_MAX_B, false).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} knots, {twins} twins, 0 disagreements, {:.1} s ({literal} rechecked by direct scan)",
        grid.len(),
        elapsed.as_secs_f64()
    ))
}

fn criterion_6(out: &mut Produced) -> Check {
    let triples = [
        (MontesinosKnot::from_pairs(1, &[(2, 1), (3, 1), (7, 1)]), TorusKnot::new(3, 7).unwrap()),
        (MontesinosKnot::from_pairs(1, &[(2, 1), (5, 1), (5, 1)]), TorusKnot::new(4, 5).unwrap()),
        (MontesinosKnot::from_pairs(1, &[(3, 1), (3, 1), (4, 1)]), TorusKnot::new(3, 8).unwrap()),
    ];
    for (m, t) in triples {
        let d = classify_montesinos(&m).map_err(|e| e.to_string())?;
        ensure(d.torus_twin() == Some(&t), || format!("{m:?} gave {:?}", d.twin))?;
        let bound = 4 * m.tangles[1].alpha * m.tangles[2].alpha;
        let scan = brute_force_twin_search(&m, &bound).map_err(|e| e.to_string())?;
        ensure(scan.as_ref() == Some(&t), || format!("scan found {scan:?}"))?;
        let (mk, tk) = (KnotPresentation::Montesinos(m.clone()), KnotPresentation::Torus(t.clone()));
        ensure(verify_twin(&mk, &tk).map_err(|e| e.to_string())?, || format!("{mk} vs {tk}"))?;
        out.covers.push(cover_of_montesinos(&m).map_err(|e| e.to_string())?);
        out.knots.extend([mk, tk]);
    }
    Ok("3 triples, classifier and scan agree".into())
}

/// `(b; …)` rewritten with `βᵢ + nᵢαᵢ` and `b + Σnᵢ`, which keeps the knot.
fn rewrite(b: i64, tangles: &[(i64, i64)], shifts: &[i64]) -> MontesinosKnot {
    let b = b + shifts.iter().sum::<i64>();
    MontesinosKnot::new(
        b,
        tangles
            .iter()
            .zip(shifts)
            .map(|(&(a, be), n)| Tangle::new(a, be + n * a))
            .collect(),
    )
}

fn criterion_7(out: &mut Produced) -> Check {
    let cases = [
        (&[(2, 1), (3, -1), (5, -1)], TorusKnot::new(3, 5).unwrap()),
        (&[(2, 1), (3, -1), (3, -1)], TorusKnot::new(3, 4).unwrap()),
    ];
    let shifts: [&[i64]; 4] = [&[0, 0, 0], &[-1, 1, 1], &[2, 0, -1], &[1, -2, 3]];
    let mut checked = 0;
    for (tangles, torus) in cases {
        for s in shifts {
            let k = rewrite(0, tangles, s);
            let d = classify_montesinos(&k).map_err(|e| e.to_string())?;
            ensure(d.verdict == Verdict::Determined, || format!("{k:?} gave {:?}", d.verdict))?;
            ensure(d.identified_as == Some(KnotPresentation::Torus(torus.clone())), || {
                format!("{k:?} identified as {:?}", d.identified_as)
            })?;
            let mirrored = decide(&KnotPresentation::Montesinos(k.clone()).mirror().unwrap()).unwrap();
            ensure(mirrored.identified_as == Some(KnotPresentation::Torus(torus.mirror())), || {
                format!("mirror of {k:?} identified as {:?}", mirrored.identified_as)
            })?;
            if let Some(c) = d.evidence.cover {
                out.covers.push(c);
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} presentations identified as T(3,5) or T(3,4)"))
}

/// `[c₀; c₁, …]` read as `1/(c₀ + 1/(c₁ + ⋯))`, by continuants in `i128`.
fn continuant_value(denominators: &[i128]) -> Option<(i128, i128)> {
    let (mut num, mut den) = (0i128, 1i128);
    for c in denominators.iter().rev() {
        // 1/(c + num/den) = den/(c·den + num)
        let next = c * den + num;
        if next == 0 {
            return None;
        }
        (num, den) = (den, next);
    }
    let g = gcd(num as i64, den as i64) as i128;
    let s = if den < 0 { -1 } else { 1 };
    Some((s * num / g, s * den / g))
}

fn criterion_8(out: &mut Produced) -> Check {
    let mut checked = 0;
    for alpha in 2..=LIFT_MAX_ALPHA {
        for beta in (1..2 * alpha).step_by(2).filter(|b| gcd(2 * alpha, *b) == 1) {
            let link = TwoBridge::new(2 * alpha, beta).unwrap();
            let l = lift_two_bridge(&link).map_err(|e| e.to_string())?;
            let cf = constrained_cf(&q(beta, 2 * alpha)).map_err(|e| e.to_string())?;
            let a: Vec<i128> = cf.coefficients().iter().map(|&c| c as i128).collect();
            let odd: Vec<i128> = a.iter().enumerate().map(|(i, c)| if i % 2 == 0 { 2 * c } else { *c }).collect();
            let even: Vec<i128> = a.iter().enumerate().map(|(i, c)| if i % 2 == 1 { 2 * c } else { *c }).collect();
            let red = |n: i64, d: i64| {
                let g = gcd(n, d);
                Some(((n / g) as i128, (d / g) as i128))
            };
            let tag = format!("b({}, {beta})", 2 * alpha);
            ensure(a.len() % 2 == 1 && a.iter().all(|&c| c != 0), || format!("{tag}: shape {a:?}"))?;
            ensure(continuant_value(&odd) == red(beta, 2 * alpha), || format!("{tag}: round trip"))?;
            ensure(eval_cf(&cf).unwrap() == q(beta, 2 * alpha), || format!("{tag}: eval"))?;
            ensure(continuant_value(&even) == red(beta, alpha), || format!("{tag}: lift fraction"))?;
            ensure(
                eval_cf(&cf.with_form(CfForm::EvenDoubled).unwrap()).unwrap() == q(beta, alpha),
                || format!("{tag}: lift eval"),
            )?;
            ensure(l.expansion == cf, || format!("{tag}: lift expansion"))?;
            ensure(l.lifted == TwoBridge::new(alpha, beta.rem_euclid(alpha)).unwrap(), || format!("{tag}: lifted"))?;
            ensure(l.components == if alpha % 2 == 1 { 1 } else { 2 }, || format!("{tag}: components"))?;
            let linking: i128 = a.iter().step_by(2).sum();
            ensure(linking.rem_euclid(2) == (alpha % 2) as i128, || format!("{tag}: linking parity"))?;
            ensure(l.linking_parity as i64 == alpha % 2, || format!("{tag}: reported linking parity"))?;
            let r = beta.rem_euclid(alpha);
            let hyperbolic = r != 1 % alpha && r != (alpha - 1) % alpha;
            ensure(l.hyperbolic == hyperbolic, || format!("{tag}: hyperbolic flag"))?;
            out.knots.push(KnotPresentation::TwoBridge(link));
            checked += 1;
        }
    }
    Ok(format!("{checked} links, all five properties hold"))
}

fn satellite_grid() -> Vec<SatelliteTn1> {
    let mut out = Vec::new();
    for two_alpha in (4..=SATELLITE_MAX_PATTERN).step_by(2) {
        for beta in (1..two_alpha).filter(|b| gcd(two_alpha, *b) == 1) {
            for (p, qq) in torus_pairs(SATELLITE_MAX_COMPANION) {
                for c in [Chirality::Right, Chirality::Left] {
                    let pattern = TwoBridge::new(two_alpha, beta).unwrap();
                    let companion = TorusKnot::with_chirality(p, qq, c).unwrap();
                    out.push(SatelliteTn1::new(pattern, companion).unwrap());
                }
            }
        }
    }
    out
}

fn criterion_10(out: &mut Produced) -> Check {
    let grid = satellite_grid();
    ensure(SatelliteTn1::new(TwoBridge::hopf(), TorusKnot::new(2, 3).unwrap()).is_err(), || {
        "Hopf pattern accepted".into()
    })?;
    let mut by_count = [0usize; 4];
    for s in &grid {
        let k = KnotPresentation::Satellite(s.clone());
        let d = decide(&k).map_err(|e| e.to_string())?;
        ensure(d.verdict == Verdict::NotDetermined && d.evidence.no_tn1_twin, || format!("{k}: {:?}", d.verdict))?;
        let g = d.evidence.jsj.clone().ok_or_else(|| format!("{k}: no JSJ graph"))?;
        ensure(g == cover_jsj_satellite(s).unwrap(), || format!("{k}: graph differs"))?;
        let alpha = s.pattern().alpha() / 2;
        let beta = s.pattern().beta().rem_euclid(alpha);
        let c = s.companion().clone();
        let expected = if alpha % 2 == 1 {
            vec![JsjPiece::TwoBridgeExterior(TwoBridge::new(alpha, beta).unwrap()), JsjPiece::TorusExteriorDoubleCover(c)]
        } else if alpha == 2 {
            vec![JsjPiece::TorusKnotExterior(c.clone()), JsjPiece::TorusKnotExterior(c)]
        } else {
            vec![
                JsjPiece::TwoBridgeExterior(TwoBridge::new(alpha, beta).unwrap()),
                JsjPiece::TorusKnotExterior(c.clone()),
                JsjPiece::TorusKnotExterior(c),
            ]
        };
        let edges = if expected.len() == 3 { vec![(0, 1), (0, 2)] } else { vec![(0, 1)] };
        ensure(g.pieces == expected && g.edges == edges, || format!("{k}: {g:?}"))?;
        by_count[g.pieces.len()] += 1;
        out.knots.push(k);
    }
    Ok(format!(
        "{} satellites NotDetermined; {} with 2 pieces, {} with 3",
        grid.len(),
        by_count[2],
        by_count[3]
    ))
}

fn criterion_9(out: &Produced) -> Check {
    for c in &out.covers {
        ensure(c.satisfies_integrality().unwrap(), || format!("{c:?} fails integrality"))?;
    }
    for k in &out.knots {
        let d = decide(k).map_err(|e| format!("{k}: {e}"))?;
        let m = k.mirror().unwrap();
        let dm = decide(&m).map_err(|e| format!("{m}: {e}"))?;
        ensure(d.verdict == dm.verdict, || format!("{k}: verdict changes under mirror"))?;
        let mirrored_twin = d.twin.as_ref().map(|t| t.mirror().unwrap());
        ensure(mirrored_twin == dm.twin, || format!("{k}: twin is not mirror equivariant"))?;
        ensure(decide(k).unwrap() == d, || format!("{k}: decide is not deterministic"))?;
    }
    let mut rows = out.rows.clone();
    rows.extend(census::torus_rows(&TORUS_MAX, true).map_err(|e| e.to_string())?);
    rows.extend(census::lift_rows(&LIFT_MAX_ALPHA).map_err(|e| e.to_string())?);
    let text = twincover_cli::rows_csv(&rows).map_err(|e| e.to_string())?;
    let back = census::read_csv(text.as_bytes()).map_err(|e| e.to_string())?;
    ensure(back == rows, || "CSV round trip changed rows".into())?;
    let json = serde_json::to_string(&rows).unwrap();
    let back: Vec<CensusRow> = serde_json::from_str(&json).unwrap();
    ensure(back == rows, || "JSON round trip changed rows".into())?;
    for r in &rows {
        for field in [&r.presentation, &r.twin, &r.identified_as, &r.lift] {
            if field.is_empty() {
                continue;
            }
            let k: Knot64 = parse_presentation(field).map_err(|e| format!("{field}: {e}"))?;
            ensure(k.to_string() == *field, || format!("{field} reparses as {k}"))?;
        }
    }
    Ok(format!(
        "{} covers integral, {} knots mirror equivariant, {} census rows round trip",
        out.covers.len(),
        out.knots.len(),
        rows.len()
    ))
}

fn main() {
    let mut produced = Produced::default();
    let mut failures = 0;
    let mut report = |n: u32, name: &str, r: Check| {
        match r {
            Ok(detail) => println!("[PASS] {n:>2} {name}: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("[FAIL] {n:>2} {name}: {detail}");
            }
        }
    };
    report(1, "torus classification", criterion_1(&mut produced));
    report(2, "torus cover values", criterion_2(&mut produced));
    report(3, "d and Bezout independence", criterion_3(&mut produced));
    report(4, "torus twin soundness", criterion_4(&mut produced));
    report(5, "Montesinos completeness", criterion_5(&mut produced));
    report(6, "twin triples", criterion_6(&mut produced));
    report(7, "degenerate identifications", criterion_7(&mut produced));
    report(8, "2-bridge lift suite", criterion_8(&mut produced));
    let sat = criterion_10(&mut produced);
    report(9, "invariant sweeps", criterion_9(&produced));
    report(10, "satellite verdicts", sat);
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
