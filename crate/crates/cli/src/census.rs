//! Enumeration grids and census rows.

use serde::{Deserialize, Serialize};
use twincover::{
    classify_montesinos, classify_torus, decide, eval_cf, is_tn1_montesinos,
    lift_two_bridge, oracle_verdict, verify_twin, CfForm, Determination, Int, KnotPresentation,
    MontesinosKnot, Rational, Result, SfsInvariants, Tangle, TorusCoverIndex, TorusKnot, TwoBridge,
    Verdict,
};

/// One line of a census. Columns that do not apply to a family are empty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub presentation: String,
    pub family: String,
    pub verdict: String,
    pub twin: String,
    pub identified_as: String,
    pub condition: String,
    /// `α/β` pairs joined by commas, e.g. `2/1,3/2,5/4`.
    pub fibers: String,
    pub euler: String,
    pub lift: String,
    /// Constrained continued fraction coefficients, space separated.
    pub cf: String,
    pub check: String,
}

pub fn fibers_text<I: Int>(cover: &SfsInvariants<I>) -> String {
    cover
        .fibers
        .iter()
        .map(|f| format!("{}/{}", f.alpha, f.beta))
        .collect::<Vec<_>>()
        .join(",")
}

fn opt_text<T: ToString>(x: Option<T>) -> String {
    x.map(|x| x.to_string()).unwrap_or_default()
}

impl CensusRow {
    pub fn from_determination<I: Int>(k: &KnotPresentation<I>, d: &Determination<I>) -> Self {
        let cover = d.evidence.cover.as_ref();
        CensusRow {
            presentation: k.to_string(),
            family: k.family().to_string(),
            verdict: d.verdict.as_str().to_string(),
            twin: opt_text(d.twin.as_ref()),
            identified_as: opt_text(d.identified_as.as_ref()),
            condition: d.evidence.tag.as_str().to_string(),
            fibers: opt_text(cover.map(fibers_text)),
            euler: opt_text(cover.map(|c| c.euler.to_string())),
            lift: String::new(),
            cf: String::new(),
            check: String::new(),
        }
    }
}

fn coprime<I: Int>(a: &I, b: &I) -> bool {
    a.gcd(b).is_one()
}

fn range<I: Int>(lo: i64, hi: &I) -> impl Iterator<Item = I> + '_ {
    let mut next = I::from_small(lo);
    std::iter::from_fn(move || {
        if next > *hi {
            return None;
        }
        let out = next.clone();
        next = next.clone() + I::one();
        Some(out)
    })
}

/// Right-handed `T(p, q)` for coprime `2 ≤ p < q ≤ max`, ordered by `(p, q)`.
pub fn torus_grid<I: Int>(max: &I) -> Result<Vec<TorusKnot<I>>> {
    let mut out = Vec::new();
    for p in range(2, max) {
        for q in range(3, max) {
            if p < q && coprime(&p, &q) {
                out.push(TorusKnot::new(p.clone(), q)?);
            }
        }
    }
    Ok(out)
}

fn tangles_up_to<I: Int>(max_alpha: &I) -> Vec<Tangle<I>> {
    let mut out = Vec::new();
    for a in range(2, max_alpha) {
        let top = a.clone() - I::one();
        for b in range(1, &top) {
            if coprime(&a, &b) {
                out.push(Tangle::new(a.clone(), b));
            }
        }
    }
    out
}

/// Every normalized three-tangle Montesinos presentation with `αᵢ ≤ max_alpha`
/// and `|b| ≤ max_b`, ordered by tangles then `b`.
pub fn montesinos_grid<I: Int>(max_alpha: &I, max_b: &I) -> Vec<MontesinosKnot<I>> {
    let tangles = tangles_up_to(max_alpha);
    let bs: Vec<I> = range(0, &(max_b.clone() + max_b.clone()))
        .map(|i| i - max_b.clone())
        .collect();
    let mut out = Vec::new();
    for (i, t1) in tangles.iter().enumerate() {
        for (j, t2) in tangles.iter().enumerate().skip(i) {
            for t3 in &tangles[j..] {
                for b in &bs {
                    out.push(MontesinosKnot::new(b.clone(), vec![t1.clone(), t2.clone(), t3.clone()]));
                }
            }
        }
    }
    out
}

/// Tunnel number one members of [`montesinos_grid`].
///
/// Only the shapes `(2, odd, odd)` and `(3, 3, α₃)` can pass the test, and a
/// mirror keeps the `αᵢ`, so other shapes are skipped before testing.
pub fn tn1_montesinos_grid<I: Int>(max_alpha: &I, max_b: &I) -> Result<Vec<MontesinosKnot<I>>> {
    let two = I::from_small(2);
    let three = I::from_small(3);
    let tangles = tangles_up_to(max_alpha);
    let bs: Vec<I> = range(0, &(max_b.clone() + max_b.clone()))
        .map(|i| i - max_b.clone())
        .collect();
    let mut out = Vec::new();
    for (i, t1) in tangles.iter().enumerate() {
        if t1.alpha != two && t1.alpha != three {
            continue;
        }
        for (j, t2) in tangles.iter().enumerate().skip(i) {
            for t3 in &tangles[j..] {
                let shape_a = t1.alpha == two && t2.alpha.is_odd() && t3.alpha.is_odd();
                let shape_b = t1.alpha == three && t2.alpha == three;
                if !shape_a && !shape_b {
                    continue;
                }
                for b in &bs {
                    let k = MontesinosKnot::new(b.clone(), vec![t1.clone(), t2.clone(), t3.clone()]);
                    if is_tn1_montesinos(&k)?.0 {
                        out.push(k);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `b(2α, β)` for `2 ≤ α ≤ max_alpha`, odd `0 < β < 2α` coprime to `2α`.
pub fn lift_grid<I: Int>(max_alpha: &I) -> Result<Vec<TwoBridge<I>>> {
    let mut out = Vec::new();
    for a in range(2, max_alpha) {
        let two_a = a.clone() + a;
        let top = two_a.clone() - I::one();
        for b in range(1, &top) {
            if b.is_odd() && coprime(&two_a, &b) {
                out.push(TwoBridge::new(two_a.clone(), b)?);
            }
        }
    }
    Ok(out)
}

fn check_text(ok: bool) -> String {
    if ok { "ok" } else { "mismatch" }.to_string()
}

/// Census of the torus grid. With `verify`, each emitted twin is checked
/// to share the knot's cover.
pub fn torus_rows<I: Int>(max: &I, verify: bool) -> Result<Vec<CensusRow>> {
    torus_grid(max)?
        .into_iter()
        .map(|t| {
            let d = classify_torus(&t)?;
            let k = KnotPresentation::Torus(t);
            let mut row = CensusRow::from_determination(&k, &d);
            if verify {
                row.check = check_text(match &d.twin {
                    Some(twin) => verify_twin(&k, twin)?,
                    None => true,
                });
            }
            Ok(row)
        })
        .collect()
}

/// Agreement between the classifier and an exhaustive torus-knot scan up
/// to `4·α₂·α₃`.
pub fn oracle_agrees<I: Int>(
    k: &MontesinosKnot<I>,
    d: &Determination<I>,
    index: &TorusCoverIndex<I>,
) -> Result<bool> {
    let t = &k.tangles;
    let bound = I::from_small(4).mul_c(&t[1].alpha)?.mul_c(&t[2].alpha)?;
    let found = index.search(k, &bound)?;
    if oracle_verdict(found.as_ref()) != d.verdict {
        return Ok(false);
    }
    Ok(match d.verdict {
        Verdict::NotDetermined => d.torus_twin() == found.as_ref(),
        _ => true,
    })
}

/// Census of tunnel number one Montesinos knots, optionally checked
/// against the exhaustive scan.
pub fn montesinos_rows<I: Int>(max_alpha: &I, max_b: &I, verify: bool) -> Result<Vec<CensusRow>> {
    let index = if verify {
        Some(TorusCoverIndex::build(I::from_small(4).mul_c(max_alpha)?.mul_c(max_alpha)?)?)
    } else {
        None
    };
    tn1_montesinos_grid(max_alpha, max_b)?
        .into_iter()
        .map(|m| {
            let d = classify_montesinos(&m)?;
            let mut row = CensusRow::from_determination(&KnotPresentation::Montesinos(m.clone()), &d);
            if let Some(index) = &index {
                row.check = check_text(oracle_agrees(&m, &d, index)?);
            }
            Ok(row)
        })
        .collect()
}

/// Census of 2-bridge link lifts; `check` records whether the constrained
/// expansion evaluates back to `β/2α` and its other reading to `β/α`.
pub fn lift_rows<I: Int>(max_alpha: &I) -> Result<Vec<CensusRow>> {
    lift_grid(max_alpha)?
        .into_iter()
        .map(|l| {
            let k = KnotPresentation::TwoBridge(l.clone());
            let d = decide(&k)?;
            let lift = lift_two_bridge(&l)?;
            let half = l.alpha().div_floor_c(&I::from_small(2))?;
            let exact = eval_cf(&lift.expansion)? == Rational::new(l.beta().clone(), l.alpha().clone())?
                && eval_cf(&lift.expansion.with_form(CfForm::EvenDoubled)?)?
                    == Rational::new(l.beta().clone(), half)?;
            let mut row = CensusRow::from_determination(&k, &d);
            row.lift = lift.lifted.to_string();
            row.cf = lift
                .expansion
                .coefficients()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            row.check = check_text(exact);
            Ok(row)
        })
        .collect()
}

pub fn write_csv<W: std::io::Write>(rows: &[CensusRow], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if rows.is_empty() {
        w.write_record([
            "presentation", "family", "verdict", "twin", "identified_as", "condition", "fibers", "euler", "lift", "cf",
            "check",
        ])?;
    }
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> csv::Result<Vec<CensusRow>> {
    csv::Reader::from_reader(input).deserialize().collect()
}
