//! Determined / not-determined verdicts, explicit 2-twins and the
//! exhaustive cover-matching oracle used to cross-check them.

use std::collections::HashMap;
use std::fmt;

use crate::branched_covers::{cover_jsj_satellite, cover_of_montesinos, cover_of_torus_knot, JsjGraph};
use crate::error::{Error, Result};
use crate::exact_arith::{gcd, Int, Rational};
use crate::knot_types::{
    normalize_montesinos, Chirality, KnotPresentation, MontesinosKnot, SatelliteTn1, Tangle,
    TorusKnot,
};
use crate::seifert::{sfs_equivalent, Fiber, Orientation, SfsInvariants};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Determined,
    NotDetermined,
    OutOfScope,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Determined => "determined",
            Verdict::NotDetermined => "not_determined",
            Verdict::OutOfScope => "out_of_scope",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TwinClass {
    TorusKnot,
    MontesinosKnot,
    ConwayReducibleHyperbolic,
}

impl TwinClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TwinClass::TorusKnot => "torus",
            TwinClass::MontesinosKnot => "montesinos",
            TwinClass::ConwayReducibleHyperbolic => "conway_reducible_hyperbolic",
        }
    }
}

/// The rule that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConditionTag {
    Trivial,
    TwoBridge,
    TorusExceptional,
    PGreaterThan3,
    QGreaterThan5,
    Cond2a1,
    Cond2a2,
    Cond2b1,
    NoTwin,
    NotTn1,
    Satellite,
    BridgeAtLeast5,
    OneOneBridgeAtLeast4,
    Genus2Cover,
}

impl ConditionTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ConditionTag::Trivial => "trivial",
            ConditionTag::TwoBridge => "2bridge",
            ConditionTag::TorusExceptional => "torus-exceptional",
            ConditionTag::PGreaterThan3 => "p>3",
            ConditionTag::QGreaterThan5 => "q>5",
            ConditionTag::Cond2a1 => "2a-1",
            ConditionTag::Cond2a2 => "2a-2",
            ConditionTag::Cond2b1 => "2b-1",
            ConditionTag::NoTwin => "no-twin",
            ConditionTag::NotTn1 => "not-tn1",
            ConditionTag::Satellite => "satellite",
            ConditionTag::BridgeAtLeast5 => "bridge>=5",
            ConditionTag::OneOneBridgeAtLeast4 => "(1,1)-bridge>=4",
            ConditionTag::Genus2Cover => "genus2-cover",
        }
    }
}

impl fmt::Display for ConditionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Evidence<I = i64> {
    pub tag: ConditionTag,
    pub cover: Option<SfsInvariants<I>>,
    pub jsj: Option<JsjGraph<I>>,
    /// No tunnel number one knot shares the cover (satellite case).
    pub no_tn1_twin: bool,
}

impl<I: Int> Evidence<I> {
    fn tag(tag: ConditionTag) -> Self {
        Evidence { tag, cover: None, jsj: None, no_tn1_twin: false }
    }

    fn with_cover(tag: ConditionTag, cover: SfsInvariants<I>) -> Self {
        Evidence { cover: Some(cover), ..Self::tag(tag) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Determination<I = i64> {
    pub verdict: Verdict,
    pub twin: Option<KnotPresentation<I>>,
    pub twin_class: Option<TwinClass>,
    /// Set when the presentation is a disguised form of a simpler knot.
    pub identified_as: Option<KnotPresentation<I>>,
    pub evidence: Evidence<I>,
}

impl<I: Int> Determination<I> {
    fn determined(evidence: Evidence<I>) -> Self {
        Determination {
            verdict: Verdict::Determined,
            twin: None,
            twin_class: None,
            identified_as: None,
            evidence,
        }
    }

    fn out_of_scope(evidence: Evidence<I>) -> Self {
        Determination { verdict: Verdict::OutOfScope, ..Self::determined(evidence) }
    }

    fn with_twin(twin: KnotPresentation<I>, class: TwinClass, evidence: Evidence<I>) -> Self {
        Determination {
            verdict: Verdict::NotDetermined,
            twin: Some(twin),
            twin_class: Some(class),
            identified_as: None,
            evidence,
        }
    }

    /// The emitted torus twin, if any.
    pub fn torus_twin(&self) -> Option<&TorusKnot<I>> {
        match &self.twin {
            Some(KnotPresentation::Torus(t)) => Some(t),
            _ => None,
        }
    }
}

/// Klimenko–Sakuma type of a Montesinos knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Tn1Case {
    TwoBridge,
    TypeA,
    TypeB,
    None,
}

impl Tn1Case {
    pub fn as_str(self) -> &'static str {
        match self {
            Tn1Case::TwoBridge => "2bridge",
            Tn1Case::TypeA => "2a",
            Tn1Case::TypeB => "2b",
            Tn1Case::None => "none",
        }
    }
}

fn small<I: Int>(n: i64) -> I {
    I::from_small(n)
}

/// `value ≡ target (mod m)`.
fn congruent<I: Int>(value: &I, target: i64, m: &I) -> Result<bool> {
    Ok(value.sub_c(&small(target))?.rem_euclid_c(m)?.is_zero())
}

fn unit_fraction<I: Int>(den: I) -> Result<Rational<I>> {
    Rational::new(I::one(), den)
}

fn montesinos_mirror<I: Int>(k: &MontesinosKnot<I>) -> Result<MontesinosKnot<I>> {
    match KnotPresentation::Montesinos(k.clone()).mirror()? {
        KnotPresentation::Montesinos(m) => Ok(m),
        _ => unreachable!("mirror keeps the family"),
    }
}

fn tn1_case_of<I: Int>(k: &MontesinosKnot<I>) -> Result<Tn1Case> {
    let t = &k.tangles;
    if t.len() <= 2 {
        return Ok(Tn1Case::TwoBridge);
    }
    if t.len() > 3 {
        return Ok(Tn1Case::None);
    }
    let (a1, a2, a3) = (&t[0].alpha, &t[1].alpha, &t[2].alpha);
    if *a1 == small(2) && a2.mul_c(a3)?.is_odd() {
        return Ok(Tn1Case::TypeA);
    }
    let three = small::<I>(3);
    if *a1 == three
        && *a2 == three
        && t[0].beta == t[1].beta
        && *a3 >= small(4)
        && !a3.rem_euclid_c(&three)?.is_zero()
    {
        let target = unit_fraction(three.mul_c(a3)?)?;
        let e = k.euler()?;
        if e == target || e == target.checked_neg()? {
            return Ok(Tn1Case::TypeB);
        }
    }
    Ok(Tn1Case::None)
}

/// Tunnel-number-one test for a Montesinos presentation, on the
/// presentation and on its mirror.
pub fn is_tn1_montesinos<I: Int>(k: &MontesinosKnot<I>) -> Result<(bool, Tn1Case)> {
    let k = normalize_montesinos(k)?;
    for candidate in [k.clone(), montesinos_mirror(&k)?] {
        let case = tn1_case_of(&candidate)?;
        if case != Tn1Case::None {
            return Ok((true, case));
        }
    }
    Ok((false, Tn1Case::None))
}

/// Torus knots are determined exactly when `p = 2` or `(p, q)` is `(3, 4)`
/// or `(3, 5)`; otherwise the Montesinos knot sharing the cover is a twin.
pub fn classify_torus<I: Int>(k: &TorusKnot<I>) -> Result<Determination<I>> {
    let (p, q) = (k.p(), k.q());
    let (cover, _) = cover_of_torus_knot(k)?;
    if *p == small(2) {
        return Ok(Determination::determined(Evidence::with_cover(ConditionTag::TwoBridge, cover)));
    }
    if *p == small(3) && (*q == small(4) || *q == small(5)) {
        return Ok(Determination::determined(Evidence::with_cover(
            ConditionTag::TorusExceptional,
            cover,
        )));
    }
    let b = cover
        .integer_part()?
        .ok_or_else(|| Error::BadInput("torus cover failed integrality".into()))?;
    let twin = MontesinosKnot::new(
        b,
        cover
            .fibers
            .iter()
            .map(|f| Tangle::new(f.alpha.clone(), f.beta.clone()))
            .collect(),
    );
    let tag = if *p > small(3) {
        ConditionTag::PGreaterThan3
    } else {
        ConditionTag::QGreaterThan5
    };
    Ok(Determination::with_twin(
        KnotPresentation::Montesinos(twin),
        TwinClass::MontesinosKnot,
        Evidence::with_cover(tag, cover),
    ))
}

/// Checks the twin conditions on one sign choice of the invariants and
/// returns the right-handed torus twin they produce.
fn twin_condition<I: Int>(
    k: &MontesinosKnot<I>,
    case: Tn1Case,
) -> Result<Option<(TorusKnot<I>, ConditionTag)>> {
    let t = &k.tangles;
    let e = k.euler()?;
    match case {
        Tn1Case::TypeA => {
            let (a2, b2) = (&t[1].alpha, &t[1].beta);
            let (a3, b3) = (&t[2].alpha, &t[2].beta);
            let two = small::<I>(2);
            // (2a-1)
            if gcd(a2, a3)?.is_one()
                && !(*a2 == small(3) && *a3 == small(5))
                && congruent(&two.mul_c(a3)?.mul_c(b2)?, -1, a2)?
                && congruent(&two.mul_c(a2)?.mul_c(b3)?, -1, a3)?
                && e == unit_fraction(two.mul_c(a2)?.mul_c(a3)?)?
            {
                return Ok(Some((TorusKnot::new(a2.clone(), a3.clone())?, ConditionTag::Cond2a1)));
            }
            // (2a-2)
            if a2 == a3
                && *a2 > small(4)
                && b2 == b3
                && congruent(&small::<I>(4).mul_c(b2)?, -1, a2)?
                && e == unit_fraction(two.mul_c(a2)?)?
            {
                return Ok(Some((TorusKnot::new(small(4), a2.clone())?, ConditionTag::Cond2a2)));
            }
            Ok(None)
        }
        Tn1Case::TypeB => {
            let b1 = &t[0].beta;
            let (a3, b3) = (&t[2].alpha, &t[2].beta);
            let three = small::<I>(3);
            // (2b-1)
            if congruent(&a3.mul_c(b1)?, 1, &three)?
                && congruent(&three.mul_c(b3)?, -1, a3)?
                && e == unit_fraction(three.mul_c(a3)?)?
            {
                let q = small::<I>(2).mul_c(a3)?;
                return Ok(Some((TorusKnot::new(three, q)?, ConditionTag::Cond2b1)));
            }
            Ok(None)
        }
        Tn1Case::TwoBridge | Tn1Case::None => Ok(None),
    }
}

/// Covers of `T(3, 5)` and `T(3, 4)` in both chiralities, whose Montesinos
/// presentations are the torus knots themselves.
fn exceptional_torus_covers<I: Int>() -> Result<Vec<(TorusKnot<I>, SfsInvariants<I>)>> {
    let mut out = Vec::new();
    for (p, q) in [(3, 5), (3, 4)] {
        for chirality in [Chirality::Right, Chirality::Left] {
            let t = TorusKnot::with_chirality(small(p), small(q), chirality)?;
            let (cover, _) = cover_of_torus_knot(&t)?;
            out.push((t, cover));
        }
    }
    Ok(out)
}

/// Twin classification of a tunnel number one Montesinos knot.
pub fn classify_montesinos<I: Int>(k: &MontesinosKnot<I>) -> Result<Determination<I>> {
    let k = normalize_montesinos(k)?;
    let (tn1, case) = is_tn1_montesinos(&k)?;
    if !tn1 {
        return Err(Error::NotTunnelNumberOne);
    }
    if case == Tn1Case::TwoBridge {
        if k.determinant()?.is_even() {
            return Err(Error::BadInput("presentation is a 2-bridge link, not a knot".into()));
        }
        return Ok(Determination::determined(Evidence::tag(ConditionTag::TwoBridge)));
    }

    let cover = cover_of_montesinos(&k)?;
    for (torus, torus_cover) in exceptional_torus_covers()? {
        if sfs_equivalent(&cover, &torus_cover, Orientation::Preserving)? {
            let mut d = Determination::determined(Evidence::with_cover(
                ConditionTag::TorusExceptional,
                cover,
            ));
            d.identified_as = Some(KnotPresentation::Torus(torus));
            return Ok(d);
        }
    }

    let mirror = montesinos_mirror(&k)?;
    for (candidate, flipped) in [(&k, false), (&mirror, true)] {
        if let Some((torus, tag)) = twin_condition(candidate, case)? {
            let twin = if flipped { torus.mirror() } else { torus };
            return Ok(Determination::with_twin(
                KnotPresentation::Torus(twin),
                TwinClass::TorusKnot,
                Evidence::with_cover(tag, cover),
            ));
        }
    }
    Ok(Determination::determined(Evidence::with_cover(ConditionTag::NoTwin, cover)))
}

/// Satellite tunnel number one knots always have a (Conway reducible,
/// hyperbolic) twin, and never a tunnel number one twin.
pub fn classify_satellite<I: Int>(k: &SatelliteTn1<I>) -> Result<Determination<I>> {
    let jsj = cover_jsj_satellite(k)?;
    Ok(Determination {
        verdict: Verdict::NotDetermined,
        twin: None,
        twin_class: Some(TwinClass::ConwayReducibleHyperbolic),
        identified_as: None,
        evidence: Evidence {
            tag: ConditionTag::Satellite,
            cover: None,
            jsj: Some(jsj),
            no_tn1_twin: true,
        },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BridgeVerdict {
    NotDetermined(ConditionTag),
    Inconclusive,
}

/// Verdict from bridge-number data alone.
pub fn classify_by_bridge_data(bridge: u64, is_one_one: bool, cover_genus_two: Option<bool>) -> Result<BridgeVerdict> {
    if bridge < 1 {
        return Err(Error::BadInput("bridge number must be at least 1".into()));
    }
    if bridge >= 5 {
        return Ok(BridgeVerdict::NotDetermined(ConditionTag::BridgeAtLeast5));
    }
    if is_one_one && bridge >= 4 {
        return Ok(BridgeVerdict::NotDetermined(ConditionTag::OneOneBridgeAtLeast4));
    }
    if cover_genus_two == Some(true) && bridge != 3 {
        return Ok(BridgeVerdict::NotDetermined(ConditionTag::Genus2Cover));
    }
    Ok(BridgeVerdict::Inconclusive)
}

/// Dispatches a presentation to the family rules.
pub fn decide<I: Int>(k: &KnotPresentation<I>) -> Result<Determination<I>> {
    match k.normalize()? {
        KnotPresentation::Trivial => Ok(Determination::determined(Evidence::tag(ConditionTag::Trivial))),
        KnotPresentation::TwoBridge(t) => {
            if t.is_knot() {
                Ok(Determination::determined(Evidence::tag(ConditionTag::TwoBridge)))
            } else {
                Ok(Determination::out_of_scope(Evidence::tag(ConditionTag::TwoBridge)))
            }
        }
        KnotPresentation::Torus(t) => classify_torus(&t),
        KnotPresentation::Montesinos(m) => match is_tn1_montesinos(&m)? {
            (true, Tn1Case::TwoBridge) if m.determinant()?.is_even() => {
                Ok(Determination::out_of_scope(Evidence::tag(ConditionTag::TwoBridge)))
            }
            (true, _) => classify_montesinos(&m),
            (false, _) => {
                let mut ev = Evidence::tag(ConditionTag::NotTn1);
                ev.cover = cover_of_montesinos(&m).ok();
                Ok(Determination::out_of_scope(ev))
            }
        },
        KnotPresentation::Satellite(s) => classify_satellite(&s),
    }
}

/// Seifert cover of a torus knot or a Montesinos knot with ≥ 3 tangles.
pub fn seifert_cover<I: Int>(k: &KnotPresentation<I>) -> Result<SfsInvariants<I>> {
    match k.normalize()? {
        KnotPresentation::Torus(t) => Ok(cover_of_torus_knot(&t)?.0),
        KnotPresentation::Montesinos(m) if m.tangles.len() >= 3 => cover_of_montesinos(&m),
        other => Err(Error::NoComputableCover(other.to_string())),
    }
}

/// True iff the two knots have homeomorphic double branched covers.
pub fn verify_twin<I: Int>(a: &KnotPresentation<I>, b: &KnotPresentation<I>) -> Result<bool> {
    sfs_equivalent(&seifert_cover(a)?, &seifert_cover(b)?, Orientation::Any)
}

/// Exhaustive scan of `T(p, q)`, `2 ≤ p < q ≤ bound`, right- then
/// left-handed, for a torus knot whose cover matches `k`'s with orientation.
pub fn brute_force_twin_search<I: Int>(k: &MontesinosKnot<I>, bound: &I) -> Result<Option<TorusKnot<I>>> {
    let target = cover_of_montesinos(&normalize_montesinos(k)?)?;
    let mut p = small::<I>(2);
    while p < *bound {
        let mut q = p.add_c(&I::one())?;
        while q <= *bound {
            if gcd(&p, &q)?.is_one() {
                for chirality in [Chirality::Right, Chirality::Left] {
                    let t = TorusKnot::with_chirality(p.clone(), q.clone(), chirality)?;
                    let (cover, _) = cover_of_torus_knot(&t)?;
                    if sfs_equivalent(&target, &cover, Orientation::Preserving)? {
                        return Ok(Some(t));
                    }
                }
            }
            q = q.add_c(&I::one())?;
        }
        p = p.add_c(&I::one())?;
    }
    Ok(None)
}

/// Verdict implied by a brute-force hit: a match with `T(3,4)` or `T(3,5)`
/// means the presentation is that torus knot.
pub fn oracle_verdict<I: Int>(found: Option<&TorusKnot<I>>) -> Verdict {
    match found {
        None => Verdict::Determined,
        Some(t) if *t.p() == small(3) && (*t.q() == small(4) || *t.q() == small(5)) => Verdict::Determined,
        Some(_) => Verdict::NotDetermined,
    }
}

type CoverKey<I> = (Vec<Fiber<I>>, Rational<I>);

/// Precomputed results of [`brute_force_twin_search`] for every bound up
/// to `max_bound`: torus covers in scan order, keyed by normal form.
pub struct TorusCoverIndex<I: Int = i64> {
    max_bound: I,
    by_cover: HashMap<CoverKey<I>, Vec<TorusKnot<I>>>,
}

impl<I: Int> TorusCoverIndex<I> {
    pub fn build(max_bound: I) -> Result<Self> {
        let mut by_cover: HashMap<_, Vec<TorusKnot<I>>> = HashMap::new();
        let mut p = small::<I>(2);
        while p < max_bound {
            let mut q = p.add_c(&I::one())?;
            while q <= max_bound {
                if gcd(&p, &q)?.is_one() {
                    for chirality in [Chirality::Right, Chirality::Left] {
                        let t = TorusKnot::with_chirality(p.clone(), q.clone(), chirality)?;
                        let (cover, _) = cover_of_torus_knot(&t)?;
                        by_cover.entry((cover.fibers, cover.euler)).or_default().push(t);
                    }
                }
                q = q.add_c(&I::one())?;
            }
            p = p.add_c(&I::one())?;
        }
        Ok(TorusCoverIndex { max_bound, by_cover })
    }

    pub fn len(&self) -> usize {
        self.by_cover.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.by_cover.is_empty()
    }

    /// Same answer as `brute_force_twin_search(k, bound)`.
    pub fn search(&self, k: &MontesinosKnot<I>, bound: &I) -> Result<Option<TorusKnot<I>>> {
        if *bound > self.max_bound {
            return Err(Error::BadInput(format!(
                "bound {bound} exceeds the index bound {}",
                self.max_bound
            )));
        }
        let target = cover_of_montesinos(&normalize_montesinos(k)?)?;
        Ok(self
            .by_cover
            .get(&(target.fibers, target.euler))
            .and_then(|hits| hits.iter().find(|t| t.q() <= bound).cloned()))
    }
}
