//! Double branched covers of torus, Montesinos and satellite knots, and
//! lifts of 2-bridge links.

use crate::error::{Error, Result};
use crate::exact_arith::{constrained_cf, solve_bezout_neg1, CfExpansion, Int, Rational};
use crate::knot_types::{Chirality, MontesinosKnot, SatelliteTn1, TorusKnot, TwoBridge};
use crate::seifert::{normalize_sfs, Fiber, SfsInvariants};

/// Which parity case of `T(p, q)` produced a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorusCoverCase {
    BothOdd,
    PEven,
    QEven,
}

/// Intermediate integers of a torus-knot cover computation.
///
/// `y·p + x·q = −1`; in the odd–odd case `p·q·d = 1 − 2k`, otherwise the
/// even parameter is `2k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoverDerivation<I = i64> {
    pub case: TorusCoverCase,
    pub x: I,
    pub y: I,
    pub k: I,
    pub d: Option<I>,
}

/// Seifert invariants of the double branched cover of `T(p, q)`, with the
/// canonical Bézout solution and `d = 1`.
pub fn cover_of_torus_knot<I: Int>(k: &TorusKnot<I>) -> Result<(SfsInvariants<I>, CoverDerivation<I>)> {
    cover_of_torus_knot_with(k, &I::one(), &I::zero())
}

/// As [`cover_of_torus_knot`], with an explicit odd `d` for the `(2, d)`
/// fiber and the Bézout solution shifted to `(x + s·p, y − s·q)`.
pub fn cover_of_torus_knot_with<I: Int>(
    k: &TorusKnot<I>,
    d: &I,
    bezout_shift: &I,
) -> Result<(SfsInvariants<I>, CoverDerivation<I>)> {
    if !d.is_odd() {
        return Err(Error::BadInput(format!("d = {d} must be odd")));
    }
    let (p, q) = (k.p(), k.q());
    let two = I::from_small(2);
    let base = solve_bezout_neg1(p, q)?;
    let x = base.x.add_c(&bezout_shift.mul_c(p)?)?;
    let y = base.y.sub_c(&bezout_shift.mul_c(q)?)?;
    let pq = p.mul_c(q)?;

    let (fibers, euler, derivation) = if p.is_odd() && q.is_odd() {
        // p·q·d = 1 − 2k
        let kk = I::one().sub_c(&pq.mul_c(d)?)?.div_floor_c(&two)?;
        let fibers = vec![
            Fiber::new(two.clone(), d.clone()),
            Fiber::new(p.clone(), kk.mul_c(&x)?),
            Fiber::new(q.clone(), kk.mul_c(&y)?),
        ];
        let euler = Rational::new(I::one(), two.mul_c(&pq)?)?;
        let der = CoverDerivation { case: TorusCoverCase::BothOdd, x, y, k: kk, d: Some(d.clone()) };
        (fibers, euler, der)
    } else if p.is_even() {
        let kk = p.div_floor_c(&two)?;
        let fibers = vec![
            Fiber::new(kk.clone(), x.clone()),
            Fiber::new(q.clone(), y.clone()),
            Fiber::new(q.clone(), y.clone()),
        ];
        let euler = Rational::new(I::one(), kk.mul_c(q)?)?;
        let der = CoverDerivation { case: TorusCoverCase::PEven, x, y, k: kk, d: None };
        (fibers, euler, der)
    } else {
        let kk = q.div_floor_c(&two)?;
        let fibers = vec![
            Fiber::new(p.clone(), x.clone()),
            Fiber::new(p.clone(), x.clone()),
            Fiber::new(kk.clone(), y.clone()),
        ];
        let euler = Rational::new(I::one(), kk.mul_c(p)?)?;
        let der = CoverDerivation { case: TorusCoverCase::QEven, x, y, k: kk, d: None };
        (fibers, euler, der)
    };

    let mut cover = normalize_sfs(&SfsInvariants::new(fibers, euler))?;
    if cover.exceptional_count() < 3 {
        cover.torus_cover = true;
    }
    if k.chirality() == Chirality::Left {
        cover = cover.orientation_reversal()?;
    }
    Ok((cover, derivation))
}

/// Seifert invariants of the cover of a Montesinos knot with `r ≥ 3`
/// tangles: the tangles as fibers, `e = b − Σ βᵢ/αᵢ`.
pub fn cover_of_montesinos<I: Int>(k: &MontesinosKnot<I>) -> Result<SfsInvariants<I>> {
    if k.tangles.len() < 3 {
        return Err(Error::TooFewTangles(k.tangles.len()));
    }
    let fibers = k
        .tangles
        .iter()
        .map(|t| Fiber::new(t.alpha.clone(), t.beta.clone()))
        .collect();
    normalize_sfs(&SfsInvariants::new(fibers, k.euler()?))
}

/// Lift of one component of a two-component 2-bridge link to the double
/// cover branched over the other.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftResult<I = i64> {
    pub lifted: TwoBridge<I>,
    pub components: u8,
    /// `(a₁ + a₃ + ⋯ + aₙ) mod 2` from the constrained expansion of `β/2α`.
    pub linking_parity: u8,
    pub hyperbolic: bool,
    pub expansion: CfExpansion<I>,
}

/// Lifts `b(2α, β)` to `b(α, β mod α)`.
pub fn lift_two_bridge<I: Int>(l: &TwoBridge<I>) -> Result<LiftResult<I>> {
    let two = I::from_small(2);
    let (two_alpha, beta) = (l.alpha(), l.beta());
    if !two_alpha.is_even() || *two_alpha < I::from_small(4) {
        return Err(Error::BadInput(format!(
            "lift needs a two-component link with 2α ≥ 4, got b({two_alpha}, {beta})"
        )));
    }
    let alpha = two_alpha.div_floor_c(&two)?;
    let expansion = constrained_cf(&Rational::new(beta.clone(), two_alpha.clone())?)?;
    let linking = expansion.odd_position_sum()?.rem_euclid_c(&two)?;
    let lifted = TwoBridge::new(alpha, beta.clone())?;
    Ok(LiftResult {
        components: lifted.components(),
        linking_parity: if linking.is_zero() { 0 } else { 1 },
        hyperbolic: lifted.is_hyperbolic(),
        lifted,
        expansion,
    })
}

/// Geometric piece of the JSJ decomposition of a satellite cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JsjPiece<I = i64> {
    TwoBridgeExterior(TwoBridge<I>),
    /// Unbranched double cover of the companion's exterior.
    TorusExteriorDoubleCover(TorusKnot<I>),
    TorusKnotExterior(TorusKnot<I>),
}

impl<I: Int> JsjPiece<I> {
    pub fn kind(&self) -> &'static str {
        match self {
            JsjPiece::TwoBridgeExterior(_) => "two_bridge_exterior",
            JsjPiece::TorusExteriorDoubleCover(_) => "torus_exterior_double_cover",
            JsjPiece::TorusKnotExterior(_) => "torus_knot_exterior",
        }
    }
}

/// Pieces joined by gluing tori; edges are unordered index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JsjGraph<I = i64> {
    pub pieces: Vec<JsjPiece<I>>,
    pub edges: Vec<(usize, usize)>,
}

/// JSJ decomposition of the double branched cover of a satellite knot.
pub fn cover_jsj_satellite<I: Int>(k: &SatelliteTn1<I>) -> Result<JsjGraph<I>> {
    let companion = k.companion().clone();
    let lift = lift_two_bridge(k.pattern())
        .map_err(|e| Error::InvalidSatellite(format!("pattern does not lift: {e}")))?;
    let graph = if lift.components == 1 {
        JsjGraph {
            pieces: vec![
                JsjPiece::TwoBridgeExterior(lift.lifted),
                JsjPiece::TorusExteriorDoubleCover(companion),
            ],
            edges: vec![(0, 1)],
        }
    } else if lift.lifted.is_hopf() {
        // The Hopf exterior is T²×I: the two companion copies meet directly.
        JsjGraph {
            pieces: vec![
                JsjPiece::TorusKnotExterior(companion.clone()),
                JsjPiece::TorusKnotExterior(companion),
            ],
            edges: vec![(0, 1)],
        }
    } else {
        JsjGraph {
            pieces: vec![
                JsjPiece::TwoBridgeExterior(lift.lifted),
                JsjPiece::TorusKnotExterior(companion.clone()),
                JsjPiece::TorusKnotExterior(companion),
            ],
            edges: vec![(0, 1), (0, 2)],
        }
    };
    Ok(graph)
}
