//! Parametric presentations of the knot families handled by the classifier.

use crate::error::{Error, Result};
use crate::exact_arith::{require_coprime, Int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Right,
    Left,
}

impl Chirality {
    pub fn flip(self) -> Self {
        match self {
            Chirality::Right => Chirality::Left,
            Chirality::Left => Chirality::Right,
        }
    }
}

/// A nontrivial torus knot in normal form: `2 ≤ p < q`, coprime, with the
/// handedness carried separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot<I = i64> {
    p: I,
    q: I,
    chirality: Chirality,
}

/// Result of normalizing arbitrary torus parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Torus<I = i64> {
    Trivial,
    Knot(TorusKnot<I>),
}

/// Normalizes `T(p, q)` for any signed coprime pair.
///
/// The parameters are unordered; the product of their signs is the
/// handedness. `min(|p|, |q|) ≤ 1` is the unknot.
pub fn normalize_torus<I: Int>(p: &I, q: &I) -> Result<Torus<I>> {
    require_coprime(p, q)?;
    let (ap, aq) = (p.abs_c()?, q.abs_c()?);
    let (lo, hi) = if ap <= aq { (ap, aq) } else { (aq, ap) };
    if lo <= I::one() {
        return Ok(Torus::Trivial);
    }
    let chirality = if p.is_negative() == q.is_negative() {
        Chirality::Right
    } else {
        Chirality::Left
    };
    Ok(Torus::Knot(TorusKnot { p: lo, q: hi, chirality }))
}

/// Bridge index `p` of a normalized torus knot.
pub fn bridge_index_torus<I: Int>(k: &Torus<I>) -> Result<I> {
    match k {
        Torus::Trivial => Err(Error::TrivialKnot),
        Torus::Knot(t) => Ok(t.p.clone()),
    }
}

impl<I: Int> TorusKnot<I> {
    /// Normalizing constructor; `TrivialKnot` if the parameters give the unknot.
    pub fn new(p: I, q: I) -> Result<Self> {
        match normalize_torus(&p, &q)? {
            Torus::Trivial => Err(Error::TrivialKnot),
            Torus::Knot(k) => Ok(k),
        }
    }

    pub fn with_chirality(p: I, q: I, chirality: Chirality) -> Result<Self> {
        let k = Self::new(p.abs_c()?, q.abs_c()?)?;
        Ok(TorusKnot { chirality, ..k })
    }

    pub fn p(&self) -> &I {
        &self.p
    }

    pub fn q(&self) -> &I {
        &self.q
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    /// `q` with the handedness sign, as in `T(3, −5)`.
    pub fn signed_q(&self) -> Result<I> {
        match self.chirality {
            Chirality::Right => Ok(self.q.clone()),
            Chirality::Left => self.q.neg_c(),
        }
    }

    pub fn mirror(&self) -> Self {
        TorusKnot {
            chirality: self.chirality.flip(),
            ..self.clone()
        }
    }

    pub fn bridge_index(&self) -> &I {
        &self.p
    }

    /// Same knot type up to mirror image.
    pub fn same_up_to_mirror(&self, other: &Self) -> bool {
        self.p == other.p && self.q == other.q
    }
}

/// 2-bridge knot or link `b(α, β)` normalized to `0 < β < α`; `(1, 0)` is
/// the trivial knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridge<I = i64> {
    alpha: I,
    beta: I,
}

impl<I: Int> TwoBridge<I> {
    pub fn new(alpha: I, beta: I) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::BadInput(format!("2-bridge alpha = {alpha} must be positive")));
        }
        require_coprime(&alpha, &beta)?;
        let beta = beta.rem_euclid_c(&alpha)?;
        Ok(TwoBridge { alpha, beta })
    }

    pub fn trivial() -> Self {
        TwoBridge { alpha: I::one(), beta: I::zero() }
    }

    pub fn hopf() -> Self {
        TwoBridge { alpha: I::from_small(2), beta: I::one() }
    }

    pub fn alpha(&self) -> &I {
        &self.alpha
    }

    pub fn beta(&self) -> &I {
        &self.beta
    }

    pub fn is_trivial(&self) -> bool {
        self.alpha.is_one()
    }

    pub fn is_hopf(&self) -> bool {
        self.alpha == I::from_small(2)
    }

    pub fn components(&self) -> u8 {
        if self.alpha.is_odd() {
            1
        } else {
            2
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components() == 1
    }

    /// Hyperbolic iff `β ≢ ±1 (mod α)`.
    pub fn is_hyperbolic(&self) -> bool {
        if self.alpha <= I::from_small(2) {
            return false;
        }
        let minus_one = self.alpha.clone() - I::one();
        !(self.beta.is_one() || self.beta == minus_one)
    }

    pub fn mirror(&self) -> Self {
        if self.is_trivial() {
            return self.clone();
        }
        TwoBridge {
            alpha: self.alpha.clone(),
            beta: self.alpha.clone() - self.beta.clone(),
        }
    }
}

/// Oriented Schubert equivalence: same `α` and `β′ ≡ β^{±1} (mod α)`.
pub fn two_bridge_equivalent<I: Int>(a: &TwoBridge<I>, b: &TwoBridge<I>) -> Result<bool> {
    if a.alpha != b.alpha {
        return Ok(false);
    }
    if a.alpha.is_one() || a.beta == b.beta {
        return Ok(true);
    }
    Ok(a.beta.mul_c(&b.beta)?.rem_euclid_c(&a.alpha)?.is_one())
}

/// Rational tangle `β/α` of a Montesinos knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tangle<I = i64> {
    pub alpha: I,
    pub beta: I,
}

impl<I: Int> Tangle<I> {
    pub fn new(alpha: I, beta: I) -> Self {
        Tangle { alpha, beta }
    }

    pub fn slope(&self) -> Result<Rational<I>> {
        Rational::new(self.beta.clone(), self.alpha.clone())
    }
}

/// Montesinos knot `(b; (α₁, β₁), …, (αᵣ, βᵣ))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MontesinosKnot<I = i64> {
    pub b: I,
    pub tangles: Vec<Tangle<I>>,
}

impl<I: Int> MontesinosKnot<I> {
    pub fn new(b: I, tangles: Vec<Tangle<I>>) -> Self {
        MontesinosKnot { b, tangles }
    }

    pub fn from_pairs(b: i64, pairs: &[(i64, i64)]) -> Self {
        MontesinosKnot {
            b: I::from_small(b),
            tangles: pairs
                .iter()
                .map(|&(a, be)| Tangle::new(I::from_small(a), I::from_small(be)))
                .collect(),
        }
    }

    /// `e = b − Σ βᵢ/αᵢ`.
    pub fn euler(&self) -> Result<Rational<I>> {
        self.tangles
            .iter()
            .try_fold(Rational::from_int(self.b.clone()), |acc, t| {
                acc.checked_sub(&t.slope()?)
            })
    }

    pub fn is_normalized(&self) -> bool {
        self.tangles
            .iter()
            .all(|t| t.beta.is_positive() && t.beta < t.alpha)
            && self.tangles.windows(2).all(|w| w[0] <= w[1])
    }

    /// Order of the first homology of the double branched cover,
    /// `|e · Π αᵢ|`. Odd exactly when the presentation is a knot.
    pub fn determinant(&self) -> Result<I> {
        let prod = self
            .tangles
            .iter()
            .try_fold(I::one(), |acc, t| acc.mul_c(&t.alpha))?;
        let det = self.euler()?.checked_mul(&Rational::from_int(prod))?;
        det.to_integer()
            .ok_or_else(|| Error::BadInput("non-integral determinant".into()))?
            .abs_c()
    }
}

/// Reduces every `βᵢ` into `(0, αᵢ)`, absorbing the integer shifts into
/// `b` so that the Euler number is unchanged, and sorts the tangles.
pub fn normalize_montesinos<I: Int>(k: &MontesinosKnot<I>) -> Result<MontesinosKnot<I>> {
    let mut b = k.b.clone();
    let mut tangles = Vec::with_capacity(k.tangles.len());
    for t in &k.tangles {
        if t.alpha < I::from_small(2) {
            return Err(Error::BadTangle {
                alpha: t.alpha.to_string(),
                beta: t.beta.to_string(),
            });
        }
        require_coprime(&t.alpha, &t.beta)?;
        let beta = t.beta.rem_euclid_c(&t.alpha)?;
        // β/α drops by an integer n, so b drops by n as well.
        let shift = t.beta.sub_c(&beta)?.div_floor_c(&t.alpha)?;
        b = b.sub_c(&shift)?;
        tangles.push(Tangle::new(t.alpha.clone(), beta));
    }
    tangles.sort();
    Ok(MontesinosKnot { b, tangles })
}

/// Two-component 2-bridge pattern link glued to a torus-knot companion.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SatelliteTn1<I = i64> {
    pattern: TwoBridge<I>,
    companion: TorusKnot<I>,
}

impl<I: Int> SatelliteTn1<I> {
    pub fn new(pattern: TwoBridge<I>, companion: TorusKnot<I>) -> Result<Self> {
        if pattern.is_knot() {
            return Err(Error::InvalidSatellite(format!(
                "pattern b({}, {}) is a knot, not a two-component link",
                pattern.alpha, pattern.beta
            )));
        }
        if pattern.is_hopf() {
            return Err(Error::InvalidSatellite("pattern is the Hopf link".into()));
        }
        Ok(SatelliteTn1 { pattern, companion })
    }

    pub fn pattern(&self) -> &TwoBridge<I> {
        &self.pattern
    }

    pub fn companion(&self) -> &TorusKnot<I> {
        &self.companion
    }

    pub fn mirror(&self) -> Self {
        SatelliteTn1 {
            pattern: self.pattern.mirror(),
            companion: self.companion.mirror(),
        }
    }
}

/// Input to the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotPresentation<I = i64> {
    Trivial,
    Torus(TorusKnot<I>),
    TwoBridge(TwoBridge<I>),
    Montesinos(MontesinosKnot<I>),
    Satellite(SatelliteTn1<I>),
}

impl<I: Int> KnotPresentation<I> {
    pub fn family(&self) -> &'static str {
        match self {
            KnotPresentation::Trivial => "trivial",
            KnotPresentation::Torus(_) => "torus",
            KnotPresentation::TwoBridge(_) => "twobridge",
            KnotPresentation::Montesinos(_) => "montesinos",
            KnotPresentation::Satellite(_) => "satellite",
        }
    }

    /// Canonical form: trivial 2-bridge maps to `Trivial`, Montesinos
    /// presentations are normalized.
    pub fn normalize(&self) -> Result<Self> {
        Ok(match self {
            KnotPresentation::TwoBridge(t) if t.is_trivial() => KnotPresentation::Trivial,
            KnotPresentation::Montesinos(m) => KnotPresentation::Montesinos(normalize_montesinos(m)?),
            other => other.clone(),
        })
    }

    pub fn mirror(&self) -> Result<Self> {
        Ok(match self {
            KnotPresentation::Trivial => KnotPresentation::Trivial,
            KnotPresentation::Torus(t) => KnotPresentation::Torus(t.mirror()),
            KnotPresentation::TwoBridge(t) => KnotPresentation::TwoBridge(t.mirror()),
            KnotPresentation::Montesinos(m) => {
                let negated = MontesinosKnot {
                    b: m.b.neg_c()?,
                    tangles: m
                        .tangles
                        .iter()
                        .map(|t| Ok(Tangle::new(t.alpha.clone(), t.beta.neg_c()?)))
                        .collect::<Result<_>>()?,
                };
                KnotPresentation::Montesinos(normalize_montesinos(&negated)?)
            }
            KnotPresentation::Satellite(s) => KnotPresentation::Satellite(s.mirror()),
        })
    }
}
