//! Seifert fibered spaces over S², the fingerprint compared between
//! double branched covers.

use crate::error::{Error, Result};
use crate::exact_arith::{require_coprime, Int, Rational};

/// Exceptional fiber of type `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fiber<I = i64> {
    pub alpha: I,
    pub beta: I,
}

impl<I: Int> Fiber<I> {
    pub fn new(alpha: I, beta: I) -> Self {
        Fiber { alpha, beta }
    }
}

/// Seifert invariants `{(α₁, β₁), …; e}` over S².
///
/// The Euler number is stored on its own, so reducing a `βᵢ` modulo `αᵢ`
/// never touches it; the integer `b = e + Σ βᵢ/αᵢ` is derived.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SfsInvariants<I = i64> {
    pub fibers: Vec<Fiber<I>>,
    pub euler: Rational<I>,
    /// Set on torus-knot covers with fewer than three exceptional fibers,
    /// whose fibration is still pinned down by the knot.
    pub torus_cover: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Homeomorphic, possibly reversing orientation.
    Any,
    /// Orientation-preserving homeomorphism only.
    Preserving,
}

impl<I: Int> SfsInvariants<I> {
    pub fn new(fibers: Vec<Fiber<I>>, euler: Rational<I>) -> Self {
        SfsInvariants { fibers, euler, torus_cover: false }
    }

    pub fn from_pairs(pairs: &[(i64, i64)], euler: Rational<I>) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(a, b)| Fiber::new(I::from_small(a), I::from_small(b)))
                .collect(),
            euler,
        )
    }

    pub fn exceptional_count(&self) -> usize {
        self.fibers.len()
    }

    /// `e + Σ βᵢ/αᵢ` when it is an integer.
    pub fn integer_part(&self) -> Result<Option<I>> {
        let total = self.fibers.iter().try_fold(self.euler.clone(), |acc, f| {
            acc.checked_add(&Rational::new(f.beta.clone(), f.alpha.clone())?)
        })?;
        Ok(total.to_integer())
    }

    pub fn satisfies_integrality(&self) -> Result<bool> {
        Ok(self.integer_part()?.is_some())
    }

    pub fn is_normalized(&self) -> bool {
        self.fibers
            .iter()
            .all(|f| f.alpha >= I::from_small(2) && f.beta.is_positive() && f.beta < f.alpha)
            && self.fibers.windows(2).all(|w| w[0] <= w[1])
    }

    /// The same space with the opposite orientation, normalized.
    pub fn orientation_reversal(&self) -> Result<Self> {
        let fibers = self
            .fibers
            .iter()
            .map(|f| Ok(Fiber::new(f.alpha.clone(), f.beta.neg_c()?)))
            .collect::<Result<_>>()?;
        normalize_sfs(&SfsInvariants {
            fibers,
            euler: self.euler.checked_neg()?,
            torus_cover: self.torus_cover,
        })
    }

    fn has_unique_fibration(&self) -> bool {
        self.fibers.len() >= 3 || self.torus_cover
    }
}

/// Reduces each `βᵢ` into `(0, αᵢ)`, drops `α = 1` fibers and sorts.
pub fn normalize_sfs<I: Int>(m: &SfsInvariants<I>) -> Result<SfsInvariants<I>> {
    let mut fibers = Vec::with_capacity(m.fibers.len());
    for f in &m.fibers {
        if f.alpha < I::one() {
            return Err(Error::BadFiber {
                alpha: f.alpha.to_string(),
                beta: f.beta.to_string(),
            });
        }
        require_coprime(&f.alpha, &f.beta)?;
        if f.alpha.is_one() {
            continue;
        }
        fibers.push(Fiber::new(f.alpha.clone(), f.beta.rem_euclid_c(&f.alpha)?));
    }
    fibers.sort();
    Ok(SfsInvariants {
        fibers,
        euler: m.euler.clone(),
        torus_cover: m.torus_cover,
    })
}

/// Homeomorphism test on normal forms, in the unique-fibration regime.
pub fn sfs_equivalent<I: Int>(
    a: &SfsInvariants<I>,
    b: &SfsInvariants<I>,
    orientation: Orientation,
) -> Result<bool> {
    if !a.has_unique_fibration() || !b.has_unique_fibration() {
        return Err(Error::AmbiguousFibration);
    }
    let na = normalize_sfs(a)?;
    let nb = normalize_sfs(b)?;
    if same_normal_form(&na, &nb) {
        return Ok(true);
    }
    if orientation == Orientation::Preserving {
        return Ok(false);
    }
    Ok(same_normal_form(&na, &nb.orientation_reversal()?))
}

fn same_normal_form<I: Int>(a: &SfsInvariants<I>, b: &SfsInvariants<I>) -> bool {
    a.fibers == b.fibers && a.euler == b.euler
}
