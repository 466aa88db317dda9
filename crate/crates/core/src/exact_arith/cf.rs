//! The two parity-constrained continued fractions attached to a 2-bridge link.
//!
//! For a link of type `(2α, β)` the fraction `β/2α` expands as
//!
//! ```text
//! 1/(2a₁ + 1/(a₂ + 1/(2a₃ + ⋯ + 1/(2aₙ))))      n odd   (OddDoubled)
//! ```
//!
//! and the same coefficients read with the even positions doubled,
//!
//! ```text
//! 1/(a₁ + 1/(2a₂ + 1/(a₃ + ⋯ + 1/aₙ)))                  (EvenDoubled)
//! ```
//!
//! evaluate to `β/α`.

use super::{Int, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CfForm {
    /// Positions 1, 3, 5, … carry `2aᵢ`.
    OddDoubled,
    /// Positions 2, 4, … carry `2aᵢ`.
    EvenDoubled,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion<I = i64> {
    coefficients: Vec<I>,
    form: CfForm,
}

impl<I: Int> CfExpansion<I> {
    pub fn new(coefficients: Vec<I>, form: CfForm) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::BadInput("empty continued fraction".into()));
        }
        if coefficients.iter().any(|a| a.is_zero()) {
            return Err(Error::BadInput("continued fraction coefficient is zero".into()));
        }
        if form == CfForm::OddDoubled && coefficients.len().is_multiple_of(2) {
            return Err(Error::BadInput(
                "odd-doubled form needs an odd number of coefficients".into(),
            ));
        }
        Ok(CfExpansion { coefficients, form })
    }

    pub fn coefficients(&self) -> &[I] {
        &self.coefficients
    }

    pub fn form(&self) -> CfForm {
        self.form
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Same coefficients, read in the other parity form.
    pub fn with_form(&self, form: CfForm) -> Result<Self> {
        Self::new(self.coefficients.clone(), form)
    }

    /// `a₁ + a₃ + ⋯ + aₙ`, the linking number of the two link components.
    pub fn odd_position_sum(&self) -> Result<I> {
        self.coefficients
            .iter()
            .step_by(2)
            .try_fold(I::zero(), |acc, a| acc.add_c(a))
    }

    /// Denominator entry at 0-based position `i`.
    fn term(&self, i: usize) -> Result<I> {
        let doubled = match self.form {
            CfForm::OddDoubled => i.is_multiple_of(2),
            CfForm::EvenDoubled => i % 2 == 1,
        };
        let a = &self.coefficients[i];
        if doubled {
            a.mul_c(&I::from_small(2))
        } else {
            Ok(a.clone())
        }
    }
}

/// Exact value `1/(c₁ + 1/(c₂ + ⋯ + 1/cₙ))` of the expansion.
pub fn eval_cf<I: Int>(cf: &CfExpansion<I>) -> Result<Rational<I>> {
    let n = cf.len();
    let mut acc = Rational::from_int(cf.term(n - 1)?);
    for i in (0..n - 1).rev() {
        if acc.is_zero() {
            return Err(Error::DegenerateCf);
        }
        acc = Rational::from_int(cf.term(i)?).checked_add(&acc.recip()?)?;
    }
    if acc.is_zero() {
        return Err(Error::DegenerateCf);
    }
    acc.recip()
}

/// Odd-doubled expansion of `β/2α` (odd `β`, `0 < β < 2α`).
///
/// Greedy: each doubled slot takes the even integer nearest the current
/// reciprocal, each free slot the nearest integer with ties broken toward
/// the smaller absolute value. Denominators strictly decrease, and the
/// parity pattern (even/odd at doubled slots, odd/even at free slots)
/// guarantees termination at a doubled slot.
pub fn constrained_cf<I: Int>(frac: &Rational<I>) -> Result<CfExpansion<I>> {
    let two = I::from_small(2);
    let (beta, den) = (frac.numer(), frac.denom());
    if !beta.is_positive() || frac >= &Rational::one() {
        return Err(Error::BadInput(format!("{frac} is not in (0, 1)")));
    }
    if !den.is_even() || !beta.is_odd() {
        return Err(Error::BadInput(format!(
            "{frac} needs an odd numerator over an even denominator"
        )));
    }

    let mut coefficients = Vec::new();
    let mut value = frac.recip()?;
    loop {
        // Doubled slot: value = even/odd.
        let low = value.floor().div_floor_c(&two)?.mul_c(&two)?;
        let high = low.add_c(&two)?;
        let dist_low = value.sub_int(&low)?;
        let dist_high = Rational::from_int(high.clone()).checked_sub(&value)?;
        let c = if dist_low < dist_high { low } else { high };
        coefficients.push(c.div_floor_c(&two)?);
        let rest = value.sub_int(&c)?;
        if rest.is_zero() {
            break;
        }

        // Free slot: value = odd/even, never an integer.
        let w = rest.recip()?;
        let floor = w.floor();
        let ceil = floor.add_c(&I::one())?;
        let to_floor = w.sub_int(&floor)?;
        let to_ceil = Rational::from_int(ceil.clone()).checked_sub(&w)?;
        let a = match to_floor.cmp(&to_ceil) {
            std::cmp::Ordering::Less => floor,
            std::cmp::Ordering::Greater => ceil,
            std::cmp::Ordering::Equal => {
                if floor.abs_c()? <= ceil.abs_c()? {
                    floor
                } else {
                    ceil
                }
            }
        };
        let s = w.sub_int(&a)?;
        if a.is_zero() || s.is_zero() {
            return Err(Error::BadInput(format!("greedy expansion of {frac} degenerated")));
        }
        coefficients.push(a);
        value = s.recip()?;
    }

    let cf = CfExpansion::new(coefficients, CfForm::OddDoubled)?;
    if eval_cf(&cf)? != *frac {
        return Err(Error::BadInput(format!("expansion of {frac} failed to round-trip")));
    }
    Ok(cf)
}
