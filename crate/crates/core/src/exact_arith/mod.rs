//! Exact integer and rational arithmetic.
//!
//! Everything is generic over [`Int`], a signed integer type with checked
//! arithmetic. Fixed-width types report [`Error::Overflow`] instead of
//! wrapping; `BigInt` never overflows.

mod cf;
mod euclid;
mod rational;

pub use cf::{constrained_cf, eval_cf, CfExpansion, CfForm};
pub use euclid::{egcd, gcd, mod_inverse, solve_bezout_neg1, Bezout};
pub use rational::Rational;

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Signed integer type usable as the exact scalar of every computation.
pub trait Int:
    Integer
    + Signed
    + Clone
    + Hash
    + Debug
    + Display
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_small(n: i64) -> Self {
        Self::from_i64(n).expect("small constant fits every Int")
    }

    fn add_c(&self, other: &Self) -> Result<Self> {
        self.checked_add(other).ok_or(Error::Overflow)
    }

    fn sub_c(&self, other: &Self) -> Result<Self> {
        self.checked_sub(other).ok_or(Error::Overflow)
    }

    fn mul_c(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other).ok_or(Error::Overflow)
    }

    fn neg_c(&self) -> Result<Self> {
        Self::zero().sub_c(self)
    }

    fn abs_c(&self) -> Result<Self> {
        if self.is_negative() {
            self.neg_c()
        } else {
            Ok(self.clone())
        }
    }

    /// Floor division; `d` must be nonzero.
    fn div_floor_c(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // MIN / -1 is the only overflowing case.
        if d.is_negative() && *d == -Self::one() {
            return self.neg_c();
        }
        Ok(self.div_floor(d))
    }

    /// Representative of `self` modulo `|m|` in `[0, |m|)`.
    fn rem_euclid_c(&self, m: &Self) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = m.abs_c()?;
        Ok(self.mod_floor(&m))
    }

    fn is_odd_c(&self) -> bool {
        self.is_odd()
    }
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Checks that `gcd(a, b) = 1`.
pub fn require_coprime<I: Int>(a: &I, b: &I) -> Result<()> {
    let g = gcd(a, b)?;
    if g.is_one() {
        Ok(())
    } else {
        Err(Error::NotCoprime {
            a: a.to_string(),
            b: b.to_string(),
            gcd: g.to_string(),
        })
    }
}
