use super::Int;
use crate::error::{Error, Result};

/// Solution of `y·p + x·q = −1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bezout<I> {
    pub x: I,
    pub y: I,
}

/// Extended Euclid: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b) > 0`.
pub fn egcd<I: Int>(a: &I, b: &I) -> Result<(I, I, I)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BadInput("egcd(0, 0) is undefined".into()));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (I::one(), I::zero());
    let (mut old_t, mut t) = (I::zero(), I::one());
    while !r.is_zero() {
        let q = old_r.div_floor_c(&r)?;
        let next_r = old_r.sub_c(&q.mul_c(&r)?)?;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s.sub_c(&q.mul_c(&s)?)?;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t.sub_c(&q.mul_c(&t)?)?;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((old_r.neg_c()?, old_s.neg_c()?, old_t.neg_c()?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Nonnegative gcd; `gcd(0, 0) = 0`.
pub fn gcd<I: Int>(a: &I, b: &I) -> Result<I> {
    let (mut a, mut b) = (a.abs_c()?, b.abs_c()?);
    while !b.is_zero() {
        let r = a.rem_euclid_c(&b)?;
        a = std::mem::replace(&mut b, r);
    }
    Ok(a)
}

/// Inverse of `a` modulo `m` in `[0, |m|)`.
pub fn mod_inverse<I: Int>(a: &I, m: &I) -> Result<I> {
    if m.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (g, x, _) = egcd(a, m)?;
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a: a.to_string(),
            b: m.to_string(),
            gcd: g.to_string(),
        });
    }
    x.rem_euclid_c(m)
}

/// Solves `y·p + x·q = −1` with the canonical representative `0 ≤ x < p`.
///
/// Every other solution is `(x + k·p, y − k·q)`.
pub fn solve_bezout_neg1<I: Int>(p: &I, q: &I) -> Result<Bezout<I>> {
    if !p.is_positive() {
        return Err(Error::BadInput(format!("modulus p = {p} must be positive")));
    }
    let (g, s, t) = egcd(p, q)?;
    if !g.is_one() {
        return Err(Error::NotCoprime {
            a: p.to_string(),
            b: q.to_string(),
            gcd: g.to_string(),
        });
    }
    // s·p + t·q = 1, so (−s)·p + (−t)·q = −1.
    let (y0, x0) = (s.neg_c()?, t.neg_c()?);
    let x = x0.rem_euclid_c(p)?;
    let shift = x0.sub_c(&x)?.div_floor_c(p)?;
    let y = y0.add_c(&shift.mul_c(q)?)?;
    Ok(Bezout { x, y })
}
