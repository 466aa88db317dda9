use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{gcd, Int};
use crate::error::{Error, Result};

/// Exact fraction, always stored reduced with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational<I = i64> {
    num: I,
    den: I,
}

impl<I: Int> Rational<I> {
    pub fn new(num: I, den: I) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = gcd(&num, &den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_floor_c(&g)?, den.div_floor_c(&g)?)
        };
        if den.is_negative() {
            num = num.neg_c()?;
            den = den.neg_c()?;
        }
        Ok(Rational { num, den })
    }

    pub fn from_int(n: I) -> Self {
        Rational { num: n, den: I::one() }
    }

    pub fn zero() -> Self {
        Self::from_int(I::zero())
    }

    pub fn one() -> Self {
        Self::from_int(I::one())
    }

    pub fn numer(&self) -> &I {
        &self.num
    }

    pub fn denom(&self) -> &I {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    /// The integer value, when the fraction is one.
    pub fn to_integer(&self) -> Option<I> {
        self.is_integer().then(|| self.num.clone())
    }

    pub fn floor(&self) -> I {
        // den > 0, so floor division cannot overflow.
        self.num.div_floor(&self.den)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.den == other.den {
            return Self::new(self.num.add_c(&other.num)?, self.den.clone());
        }
        let g = gcd(&self.den, &other.den)?;
        let left = other.den.div_floor_c(&g)?;
        let right = self.den.div_floor_c(&g)?;
        let num = self.num.mul_c(&left)?.add_c(&other.num.mul_c(&right)?)?;
        Self::new(num, self.den.mul_c(&left)?)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_neg()?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        // Cross-cancel first to keep intermediates small.
        let g1 = gcd(&self.num, &other.den)?;
        let g2 = gcd(&other.num, &self.den)?;
        let g1 = if g1.is_zero() { I::one() } else { g1 };
        let g2 = if g2.is_zero() { I::one() } else { g2 };
        let num = self
            .num
            .div_floor_c(&g1)?
            .mul_c(&other.num.div_floor_c(&g2)?)?;
        let den = self
            .den
            .div_floor_c(&g2)?
            .mul_c(&other.den.div_floor_c(&g1)?)?;
        Self::new(num, den)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.recip()?)
    }

    pub fn checked_neg(&self) -> Result<Self> {
        Ok(Rational {
            num: self.num.neg_c()?,
            den: self.den.clone(),
        })
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn add_int(&self, n: &I) -> Result<Self> {
        self.checked_add(&Self::from_int(n.clone()))
    }

    pub fn sub_int(&self, n: &I) -> Result<Self> {
        self.checked_sub(&Self::from_int(n.clone()))
    }

    /// `num/den` with the denominator always present.
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.num, self.den)
    }
}

impl<I: Int> Ord for Rational<I> {
    /// Compares by continued-fraction descent, so no products are formed
    /// and the comparison cannot overflow.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.num.clone(), self.den.clone());
        let (mut c, mut d) = (other.num.clone(), other.den.clone());
        let mut flipped = false;
        loop {
            let qa = a.div_floor(&b);
            let qc = c.div_floor(&d);
            let ord = qa.cmp(&qc);
            if ord != Ordering::Equal {
                return if flipped { ord.reverse() } else { ord };
            }
            let ra = a.mod_floor(&b);
            let rc = c.mod_floor(&d);
            match (ra.is_zero(), rc.is_zero()) {
                (true, true) => return Ordering::Equal,
                (true, false) => {
                    return if flipped { Ordering::Greater } else { Ordering::Less };
                }
                (false, true) => {
                    return if flipped { Ordering::Less } else { Ordering::Greater };
                }
                (false, false) => {
                    // ra/b vs rc/d has the opposite order of b/ra vs d/rc.
                    a = std::mem::replace(&mut b, ra);
                    c = std::mem::replace(&mut d, rc);
                    flipped = !flipped;
                }
            }
        }
    }
}

impl<I: Int> PartialOrd for Rational<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Int> fmt::Display for Rational<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<I: Int> FromStr for Rational<I> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            I::from_str_radix(t.trim(), 10).map_err(|_| Error::Parse {
                position: 0,
                message: format!("not an integer: {t:?}"),
            })
        };
        match s.split_once('/') {
            Some((n, d)) => Self::new(parse(n)?, parse(d)?),
            None => Ok(Self::from_int(parse(s)?)),
        }
    }
}

impl<I: Int> From<I> for Rational<I> {
    fn from(n: I) -> Self {
        Self::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn stored_reduced_with_positive_denominator() {
        let x = r(6, -8);
        assert_eq!((*x.numer(), *x.denom()), (-3, 4));
        assert_eq!(r(0, -5), Rational::zero());
        assert_eq!(Rational::<i64>::new(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn euler_style_sums() {
        // 1 − (1/2 + 1/3 + 1/7) = 1/42
        let s = r(1, 2).checked_add(&r(1, 3)).unwrap().checked_add(&r(1, 7)).unwrap();
        assert_eq!(Rational::one().checked_sub(&s).unwrap(), r(1, 42));
        // 1/30 + 59/30 = 2
        let t = r(1, 30).checked_add(&r(59, 30)).unwrap();
        assert_eq!(t.to_integer(), Some(2));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = r(i64::MAX, 1);
        assert_eq!(big.checked_add(&Rational::one()), Err(Error::Overflow));
        let tiny = r(1, i64::MAX);
        assert_eq!(tiny.checked_mul(&r(1, 2)), Err(Error::Overflow));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3/-6".parse::<Rational>().unwrap(), r(-1, 2));
        assert_eq!("7".parse::<Rational>().unwrap(), r(7, 1));
        assert_eq!(r(7, 1).to_string(), "7/1");
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_and_recip() {
        assert_eq!(r(-7, 2).floor(), -4);
        assert_eq!(r(-2, 3).recip().unwrap(), r(-3, 2));
        assert_eq!(Rational::<i64>::zero().recip(), Err(Error::DivisionByZero));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn add_then_subtract_is_identity(a in -200i64..200, b in 1i64..200, c in -200i64..200, d in 1i64..200) {
            let x = r(a, b);
            let y = r(c, d);
            prop_assert_eq!(x.checked_add(&y).unwrap().checked_sub(&y).unwrap(), x);
        }

        #[test]
        fn ordering_matches_cross_multiplication(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let expected = (a as i128 * d as i128).cmp(&(c as i128 * b as i128));
            prop_assert_eq!(r(a, b).cmp(&r(c, d)), expected);
        }

        #[test]
        fn mul_div_round_trip(a in -300i64..300, b in 1i64..300, c in 1i64..300, d in 1i64..300) {
            let x = r(a, b);
            let y = r(c, d);
            prop_assert_eq!(x.checked_mul(&y).unwrap().checked_div(&y).unwrap(), x);
        }
    }
}
