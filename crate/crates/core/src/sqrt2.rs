//! Exact arithmetic in Z[sqrt 2].

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a + b*sqrt(2)` with arbitrary-precision integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Sqrt2Scalar {
    pub a: BigInt,
    pub b: BigInt,
}

impl Sqrt2Scalar {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Sqrt2Scalar { a: a.into(), b: b.into() }
    }

    pub fn int(a: impl Into<BigInt>) -> Self {
        Sqrt2Scalar::new(a, 0)
    }

    pub fn sqrt2() -> Self {
        Sqrt2Scalar::new(0, 1)
    }

    /// `sqrt(2)^e` for `e >= 0`.
    pub fn sqrt2_pow(e: u32) -> Self {
        let half = BigInt::one() << (e / 2) as usize;
        if e.is_multiple_of(2) {
            Sqrt2Scalar::new(half, 0)
        } else {
            Sqrt2Scalar::new(0, half)
        }
    }

    pub fn conj(&self) -> Self {
        Sqrt2Scalar { a: self.a.clone(), b: -&self.b }
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    pub fn is_integer(&self) -> bool {
        self.b.is_zero()
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        if self.b.is_zero() {
            Some(&self.a)
        } else {
            None
        }
    }

    pub fn is_nonneg_integer(&self) -> bool {
        self.b.is_zero() && !self.a.is_negative()
    }

    /// Multiply by an integer.
    pub fn scale(&self, k: &BigInt) -> Self {
        Sqrt2Scalar { a: &self.a * k, b: &self.b * k }
    }

    /// Exact division; fails unless the quotient lies in Z[sqrt 2].
    pub fn checked_div(&self, rhs: &Sqrt2Scalar) -> Result<Sqrt2Scalar> {
        let n = rhs.norm();
        if n.is_zero() {
            return Err(Error::NotDivisible(format!("{self} / {rhs}: zero divisor")));
        }
        let num = self * &rhs.conj();
        let (qa, ra) = num.a.div_rem(&n);
        let (qb, rb) = num.b.div_rem(&n);
        if !ra.is_zero() || !rb.is_zero() {
            return Err(Error::NotDivisible(format!("{self} / {rhs}")));
        }
        Ok(Sqrt2Scalar { a: qa, b: qb })
    }

    /// Halve, if possible.
    pub fn checked_half(&self) -> Result<Sqrt2Scalar> {
        self.checked_div(&Sqrt2Scalar::int(2))
    }
}

impl Zero for Sqrt2Scalar {
    fn zero() -> Self {
        Sqrt2Scalar::new(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Sqrt2Scalar {
    fn one() -> Self {
        Sqrt2Scalar::new(1, 0)
    }
}

impl From<i64> for Sqrt2Scalar {
    fn from(v: i64) -> Self {
        Sqrt2Scalar::int(v)
    }
}

impl From<BigInt> for Sqrt2Scalar {
    fn from(v: BigInt) -> Self {
        Sqrt2Scalar { a: v, b: BigInt::zero() }
    }
}

impl fmt::Display for Sqrt2Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√2", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{}-{}√2", self.a, -&self.b),
            _ => write!(f, "{}+{}√2", self.a, self.b),
        }
    }
}

impl<'a> Add<&'a Sqrt2Scalar> for &'a Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn add(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl Add for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn add(self, rhs: Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl AddAssign<&Sqrt2Scalar> for Sqrt2Scalar {
    fn add_assign(&mut self, rhs: &Sqrt2Scalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a Sqrt2Scalar> for &'a Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn sub(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl Sub for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn sub(self, rhs: Sqrt2Scalar) -> Sqrt2Scalar {
        Sqrt2Scalar { a: self.a - rhs.a, b: self.b - rhs.b }
    }
}

impl SubAssign<&Sqrt2Scalar> for Sqrt2Scalar {
    fn sub_assign(&mut self, rhs: &Sqrt2Scalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl<'a> Mul<&'a Sqrt2Scalar> for &'a Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn mul(self, rhs: &Sqrt2Scalar) -> Sqrt2Scalar {
        let two = BigInt::from(2);
        Sqrt2Scalar { a: &self.a * &rhs.a + two * &self.b * &rhs.b, b: &self.a * &rhs.b + &self.b * &rhs.a }
    }
}

impl Mul for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn mul(self, rhs: Sqrt2Scalar) -> Sqrt2Scalar {
        &self * &rhs
    }
}

impl Neg for Sqrt2Scalar {
    type Output = Sqrt2Scalar;
    fn neg(self) -> Sqrt2Scalar {
        Sqrt2Scalar { a: -self.a, b: -self.b }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let r = Sqrt2Scalar::sqrt2();
        assert_eq!(&r * &r, Sqrt2Scalar::int(2));
        assert_eq!(Sqrt2Scalar::sqrt2_pow(3), Sqrt2Scalar::new(0, 2));
        assert_eq!(Sqrt2Scalar::sqrt2_pow(0), Sqrt2Scalar::one());
    }

    #[test]
    fn norm_is_conjugate_product() {
        let x = Sqrt2Scalar::new(3, -5);
        assert_eq!(&x * &x.conj(), Sqrt2Scalar::int(x.norm()));
    }

    #[test]
    fn division() {
        let x = Sqrt2Scalar::new(2, 0);
        assert_eq!(x.checked_div(&Sqrt2Scalar::sqrt2()).unwrap(), Sqrt2Scalar::sqrt2());
        assert!(Sqrt2Scalar::one().checked_div(&Sqrt2Scalar::sqrt2()).is_err());
        assert!(Sqrt2Scalar::int(3).checked_half().is_err());
        assert!(Sqrt2Scalar::one().checked_div(&Sqrt2Scalar::zero()).is_err());
        // 1+√2 is a unit
        let u = Sqrt2Scalar::new(1, 1);
        assert_eq!(Sqrt2Scalar::one().checked_div(&u).unwrap(), Sqrt2Scalar::new(-1, 1));
    }

    #[test]
    fn display() {
        assert_eq!(Sqrt2Scalar::new(1, -2).to_string(), "1-2√2");
        assert_eq!(Sqrt2Scalar::new(0, 3).to_string(), "3√2");
        assert_eq!(Sqrt2Scalar::new(4, 0).to_string(), "4");
    }
}
