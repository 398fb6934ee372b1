use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{forward_binop, Parity};

/// A quadratic integer `a + b√2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZRoot2 {
    pub a: BigInt,
    pub b: BigInt,
}

impl ZRoot2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        Self::new(a, 0)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn sqrt2() -> Self {
        Self::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Parity map `a + b√2 ↦ a mod 2`.
    pub fn parity(&self) -> Parity {
        Parity::new(self.a.is_odd())
    }

    /// `√2 | a + b√2` iff `a` is even.
    pub fn divisible_by_sqrt2(&self) -> bool {
        self.a.is_even()
    }

    pub fn mul_sqrt2(&self) -> Self {
        Self {
            a: &self.b << 1,
            b: self.a.clone(),
        }
    }

    /// Exact division by √2; `None` when not divisible.
    pub fn div_sqrt2(&self) -> Option<Self> {
        if !self.divisible_by_sqrt2() {
            return None;
        }
        Some(Self {
            a: self.b.clone(),
            b: &self.a >> 1,
        })
    }

    /// Multiplies by `√2^k`.
    pub fn mul_sqrt2_pow(&self, k: u32) -> Self {
        let shifted = Self {
            a: &self.a << (k / 2),
            b: &self.b << (k / 2),
        };
        if k % 2 == 1 {
            shifted.mul_sqrt2()
        } else {
            shifted
        }
    }
}

impl Add for &ZRoot2 {
    type Output = ZRoot2;
    fn add(self, rhs: &ZRoot2) -> ZRoot2 {
        ZRoot2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &ZRoot2 {
    type Output = ZRoot2;
    fn sub(self, rhs: &ZRoot2) -> ZRoot2 {
        ZRoot2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &ZRoot2 {
    type Output = ZRoot2;
    fn mul(self, rhs: &ZRoot2) -> ZRoot2 {
        let bb = &self.b * &rhs.b;
        ZRoot2 {
            a: &self.a * &rhs.a + (bb << 1),
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Neg for &ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        ZRoot2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for ZRoot2 {
    type Output = ZRoot2;
    fn neg(self) -> ZRoot2 {
        -&self
    }
}

forward_binop!(ZRoot2, Add, add);
forward_binop!(ZRoot2, Sub, sub);
forward_binop!(ZRoot2, Mul, mul);

impl fmt::Display for ZRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn times_sqrt2() {
        assert_eq!(ZRoot2::one() * ZRoot2::sqrt2(), ZRoot2::new(0, 1));
        assert_eq!(ZRoot2::sqrt2() * ZRoot2::sqrt2(), ZRoot2::from_int(2));
    }

    #[test]
    fn parity_of_small_values() {
        assert_eq!(ZRoot2::zero().parity(), Parity::ZERO);
        assert_eq!(ZRoot2::new(1, 1).parity(), Parity::ONE);
    }

    #[test]
    fn sqrt2_division() {
        let x = ZRoot2::new(6, -3);
        assert_eq!(x.mul_sqrt2().div_sqrt2(), Some(x.clone()));
        assert_eq!(ZRoot2::new(1, 4).div_sqrt2(), None);
        assert_eq!(x.mul_sqrt2_pow(3), x.mul_sqrt2().mul_sqrt2().mul_sqrt2());
    }
}
