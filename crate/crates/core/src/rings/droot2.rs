use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_binop, Parity, ZRoot2};
use crate::error::{Error, Result};

/// An element `num / √2^k` of ℤ[1/√2], kept in reduced form: either
/// `k = 0` or `num` is not divisible by √2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DRoot2 {
    num: ZRoot2,
    k: u32,
}

impl DRoot2 {
    pub fn new(num: ZRoot2, k: u32) -> Self {
        let mut x = Self { num, k };
        x.reduce();
        x
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(ZRoot2::from_int(a), 0)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            match self.num.div_sqrt2() {
                Some(q) => {
                    self.num = q;
                    self.k -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> &ZRoot2 {
        &self.num
    }

    /// Least denominator exponent.
    pub fn lde(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.k == 0 && self.num.is_one()
    }

    /// `√2^k · x` as a quadratic integer, for any denominator exponent `k`.
    pub fn scaled(&self, k: u32) -> Result<ZRoot2> {
        if k < self.k {
            return Err(Error::Exponent { k, lde: self.k });
        }
        Ok(self.num.mul_sqrt2_pow(k - self.k))
    }

    /// The `k`-parity `p(√2^k · x)`.
    pub fn k_parity(&self, k: u32) -> Result<Parity> {
        Ok(self.scaled(k)?.parity())
    }
}

impl Add for &DRoot2 {
    type Output = DRoot2;
    fn add(self, rhs: &DRoot2) -> DRoot2 {
        let k = self.k.max(rhs.k);
        let lhs = self.num.mul_sqrt2_pow(k - self.k);
        let rhs = rhs.num.mul_sqrt2_pow(k - rhs.k);
        DRoot2::new(lhs + rhs, k)
    }
}

impl Sub for &DRoot2 {
    type Output = DRoot2;
    fn sub(self, rhs: &DRoot2) -> DRoot2 {
        self + &(-rhs)
    }
}

impl Mul for &DRoot2 {
    type Output = DRoot2;
    fn mul(self, rhs: &DRoot2) -> DRoot2 {
        DRoot2::new(&self.num * &rhs.num, self.k + rhs.k)
    }
}

impl Neg for &DRoot2 {
    type Output = DRoot2;
    fn neg(self) -> DRoot2 {
        DRoot2 {
            num: -&self.num,
            k: self.k,
        }
    }
}

impl Neg for DRoot2 {
    type Output = DRoot2;
    fn neg(self) -> DRoot2 {
        -&self
    }
}

forward_binop!(DRoot2, Add, add);
forward_binop!(DRoot2, Sub, sub);
forward_binop!(DRoot2, Mul, mul);

impl fmt::Display for DRoot2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/s2^{}", self.num, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_integer_case() {
        let x = DRoot2::new(ZRoot2::from_int(2), 2);
        assert_eq!(x.numerator(), &ZRoot2::one());
        assert_eq!(x.lde(), 0);
    }

    #[test]
    fn inverse_sqrt2_is_already_reduced() {
        let x = DRoot2::new(ZRoot2::one(), 1);
        assert_eq!(x.lde(), 1);
        assert_eq!(x.k_parity(1).unwrap(), Parity::ONE);
        assert_eq!(x.k_parity(3).unwrap(), Parity::ZERO);
        assert_eq!(x.k_parity(0), Err(Error::Exponent { k: 0, lde: 1 }));
    }

    #[test]
    fn arithmetic_reduces() {
        let half = DRoot2::new(ZRoot2::one(), 2);
        assert_eq!(&half + &half, DRoot2::one());
        let r = DRoot2::new(ZRoot2::one(), 1);
        assert_eq!(&r * &r, half);
        assert_eq!(&r - &r, DRoot2::zero());
    }
}
