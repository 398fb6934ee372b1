use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{forward_binop, DRoot2, Residue, ZOmega};
use crate::error::{Error, Result};

/// An element `num / √2^k` of ℤ[ω, 1/√2], kept in reduced form: either
/// `k = 0` or the residue of `num` is not reducible.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DOmega {
    num: ZOmega,
    k: u32,
}

impl DOmega {
    pub fn new(num: ZOmega, k: u32) -> Self {
        let mut x = Self { num, k };
        x.reduce();
        x
    }

    pub fn from_int(a: i64) -> Self {
        Self::new(ZOmega::from_int(a), 0)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn omega_pow(j: i64) -> Self {
        Self::new(ZOmega::omega_pow(j), 0)
    }

    /// `1/√2`.
    pub fn inv_sqrt2() -> Self {
        Self::new(ZOmega::one(), 1)
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 && self.num.divisible_by_sqrt2() {
            self.num = self.num.div_sqrt2().expect("divisibility checked");
            self.k -= 1;
        }
    }

    pub fn numerator(&self) -> &ZOmega {
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

    pub fn conj(&self) -> Self {
        Self {
            num: self.num.conj(),
            k: self.k,
        }
    }

    /// `√2^k · t` as a cyclotomic integer, for any denominator exponent `k`.
    pub fn scaled(&self, k: u32) -> Result<ZOmega> {
        if k < self.k {
            return Err(Error::Exponent { k, lde: self.k });
        }
        Ok(self.num.mul_sqrt2_pow(k - self.k))
    }

    /// The `k`-residue `ρ(√2^k · t)`.
    pub fn k_residue(&self, k: u32) -> Result<Residue> {
        Ok(self.scaled(k)?.residue())
    }

    /// Multiplies by `√2^j` (exact, reduced).
    pub fn mul_sqrt2_pow(&self, j: u32) -> Self {
        Self::new(self.num.mul_sqrt2_pow(j), self.k)
    }

    /// Converts a real element to ℤ[1/√2].
    pub fn to_real(&self) -> Result<DRoot2> {
        let x = self
            .num
            .to_zroot2()
            .map_err(|_| Error::NotReal(self.to_string()))?;
        Ok(DRoot2::new(x, self.k))
    }

    pub fn from_real(x: &DRoot2) -> Self {
        Self::new(ZOmega::from_zroot2(x.numerator()), x.lde())
    }

    /// If this is `ω^j` for some `j`, returns `j mod 8`.
    pub fn omega_exponent(&self) -> Option<u8> {
        if self.k != 0 {
            return None;
        }
        (0u8..8).find(|&j| self.num == ZOmega::omega_pow(j as i64))
    }
}

impl From<ZOmega> for DOmega {
    fn from(num: ZOmega) -> Self {
        Self { num, k: 0 }
    }
}

impl Add for &DOmega {
    type Output = DOmega;
    fn add(self, rhs: &DOmega) -> DOmega {
        let k = self.k.max(rhs.k);
        let lhs = self.num.mul_sqrt2_pow(k - self.k);
        let rhs = rhs.num.mul_sqrt2_pow(k - rhs.k);
        DOmega::new(lhs + rhs, k)
    }
}

impl Sub for &DOmega {
    type Output = DOmega;
    fn sub(self, rhs: &DOmega) -> DOmega {
        self + &(-rhs)
    }
}

impl Mul for &DOmega {
    type Output = DOmega;
    fn mul(self, rhs: &DOmega) -> DOmega {
        if self.is_zero() || rhs.is_zero() {
            return DOmega::zero();
        }
        DOmega::new(&self.num * &rhs.num, self.k + rhs.k)
    }
}

impl Neg for &DOmega {
    type Output = DOmega;
    fn neg(self) -> DOmega {
        DOmega {
            num: -&self.num,
            k: self.k,
        }
    }
}

impl Neg for DOmega {
    type Output = DOmega;
    fn neg(self) -> DOmega {
        -&self
    }
}

forward_binop!(DOmega, Add, add);
forward_binop!(DOmega, Sub, sub);
forward_binop!(DOmega, Mul, mul);

impl fmt::Display for DOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/s2^{}", self.num, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::ZRoot2;

    #[test]
    fn reduce_divides_out_sqrt2() {
        let x = DOmega::new(ZOmega::sqrt2(), 3);
        assert_eq!(x.numerator(), &ZOmega::one());
        assert_eq!(x.lde(), 2);
    }

    #[test]
    fn k_residue_of_omega_over_two() {
        let x = DOmega::new(ZOmega::omega_pow(1), 2);
        assert_eq!(x.k_residue(2).unwrap().to_string(), "0010");
        assert!(x.k_residue(1).is_err());
    }

    #[test]
    fn to_real_examples() {
        assert_eq!(DOmega::one().to_real().unwrap(), DRoot2::one());
        assert_eq!(
            DOmega::from(ZOmega::sqrt2()).to_real().unwrap(),
            DRoot2::new(ZRoot2::sqrt2(), 0)
        );
        assert_eq!(DOmega::new(ZOmega::sqrt2(), 1).to_real().unwrap(), DRoot2::one());
        assert!(matches!(DOmega::omega_pow(1).to_real(), Err(Error::NotReal(_))));
    }

    #[test]
    fn omega_exponent_lookup() {
        for j in 0..8 {
            assert_eq!(DOmega::omega_pow(j).omega_exponent(), Some(j as u8));
        }
        assert_eq!(DOmega::inv_sqrt2().omega_exponent(), None);
        assert_eq!(DOmega::from_int(2).omega_exponent(), None);
    }
}
