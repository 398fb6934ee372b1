use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{forward_binop, Residue, ZRoot2};
use crate::error::{Error, Result};

/// A cyclotomic integer `aω³ + bω² + cω + d` with `ω = e^{iπ/4}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ZOmega {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl ZOmega {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn from_int(d: impl Into<BigInt>) -> Self {
        Self::new(0, 0, 0, d)
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `ω^j` for any integer `j`.
    pub fn omega_pow(j: i64) -> Self {
        let j = j.rem_euclid(8);
        let sign = if j >= 4 { -1 } else { 1 };
        match j % 4 {
            0 => Self::new(0, 0, 0, sign),
            1 => Self::new(0, 0, sign, 0),
            2 => Self::new(0, sign, 0, 0),
            _ => Self::new(sign, 0, 0, 0),
        }
    }

    /// `√2 = ω - ω³`.
    pub fn sqrt2() -> Self {
        Self::new(-1, 0, 1, 0)
    }

    /// `i = ω²`.
    pub fn i() -> Self {
        Self::new(0, 1, 0, 0)
    }

    /// The embedding `a + b√2 ↦ b(ω - ω³) + a`.
    pub fn from_zroot2(x: &ZRoot2) -> Self {
        Self {
            a: -&x.b,
            b: BigInt::zero(),
            c: x.b.clone(),
            d: x.a.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    /// Coefficients indexed by the power of ω: `[d, c, b, a]`.
    fn powers(&self) -> [&BigInt; 4] {
        [&self.d, &self.c, &self.b, &self.a]
    }

    fn from_powers([d, c, b, a]: [BigInt; 4]) -> Self {
        Self { a, b, c, d }
    }

    /// Complex conjugate: `ω^j ↦ ω^{-j}`.
    pub fn conj(&self) -> Self {
        Self {
            a: -&self.c,
            b: -&self.b,
            c: -&self.a,
            d: self.d.clone(),
        }
    }

    pub fn mul_omega(&self) -> Self {
        Self {
            a: self.b.clone(),
            b: self.c.clone(),
            c: self.d.clone(),
            d: -&self.a,
        }
    }

    pub fn residue(&self) -> Residue {
        let bit = |x: &BigInt| x.is_odd() as u8;
        Residue::from_bits(bit(&self.a) << 3 | bit(&self.b) << 2 | bit(&self.c) << 1 | bit(&self.d))
    }

    /// `√2 | t` iff the residue of `t` is reducible.
    pub fn divisible_by_sqrt2(&self) -> bool {
        (&self.b - &self.d).is_even() && (&self.a - &self.c).is_even()
    }

    pub fn mul_sqrt2(&self) -> Self {
        Self {
            a: &self.b - &self.d,
            b: &self.c + &self.a,
            c: &self.b + &self.d,
            d: &self.c - &self.a,
        }
    }

    pub fn div_sqrt2(&self) -> Result<Self> {
        if !self.divisible_by_sqrt2() {
            return Err(Error::Divisibility(self.to_string()));
        }
        Ok(Self {
            a: (&self.b - &self.d) >> 1,
            b: (&self.c + &self.a) >> 1,
            c: (&self.b + &self.d) >> 1,
            d: (&self.c - &self.a) >> 1,
        })
    }

    /// Multiplies by `√2^k`.
    pub fn mul_sqrt2_pow(&self, k: u32) -> Self {
        let s = k / 2;
        let shifted = Self {
            a: &self.a << s,
            b: &self.b << s,
            c: &self.c << s,
            d: &self.d << s,
        };
        if k % 2 == 1 {
            shifted.mul_sqrt2()
        } else {
            shifted
        }
    }

    /// `(t + t†)/√2`, always an element of ℤ[ω]; equals `-dω³ + dω + (c - a)`.
    pub fn symm_div(&self) -> Self {
        Self {
            a: -&self.d,
            b: BigInt::zero(),
            c: self.d.clone(),
            d: &self.c - &self.a,
        }
    }

    /// `t†t`.
    pub fn norm_sq(&self) -> Self {
        &self.conj() * self
    }

    /// For a real element (`b = 0`, `a = -c`), its value as `d + c√2`.
    pub fn to_zroot2(&self) -> Result<ZRoot2> {
        if !self.b.is_zero() || self.a != -&self.c {
            return Err(Error::NotReal(self.to_string()));
        }
        Ok(ZRoot2::new(self.d.clone(), self.c.clone()))
    }
}

impl Add for &ZOmega {
    type Output = ZOmega;
    fn add(self, rhs: &ZOmega) -> ZOmega {
        ZOmega {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }
}

impl Sub for &ZOmega {
    type Output = ZOmega;
    fn sub(self, rhs: &ZOmega) -> ZOmega {
        ZOmega {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            c: &self.c - &rhs.c,
            d: &self.d - &rhs.d,
        }
    }
}

impl Mul for &ZOmega {
    type Output = ZOmega;
    fn mul(self, rhs: &ZOmega) -> ZOmega {
        let p = self.powers();
        let q = rhs.powers();
        let mut out: [BigInt; 4] = Default::default();
        for (i, x) in p.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in q.iter().enumerate() {
                let term = *x * *y;
                // ω⁴ = -1
                if i + j < 4 {
                    out[i + j] += term;
                } else {
                    out[i + j - 4] -= term;
                }
            }
        }
        ZOmega::from_powers(out)
    }
}

impl Neg for &ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        -&self
    }
}

forward_binop!(ZOmega, Add, add);
forward_binop!(ZOmega, Sub, sub);
forward_binop!(ZOmega, Mul, mul);

impl fmt::Display for ZOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_squared_is_i() {
        let w = ZOmega::omega_pow(1);
        assert_eq!(&w * &w, ZOmega::new(0, 1, 0, 0));
        assert_eq!(ZOmega::omega_pow(8), ZOmega::one());
        assert_eq!(ZOmega::omega_pow(-1), ZOmega::new(-1, 0, 0, 0));
    }

    #[test]
    fn sqrt2_squares_to_two() {
        let s = ZOmega::sqrt2();
        assert_eq!(&s * &s, ZOmega::from_int(2));
        assert_eq!(ZOmega::one().mul_sqrt2(), s);
        assert_eq!(s.residue().to_string(), "1010");
    }

    #[test]
    fn conj_examples() {
        assert_eq!(ZOmega::omega_pow(1).conj(), ZOmega::new(-1, 0, 0, 0));
        assert_eq!(ZOmega::one().conj(), ZOmega::one());
        assert_eq!(ZOmega::new(1, 2, 3, 4).conj(), ZOmega::new(-3, -2, -1, 4));
    }

    #[test]
    fn residue_examples() {
        assert_eq!(ZOmega::omega_pow(1).residue().to_string(), "0010");
        assert_eq!(ZOmega::new(0, 0, 3, 2).residue().to_string(), "0010");
        assert_eq!(ZOmega::new(0, 0, 3, 3).residue().to_string(), "0011");
    }

    #[test]
    fn sqrt2_divisibility() {
        assert!(!ZOmega::omega_pow(1).divisible_by_sqrt2());
        assert!(matches!(ZOmega::omega_pow(1).div_sqrt2(), Err(Error::Divisibility(_))));
        let q = ZOmega::from_int(2).div_sqrt2().unwrap();
        assert_eq!(q, ZOmega::sqrt2());
        assert_eq!(q.mul_sqrt2(), ZOmega::from_int(2));
    }

    #[test]
    fn symm_div_examples() {
        assert_eq!(ZOmega::one().symm_div(), ZOmega::sqrt2());
        assert_eq!(ZOmega::omega_pow(2).symm_div(), ZOmega::zero());
        // t = ω³: -dω³ + dω + c - a = -1
        let t = ZOmega::new(1, 0, 0, 0);
        assert_eq!(t.symm_div(), ZOmega::from_int(-1));
        assert_eq!(t.symm_div().mul_sqrt2(), &t + &t.conj());
    }

    #[test]
    fn real_elements() {
        assert_eq!(ZOmega::sqrt2().to_zroot2().unwrap(), ZRoot2::sqrt2());
        assert!(ZOmega::i().to_zroot2().is_err());
        let x = ZRoot2::new(3, -7);
        assert_eq!(ZOmega::from_zroot2(&x).to_zroot2().unwrap(), x);
    }
}
