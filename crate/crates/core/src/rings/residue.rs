#![allow(clippy::suspicious_arithmetic_impl)]

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use crate::error::Error;

/// An element of ℤ₂.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Parity(bool);

impl Parity {
    pub const ZERO: Parity = Parity(false);
    pub const ONE: Parity = Parity(true);

    pub const fn new(bit: bool) -> Self {
        Parity(bit)
    }

    pub fn bit(self) -> u8 {
        self.0 as u8
    }

    pub fn is_one(self) -> bool {
        self.0
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity(self.0 ^ rhs.0)
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        Parity(self.0 & rhs.0)
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// An element `pω³ + qω² + rω + s` of ℤ₂[ω] = ℤ[ω]/(2).
///
/// Stored as the four bits `pqrs` with `p` in the most significant place,
/// so the digit string printed by [`Display`](fmt::Display) reads the same
/// as the integer in binary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Residue(u8);

impl Residue {
    pub const ZERO: Residue = Residue(0b0000);
    pub const ONE: Residue = Residue(0b0001);

    /// The four reducible residues, i.e. the multiples of √2 in ℤ₂[ω].
    pub const REDUCIBLE: [Residue; 4] = [
        Residue(0b0000),
        Residue(0b0101),
        Residue(0b1010),
        Residue(0b1111),
    ];

    /// Builds a residue from its low four bits `pqrs`.
    pub const fn from_bits(bits: u8) -> Self {
        Residue(bits & 0b1111)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// All sixteen residues in increasing order.
    pub fn all() -> impl Iterator<Item = Residue> {
        (0u8..16).map(Residue)
    }

    /// Coefficient bits in the order `[p, q, r, s]` (ω³, ω², ω, 1).
    pub fn digits(self) -> [u8; 4] {
        [(self.0 >> 3) & 1, (self.0 >> 2) & 1, (self.0 >> 1) & 1, self.0 & 1]
    }

    /// Multiplication by `ω^j`. Since `ω⁴ = -1 ≡ 1` this is a cyclic
    /// left rotation of the digit string.
    pub fn shift(self, j: u32) -> Self {
        let j = j % 4;
        Residue(((self.0 << j) | (self.0 >> (4 - j))) & 0b1111)
    }

    pub fn is_reducible(self) -> bool {
        Self::REDUCIBLE.contains(&self)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        Residue(self.0 ^ rhs.0)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        // ω^i·ω^j = ω^{(i+j) mod 4} modulo 2; bit i of the value is the ω^i coefficient.
        let mut out = 0u8;
        for i in 0..4 {
            if self.0 >> i & 1 == 1 {
                out ^= Residue(rhs.0).shift(i).0;
            }
        }
        Residue(out)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04b}", self.0)
    }
}

impl FromStr for Residue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.len() != 4 || !s.bytes().all(|c| c == b'0' || c == b'1') {
            return Err(Error::Parse(format!("residue must be four binary digits, got {s:?}")));
        }
        Ok(Residue(u8::from_str_radix(s, 2).expect("checked digits")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_is_rotation() {
        let r: Residue = "0001".parse().unwrap();
        assert_eq!(r.shift(1).to_string(), "0010");
        assert_eq!(r.shift(3).to_string(), "1000");
        assert_eq!(r.shift(4), r);
        assert_eq!("1000".parse::<Residue>().unwrap().shift(1).to_string(), "0001");
    }

    #[test]
    fn one_is_multiplicative_identity() {
        for r in Residue::all() {
            assert_eq!(r * Residue::ONE, r);
        }
    }

    #[test]
    fn rejects_bad_digit_strings() {
        assert!("012".parse::<Residue>().is_err());
        assert!("0201".parse::<Residue>().is_err());
    }
}
