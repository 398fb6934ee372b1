use std::fmt;
use std::ops::Mul;

use super::ParityMat3;
use crate::error::{Error, Result};
use num_traits::Zero;

use crate::rings::DRoot2;

/// A 3×3 matrix over ℤ[1/√2], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat3 {
    pub(crate) m: [[DRoot2; 3]; 3],
}

impl Mat3 {
    pub fn new(m: [[DRoot2; 3]; 3]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| if i == j { DRoot2::one() } else { DRoot2::zero() })
        }))
    }

    /// Builds an integer matrix.
    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Self::new(m.map(|row| row.map(DRoot2::from_int)))
    }

    pub fn entry(&self, i: usize, j: usize) -> &DRoot2 {
        &self.m[i][j]
    }

    pub fn entries(&self) -> &[[DRoot2; 3]; 3] {
        &self.m
    }

    pub fn column(&self, j: usize) -> [DRoot2; 3] {
        std::array::from_fn(|i| self.m[i][j].clone())
    }

    pub fn transpose(&self) -> Self {
        Self::new(std::array::from_fn(|i| std::array::from_fn(|j| self.m[j][i].clone())))
    }

    pub fn det(&self) -> DRoot2 {
        let m = &self.m;
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
        };
        let t0 = &m[0][0] * &minor(1, 2, 1, 2);
        let t1 = &m[0][1] * &minor(1, 2, 0, 2);
        let t2 = &m[0][2] * &minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_orthogonal(&self) -> bool {
        (&self.transpose() * self).is_identity()
    }

    /// Checks `VᵀV = I` and `det V = 1`.
    pub fn check_special_orthogonal(&self) -> Result<()> {
        if !self.is_orthogonal() {
            return Err(Error::NotOrthogonal);
        }
        let det = self.det();
        if !det.is_one() {
            return Err(Error::NotSpecial(det.to_string()));
        }
        Ok(())
    }

    /// Least denominator exponent: the maximum over the entries.
    pub fn lde(&self) -> u32 {
        self.m.iter().flatten().map(DRoot2::lde).max().unwrap_or(0)
    }

    /// Componentwise `k`-parity.
    pub fn parity_mat(&self, k: u32) -> Result<ParityMat3> {
        let mut bits = [[0u8; 3]; 3];
        for (i, row) in self.m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                bits[i][j] = e.k_parity(k)?.bit();
            }
        }
        Ok(ParityMat3::new(bits))
    }

    /// True when every entry lies in {-1, 0, 1}.
    pub fn has_unit_entries(&self) -> bool {
        self.m.iter().flatten().all(|e| {
            let n = e.numerator();
            e.lde() == 0 && n.b.is_zero() && n.a.magnitude() <= &1u32.into()
        })
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut acc = &self.m[i][0] * &rhs.m[0][j];
                for l in 1..3 {
                    acc = &acc + &(&self.m[i][l] * &rhs.m[l][j]);
                }
                acc
            })
        }))
    }
}

impl Mul for Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: Mat3) -> Mat3 {
        &self * &rhs
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.m.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "{},{},{}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_permutations() {
        assert!(Mat3::identity().det().is_one());
        let swap = Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(swap.det(), DRoot2::from_int(-1));
        assert_eq!(
            swap.check_special_orthogonal(),
            Err(Error::NotSpecial("(-1,0)/s2^0".into()))
        );
        let not_orth = Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(not_orth.check_special_orthogonal(), Err(Error::NotOrthogonal));
    }
}
