use std::cell::Cell;
use std::fmt;
use std::ops::Mul;

use super::ResidueMat2;
use crate::error::Result;
use crate::rings::DOmega;

/// A 2×2 matrix over ℤ[ω, 1/√2], row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub(crate) m: [[DOmega; 2]; 2],
}

impl Mat2 {
    pub fn new(m: [[DOmega; 2]; 2]) -> Self {
        Self { m }
    }

    pub fn identity() -> Self {
        Self::scalar(DOmega::one())
    }

    pub fn scalar(x: DOmega) -> Self {
        Self::new([[x.clone(), DOmega::zero()], [DOmega::zero(), x]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &DOmega {
        &self.m[i][j]
    }

    pub fn entries(&self) -> &[[DOmega; 2]; 2] {
        &self.m
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self::new([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> DOmega {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn scale(&self, x: &DOmega) -> Self {
        Self::new(self.m.clone().map(|row| row.map(|e| x * &e)))
    }

    pub fn is_unitary(&self) -> bool {
        (&self.adjoint() * self).is_identity()
    }

    pub fn is_identity(&self) -> bool {
        self.m[0][0].is_one() && self.m[1][1].is_one() && self.m[0][1].is_zero() && self.m[1][0].is_zero()
    }

    /// Least denominator exponent: the maximum over the entries.
    pub fn lde(&self) -> u32 {
        self.m.iter().flatten().map(DOmega::lde).max().unwrap_or(0)
    }

    /// Componentwise `k`-residue.
    pub fn residue_mat(&self, k: u32) -> Result<ResidueMat2> {
        let r = |i: usize, j: usize| self.m[i][j].k_residue(k);
        Ok(ResidueMat2::new([[r(0, 0)?, r(0, 1)?], [r(1, 0)?, r(1, 1)?]]))
    }
}

thread_local! {
    static MUL_COUNT: Cell<u64> = const { Cell::new(0) };
}

/// Number of exact 2×2 matrix products performed on this thread so far.
pub fn mat2_mul_count() -> u64 {
    MUL_COUNT.with(Cell::get)
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        MUL_COUNT.with(|c| c.set(c.get() + 1));
        let (a, b) = (&self.m, &rhs.m);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        &self * &rhs
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "{},{};{},{}", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}
