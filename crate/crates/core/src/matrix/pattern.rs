use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rings::Residue;

const COLUMN_PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// A 3×3 matrix over ℤ₂, the `k`-parity of a Bloch matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParityMat3 {
    bits: [[u8; 3]; 3],
}

impl ParityMat3 {
    pub const fn new(bits: [[u8; 3]; 3]) -> Self {
        Self { bits }
    }

    pub fn bits(&self) -> &[[u8; 3]; 3] {
        &self.bits
    }

    pub fn permute_columns(&self, perm: [usize; 3]) -> Self {
        Self::new(self.bits.map(|row| perm.map(|j| row[j])))
    }

    /// Equivalence under the right action of the Bloch Clifford group,
    /// i.e. equality up to a permutation of columns.
    pub fn sim_c(&self, other: &ParityMat3) -> bool {
        COLUMN_PERMUTATIONS
            .iter()
            .any(|&p| self.permute_columns(p) == *other)
    }
}

impl fmt::Display for ParityMat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .bits
            .iter()
            .map(|r| format!("{}{}{}", r[0], r[1], r[2]))
            .collect();
        write!(f, "{}", rows.join(","))
    }
}

/// A 2×2 matrix of residues, the `k`-residue of a unitary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueMat2 {
    entries: [[Residue; 2]; 2],
}

impl ResidueMat2 {
    pub const fn new(entries: [[Residue; 2]; 2]) -> Self {
        Self { entries }
    }

    pub const fn from_bits(bits: [[u8; 2]; 2]) -> Self {
        Self::new([
            [Residue::from_bits(bits[0][0]), Residue::from_bits(bits[0][1])],
            [Residue::from_bits(bits[1][0]), Residue::from_bits(bits[1][1])],
        ])
    }

    pub fn entries(&self) -> &[[Residue; 2]; 2] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> Residue {
        self.entries[i][j]
    }

    fn map_column(&self, j: usize, f: impl Fn(Residue) -> Residue) -> Self {
        let mut e = self.entries;
        for row in &mut e {
            row[j] = f(row[j]);
        }
        Self::new(e)
    }

    /// Right action of `ω^j`: every entry shifted by `j` positions.
    pub fn shift_all(&self, j: u32) -> Self {
        Self::new(self.entries.map(|row| row.map(|r| r.shift(j))))
    }

    /// Right action of `X`: the columns swapped.
    pub fn swap_columns(&self) -> Self {
        Self::new(self.entries.map(|[x, y]| [y, x]))
    }

    /// Right action of `S`: the second column shifted by two positions.
    pub fn shift_second_column(&self) -> Self {
        self.map_column(1, |r| r.shift(2))
    }

    /// The orbit under the 16-element right action of the subgroup
    /// generated by S, X and ω (with repetitions when stabilised).
    pub fn orbit(&self) -> impl Iterator<Item = ResidueMat2> + '_ {
        (0..16u32).map(move |i| {
            let mut m = *self;
            if i & 1 == 1 {
                m = m.swap_columns();
            }
            if i & 2 == 2 {
                m = m.shift_second_column();
            }
            m.shift_all(i >> 2)
        })
    }

    pub fn sim_s(&self, other: &ResidueMat2) -> bool {
        self.orbit().any(|m| m == *other)
    }

    pub fn is_reducible(&self) -> bool {
        self.entries.iter().flatten().all(|r| r.is_reducible())
    }
}

impl fmt::Display for ResidueMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "{},{};{},{}", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// Parses `r00,r01;r10,r11` with four-digit residues.
impl FromStr for ResidueMat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(Error::Parse(format!("residue matrix needs two rows: {s:?}")));
        }
        let mut entries = [[Residue::ZERO; 2]; 2];
        for (i, row) in rows.iter().enumerate() {
            let cols: Vec<&str> = row.split(',').collect();
            if cols.len() != 2 {
                return Err(Error::Parse(format!("residue matrix row needs two entries: {row:?}")));
            }
            for (j, c) in cols.iter().enumerate() {
                entries[i][j] = c.parse()?;
            }
        }
        Ok(Self::new(entries))
    }
}
