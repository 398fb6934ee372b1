use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::{bloch, Gate, Mat2, Mat3};
use crate::error::{Error, Result};

pub const CLIFFORD_ORDER: usize = 192;

/// A single-qubit Clifford operator in the canonical form `E^a X^b S^c ω^d`
/// with `a < 3`, `b < 2`, `c < 4`, `d < 8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordElt {
    a: u8,
    b: u8,
    c: u8,
    d: u8,
}

struct Tables {
    unitaries: Vec<Mat2>,
    lookup: HashMap<Mat2, u8>,
    mul: Vec<[u8; CLIFFORD_ORDER]>,
    inv: [u8; CLIFFORD_ORDER],
    blochs: Vec<Mat3>,
    bloch_lookup: HashMap<Mat3, u8>,
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(Tables::build)
}

impl Tables {
    fn build() -> Tables {
        let unitaries: Vec<Mat2> = (0..CLIFFORD_ORDER as u8)
            .map(|i| {
                let c = CliffordElt::from_index(i);
                c.gates()
                    .iter()
                    .fold(Mat2::identity(), |acc, g| &acc * g.unitary())
            })
            .collect();
        let lookup: HashMap<Mat2, u8> = unitaries
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i as u8))
            .collect();
        assert_eq!(lookup.len(), CLIFFORD_ORDER, "canonical Clifford forms must be distinct");

        // Right multiplication by each canonical generator; products then
        // follow by walking the generator word of the right factor.
        let gens = [Gate::E, Gate::X, Gate::S, Gate::W];
        let step: Vec<[u8; 4]> = unitaries
            .iter()
            .map(|u| gens.map(|g| lookup[&(u * g.unitary())]))
            .collect();
        let mul: Vec<[u8; CLIFFORD_ORDER]> = (0..CLIFFORD_ORDER)
            .map(|i| {
                std::array::from_fn(|j| {
                    let rhs = CliffordElt::from_index(j as u8);
                    let counts = [rhs.a, rhs.b, rhs.c, rhs.d];
                    let mut cur = i as u8;
                    for (g, &n) in counts.iter().enumerate() {
                        for _ in 0..n {
                            cur = step[cur as usize][g];
                        }
                    }
                    cur
                })
            })
            .collect();
        let inv = std::array::from_fn(|i| {
            (0..CLIFFORD_ORDER as u8)
                .find(|&j| mul[i][j as usize] == 0)
                .expect("group element has an inverse")
        });
        let blochs: Vec<Mat3> = unitaries.iter().map(bloch).collect();
        let bloch_lookup = blochs
            .iter()
            .enumerate()
            .filter(|(i, _)| i % 8 == 0)
            .map(|(i, m)| (m.clone(), i as u8))
            .collect();
        Tables {
            unitaries,
            lookup,
            mul,
            inv,
            blochs,
            bloch_lookup,
        }
    }
}

impl CliffordElt {
    pub const IDENTITY: CliffordElt = CliffordElt { a: 0, b: 0, c: 0, d: 0 };

    pub fn new(a: u8, b: u8, c: u8, d: u8) -> Result<Self> {
        if a >= 3 || b >= 2 || c >= 4 || d >= 8 {
            return Err(Error::Parse(format!(
                "Clifford exponents ({a},{b},{c},{d}) out of range"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn from_index(i: u8) -> Self {
        assert!((i as usize) < CLIFFORD_ORDER);
        Self {
            a: i / 64,
            b: (i / 32) % 2,
            c: (i / 8) % 4,
            d: i % 8,
        }
    }

    pub fn index(self) -> u8 {
        ((self.a * 2 + self.b) * 4 + self.c) * 8 + self.d
    }

    pub fn exponents(self) -> (u8, u8, u8, u8) {
        (self.a, self.b, self.c, self.d)
    }

    pub fn all() -> impl Iterator<Item = CliffordElt> {
        (0..CLIFFORD_ORDER as u8).map(CliffordElt::from_index)
    }

    /// The canonical gate word `E^a X^b S^c W^d`.
    pub fn gates(self) -> Vec<Gate> {
        let mut out = Vec::with_capacity(13);
        for (g, n) in [(Gate::E, self.a), (Gate::X, self.b), (Gate::S, self.c), (Gate::W, self.d)] {
            out.extend(std::iter::repeat_n(g, n as usize));
        }
        out
    }

    pub fn unitary(self) -> &'static Mat2 {
        &tables().unitaries[self.index() as usize]
    }

    pub fn bloch(self) -> &'static Mat3 {
        &tables().blochs[self.index() as usize]
    }

    pub fn inv(self) -> CliffordElt {
        Self::from_index(tables().inv[self.index() as usize])
    }

    /// Exact lookup among the 192 Clifford matrices.
    pub fn from_unitary(u: &Mat2) -> Result<CliffordElt> {
        tables()
            .lookup
            .get(u)
            .map(|&i| Self::from_index(i))
            .ok_or(Error::NotClifford)
    }

    /// The Clifford with `d = 0` whose Bloch rotation is `v`.
    pub fn from_bloch(v: &Mat3) -> Result<CliffordElt> {
        tables()
            .bloch_lookup
            .get(v)
            .map(|&i| Self::from_index(i))
            .ok_or(Error::NotClifford)
    }

    /// `None` for `T`.
    pub fn from_gate(g: Gate) -> Option<CliffordElt> {
        static GATES: OnceLock<Vec<Option<CliffordElt>>> = OnceLock::new();
        GATES.get_or_init(|| {
            Gate::ALL
                .iter()
                .map(|g| Self::from_unitary(g.unitary()).ok())
                .collect()
        })[g as usize]
    }

    /// Clifford for a word over the Clifford gate symbols.
    pub fn from_word(word: &str) -> Result<CliffordElt> {
        Gate::parse_word(word)?
            .into_iter()
            .try_fold(Self::IDENTITY, |acc, g| {
                Self::from_gate(g)
                    .map(|c| acc * c)
                    .ok_or_else(|| Error::Parse(format!("{g} is not a Clifford gate")))
            })
    }

    /// Membership in the 64-element subgroup generated by S, X and ω.
    pub fn in_s(self) -> bool {
        self.a == 0
    }

    /// Multiplies by the global phase `ω^l`.
    pub fn with_phase(self, l: u8) -> CliffordElt {
        Self {
            d: (self.d + l) % 8,
            ..self
        }
    }
}

impl Default for CliffordElt {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for CliffordElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Accepts either the exponent tuple `a,b,c,d` or a Clifford gate word
/// (`I` denotes the identity).
impl FromStr for CliffordElt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "I" {
            return Ok(Self::IDENTITY);
        }
        if s.contains(',') {
            let parts = s
                .split(',')
                .map(|p| p.parse::<u8>().map_err(|_| Error::Parse(format!("bad exponent {p:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let [a, b, c, d]: [u8; 4] = parts
                .try_into()
                .map_err(|_| Error::Parse("Clifford tuple needs four exponents".into()))?;
            return Self::new(a, b, c, d);
        }
        Self::from_word(&s)
    }
}

impl std::ops::Mul for CliffordElt {
    type Output = CliffordElt;

    fn mul(self, rhs: CliffordElt) -> CliffordElt {
        Self::from_index(tables().mul[self.index() as usize][rhs.index() as usize])
    }
}

/// All 192 Clifford operators in index order.
pub fn enumerate_cliffords() -> Vec<CliffordElt> {
    CliffordElt::all().collect()
}

/// The 24 distinct Bloch-sphere Clifford rotations.
pub fn enumerate_bloch_cliffords() -> Vec<Mat3> {
    CliffordElt::all()
        .filter(|c| c.d == 0)
        .map(|c| c.bloch().clone())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn group_orders() {
        let unitaries: HashSet<&Mat2> = CliffordElt::all().map(|c| c.unitary()).collect();
        assert_eq!(unitaries.len(), 192);
        let blochs: HashSet<Mat3> = enumerate_bloch_cliffords().into_iter().collect();
        assert_eq!(blochs.len(), 24);
        assert!(blochs.iter().all(Mat3::has_unit_entries));
        assert_eq!(CliffordElt::all().filter(|c| c.in_s()).count(), 64);
    }

    #[test]
    fn identity_and_lookup() {
        assert!(CliffordElt::IDENTITY.unitary().is_identity());
        let h = CliffordElt::from_unitary(Gate::H.unitary()).unwrap();
        let matches = CliffordElt::all().filter(|c| c.unitary() == Gate::H.unitary()).count();
        assert_eq!(matches, 1);
        assert!(!h.in_s());
        assert_eq!(CliffordElt::from_unitary(Gate::T.unitary()), Err(Error::NotClifford));
        assert!(CliffordElt::from_gate(Gate::S).unwrap().in_s());
        assert_eq!(CliffordElt::from_gate(Gate::T), None);
    }

    #[test]
    fn multiplication_matches_matrices() {
        for x in CliffordElt::all().step_by(7) {
            for y in CliffordElt::all().step_by(5) {
                assert_eq!((x * y).unitary(), &(x.unitary() * y.unitary()));
            }
            assert_eq!(x * x.inv(), CliffordElt::IDENTITY);
        }
    }

    #[test]
    fn parse_tuple_and_word() {
        assert_eq!("0,0,1,0".parse::<CliffordElt>().unwrap(), CliffordElt::from_gate(Gate::S).unwrap());
        assert_eq!("I".parse::<CliffordElt>().unwrap(), CliffordElt::IDENTITY);
        assert_eq!("SS".parse::<CliffordElt>().unwrap(), CliffordElt::from_gate(Gate::Z).unwrap());
        assert!("3,0,0,0".parse::<CliffordElt>().is_err());
        assert!("T".parse::<CliffordElt>().is_err());
        for c in CliffordElt::all() {
            assert_eq!(c.to_string().parse::<CliffordElt>().unwrap(), c);
        }
    }

    #[test]
    fn bloch_lookup_gives_phase_free_lift() {
        for c in CliffordElt::all() {
            let lift = CliffordElt::from_bloch(c.bloch()).unwrap();
            assert_eq!(lift, c.with_phase(8 - c.d));
        }
    }
}
