use std::fmt;
use std::sync::OnceLock;

use super::Mat2;
use crate::error::{Error, Result};
use crate::rings::DOmega;

/// A single-qubit gate symbol. `W` is the scalar ω and `E = HS³ω³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gate {
    H,
    S,
    T,
    X,
    Y,
    Z,
    W,
    E,
}

impl Gate {
    pub const ALL: [Gate; 8] = [
        Gate::H,
        Gate::S,
        Gate::T,
        Gate::X,
        Gate::Y,
        Gate::Z,
        Gate::W,
        Gate::E,
    ];

    pub fn symbol(self) -> char {
        match self {
            Gate::H => 'H',
            Gate::S => 'S',
            Gate::T => 'T',
            Gate::X => 'X',
            Gate::Y => 'Y',
            Gate::Z => 'Z',
            Gate::W => 'W',
            Gate::E => 'E',
        }
    }

    pub fn from_symbol(c: char) -> Result<Gate> {
        Gate::ALL
            .into_iter()
            .find(|g| g.symbol() == c)
            .ok_or_else(|| Error::Parse(format!("unknown gate symbol {c:?}")))
    }

    /// Parses a gate word; the leftmost symbol is the leftmost matrix
    /// factor. Whitespace is ignored and the empty word is the identity.
    pub fn parse_word(word: &str) -> Result<Vec<Gate>> {
        word.chars()
            .filter(|c| !c.is_whitespace())
            .map(Gate::from_symbol)
            .collect()
    }

    pub fn is_clifford(self) -> bool {
        self != Gate::T
    }

    pub fn unitary(self) -> &'static Mat2 {
        static TABLE: OnceLock<Vec<Mat2>> = OnceLock::new();
        let table = TABLE.get_or_init(|| Gate::ALL.iter().map(|g| g.build_unitary()).collect());
        &table[self as usize]
    }

    fn build_unitary(self) -> Mat2 {
        let z = DOmega::zero;
        let one = DOmega::one;
        let w = DOmega::omega_pow;
        match self {
            Gate::H => {
                let r = DOmega::inv_sqrt2();
                Mat2::new([[r.clone(), r.clone()], [r.clone(), -r]])
            }
            Gate::S => Mat2::new([[one(), z()], [z(), w(2)]]),
            Gate::T => Mat2::new([[one(), z()], [z(), w(1)]]),
            Gate::X => Mat2::new([[z(), one()], [one(), z()]]),
            Gate::Y => Mat2::new([[z(), w(6)], [w(2), z()]]),
            Gate::Z => Mat2::new([[one(), z()], [z(), DOmega::from_int(-1)]]),
            Gate::W => Mat2::scalar(w(1)),
            Gate::E => {
                let h = Gate::H.build_unitary();
                let s = Gate::S.build_unitary();
                &(&(&(&h * &s) * &s) * &s) * &Mat2::scalar(w(3))
            }
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Formats a gate sequence as a word.
pub fn word_string(gates: &[Gate]) -> String {
    gates.iter().map(|g| g.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(entries: [[&str; 2]; 2]) -> Mat2 {
        Mat2::new(entries.map(|row| row.map(|e| e.parse().unwrap())))
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(
            Gate::H.unitary(),
            &m([["(0,0,0,1)/s2^1", "(0,0,0,1)/s2^1"], ["(0,0,0,1)/s2^1", "(0,0,0,-1)/s2^1"]])
        );
        assert_eq!(Gate::T.unitary(), &m([["1", "0"], ["0", "(0,0,1,0)"]]));
        // (1/2)[[-1+i, 1+i], [-1+i, -1-i]]
        assert_eq!(
            Gate::E.unitary(),
            &m([
                ["(0,1,0,-1)/s2^2", "(0,1,0,1)/s2^2"],
                ["(0,1,0,-1)/s2^2", "(0,-1,0,-1)/s2^2"]
            ])
        );
    }

    #[test]
    fn products_of_generators() {
        let t = Gate::T.unitary();
        assert_eq!(&(t * t), Gate::S.unitary());
        let h = Gate::H.unitary();
        assert_eq!(h * h, Mat2::identity());
        let e = Gate::E.unitary();
        assert_eq!(&(e * e) * e, Mat2::identity());
        for g in Gate::ALL {
            assert!(g.unitary().is_unitary(), "{g}");
        }
    }

    #[test]
    fn parses_words() {
        assert_eq!(Gate::parse_word("TH S").unwrap(), vec![Gate::T, Gate::H, Gate::S]);
        assert!(Gate::parse_word("").unwrap().is_empty());
        assert!(matches!(Gate::parse_word("THQ"), Err(Error::Parse(_))));
    }
}
