use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::family::EtSyllable;
use super::form::split_form_text;
use super::ETForm;
use crate::error::{Error, Result};
use crate::matrix::{CliffordElt, Gate, Mat2};

/// Rotation axis of a 45° `T`-type rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    /// Power `p` of `E` with `Eᵖ T = T_axis Eᵖ`: `z` for 0, `x` for 1, `y` for 2.
    fn from_e_power(p: u8) -> Axis {
        match p % 3 {
            0 => Axis::Z,
            1 => Axis::X,
            _ => Axis::Y,
        }
    }

    fn e_power(self) -> u8 {
        match self {
            Axis::Z => 0,
            Axis::X => 1,
            Axis::Y => 2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Axis::X => "Tx",
            Axis::Y => "Ty",
            Axis::Z => "Tz",
        }
    }

    /// `T_x = E T E²`, `T_y = E² T E`, `T_z = T`.
    pub fn gates(self) -> &'static [Gate] {
        match self {
            Axis::X => &[Gate::E, Gate::T, Gate::E, Gate::E],
            Axis::Y => &[Gate::E, Gate::E, Gate::T, Gate::E],
            Axis::Z => &[Gate::T],
        }
    }

    pub fn unitary(self) -> &'static Mat2 {
        static MATS: OnceLock<[Mat2; 3]> = OnceLock::new();
        let mats = MATS.get_or_init(|| {
            [Axis::X, Axis::Y, Axis::Z].map(|a| super::eval_word(a.gates()))
        });
        &mats[self as usize]
    }
}

/// A sequence of `T_x`, `T_y`, `T_z` rotations with no two adjacent axes
/// equal, followed by a Clifford.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XYZForm {
    axes: Vec<Axis>,
    tail: CliffordElt,
}

fn e_power(p: u8) -> CliffordElt {
    CliffordElt::new(p % 3, 0, 0, 0).expect("in range")
}

impl XYZForm {
    pub fn new(axes: Vec<Axis>, tail: CliffordElt) -> Result<Self> {
        if let Some(w) = axes.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidForm(format!("adjacent repeated axis {:?}", w[0])));
        }
        Ok(Self { axes, tail })
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn tail(&self) -> CliffordElt {
        self.tail
    }

    pub fn t_count(&self) -> usize {
        self.axes.len()
    }

    /// Rewrites an E-T form left to right, commuting the pending power of
    /// `E` past each `T` (`ET_x = T_yE`, `ET_y = T_zE`, `ET_z = T_xE`).
    pub fn from_et(e: &ETForm) -> Self {
        let mut pending = 0u8;
        let mut axes = Vec::with_capacity(e.t_count());
        if e.lead_t() {
            axes.push(Axis::Z);
        }
        for &s in e.syllables() {
            pending += match s {
                EtSyllable::ET => 1,
                EtSyllable::E2T => 2,
            };
            pending %= 3;
            axes.push(Axis::from_e_power(pending));
        }
        Self {
            axes,
            tail: e_power(pending) * e.tail(),
        }
    }

    pub fn to_et(&self) -> ETForm {
        let mut pending = 0u8;
        let mut lead_t = false;
        let mut syllables = Vec::with_capacity(self.axes.len());
        for (i, axis) in self.axes.iter().enumerate() {
            let target = axis.e_power();
            if i == 0 && *axis == Axis::Z {
                lead_t = true;
                continue;
            }
            syllables.push(match (target + 3 - pending) % 3 {
                1 => EtSyllable::ET,
                2 => EtSyllable::E2T,
                _ => unreachable!("adjacent axes differ"),
            });
            pending = target;
        }
        ETForm::new(lead_t, syllables, e_power(3 - pending) * self.tail)
    }

    pub fn gates(&self) -> Vec<Gate> {
        let mut out: Vec<Gate> = self.axes.iter().flat_map(|a| a.gates().iter().copied()).collect();
        out.extend(self.tail.gates());
        out
    }

    pub fn eval(&self) -> Mat2 {
        let acc = self
            .axes
            .iter()
            .fold(Mat2::identity(), |acc, a| &acc * a.unitary());
        &acc * self.tail.unitary()
    }
}

impl fmt::Display for XYZForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.axes {
            write!(f, "{}.", a.name())?;
        }
        write!(f, "[C:{}]", self.tail)
    }
}

impl FromStr for XYZForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tokens, tail) = split_form_text(s)?;
        let axes = tokens
            .iter()
            .map(|t| match t.as_str() {
                "Tx" => Ok(Axis::X),
                "Ty" => Ok(Axis::Y),
                "Tz" => Ok(Axis::Z),
                other => Err(Error::Parse(format!("unexpected axis {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(axes, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::MAForm;

    #[test]
    fn axis_rotations_commute_with_e() {
        let e = Gate::E.unitary();
        assert_eq!(e * Axis::X.unitary(), Axis::Y.unitary() * e);
        assert_eq!(e * Axis::Y.unitary(), Axis::Z.unitary() * e);
        assert_eq!(e * Axis::Z.unitary(), Axis::X.unitary() * e);
    }

    #[test]
    fn worked_example() {
        // T·ET·ET·E²T·(E C) with C = S.
        let c = CliffordElt::from_gate(Gate::S).unwrap();
        let tail = e_power(1) * c;
        let et = ETForm::new(true, vec![EtSyllable::ET, EtSyllable::ET, EtSyllable::E2T], tail);
        let xyz = XYZForm::from_et(&et);
        assert_eq!(xyz.axes(), &[Axis::Z, Axis::X, Axis::Y, Axis::X]);
        assert_eq!(xyz.tail(), e_power(2) * c);
        assert_eq!(xyz.eval(), et.eval());
        assert_eq!(xyz.to_et(), et);
    }

    #[test]
    fn tst_has_no_axes() {
        let xyz = MAForm::normalize_word("TST").unwrap().to_xyz();
        assert!(xyz.axes().is_empty());
        assert_eq!(xyz.tail(), CliffordElt::from_gate(Gate::Z).unwrap());
    }

    #[test]
    fn rejects_repeated_axes() {
        assert!(XYZForm::new(vec![Axis::X, Axis::X], CliffordElt::IDENTITY).is_err());
        assert!("Tx.Tx.[C:I]".parse::<XYZForm>().is_err());
        let f: XYZForm = "Tz.Tx.[C:0,0,0,0]".parse().unwrap();
        assert_eq!(f.to_string(), "Tz.Tx.[C:0,0,0,0]");
    }
}
