use std::fmt;
use std::marker::PhantomData;
use std::str::FromStr;

use super::family::{MaSyllable, MatsumotoAmano, SyllableFamily};
use super::{BSForm, ETForm, XYZForm};
use crate::error::{Error, Result};
use crate::matrix::{word_string, CliffordElt, Gate, Mat2};

/// One entry of a `T`-push table: how a normal form changes when it is
/// right-multiplied by `T`, together with the new tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TPush {
    /// The form was empty; it becomes a leading `T`.
    SetLead(CliffordElt),
    /// A syllable (by index) is appended.
    Append(usize, CliffordElt),
    /// The last element (leading `T` or syllable) is removed.
    Pop(CliffordElt),
}

impl TPush {
    pub fn encode(self) -> u16 {
        let (action, tail) = match self {
            TPush::SetLead(c) => (0, c),
            TPush::Append(i, c) => (1 + i as u16, c),
            TPush::Pop(c) => (3, c),
        };
        action << 8 | tail.index() as u16
    }

    pub fn decode(code: u16) -> TPush {
        let tail = CliffordElt::from_index((code & 0xff) as u8);
        match code >> 8 {
            0 => TPush::SetLead(tail),
            1 => TPush::Append(0, tail),
            2 => TPush::Append(1, tail),
            3 => TPush::Pop(tail),
            other => panic!("invalid T-push action {other}"),
        }
    }

    pub fn tail(self) -> CliffordElt {
        match self {
            TPush::SetLead(c) | TPush::Append(_, c) | TPush::Pop(c) => c,
        }
    }
}

/// A normal form `(T|ε)(h₁T|h₂T)*C` over the syllable family `F`.
///
/// Syllables are stored in matrix-product order (leftmost first). Every
/// combination of fields is a valid normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm<F: SyllableFamily> {
    lead_t: bool,
    syllables: Vec<F::Syllable>,
    tail: CliffordElt,
    family: PhantomData<F>,
}

impl<F: SyllableFamily> Default for NormalForm<F> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<F: SyllableFamily> NormalForm<F> {
    pub fn new(lead_t: bool, syllables: Vec<F::Syllable>, tail: CliffordElt) -> Self {
        Self {
            lead_t,
            syllables,
            tail,
            family: PhantomData,
        }
    }

    pub fn identity() -> Self {
        Self::from_clifford(CliffordElt::IDENTITY)
    }

    pub fn from_clifford(tail: CliffordElt) -> Self {
        Self::new(false, Vec::new(), tail)
    }

    pub fn lead_t(&self) -> bool {
        self.lead_t
    }

    pub fn syllables(&self) -> &[F::Syllable] {
        &self.syllables
    }

    pub fn tail(&self) -> CliffordElt {
        self.tail
    }

    pub fn t_count(&self) -> usize {
        self.lead_t as usize + self.syllables.len()
    }

    /// Row index into the `T`-push table: 0 empty, 1 leading `T` only,
    /// 2 + i when the last syllable has index i.
    fn last_state(&self) -> usize {
        match self.syllables.last() {
            Some(&s) => 2 + F::syllable_index(s),
            None => self.lead_t as usize,
        }
    }

    /// Right-multiplies by one gate in constant time.
    pub fn push(&mut self, g: Gate) {
        match CliffordElt::from_gate(g) {
            Some(c) => self.tail = self.tail * c,
            None => self.push_t(),
        }
    }

    fn push_t(&mut self) {
        let code = F::t_push_table()[self.last_state()][self.tail.index() as usize];
        let step = TPush::decode(code);
        match step {
            TPush::SetLead(_) => self.lead_t = true,
            TPush::Append(i, _) => self.syllables.push(F::syllable(i)),
            TPush::Pop(_) => {
                if self.syllables.pop().is_none() {
                    self.lead_t = false;
                }
            }
        }
        self.tail = step.tail();
    }

    pub fn pushed(mut self, g: Gate) -> Self {
        self.push(g);
        self
    }

    /// Normal form of a gate sequence, computed left to right.
    pub fn normalize(gates: &[Gate]) -> Self {
        let mut form = Self::identity();
        for &g in gates {
            form.push(g);
        }
        form
    }

    pub fn normalize_word(word: &str) -> Result<Self> {
        Ok(Self::normalize(&Gate::parse_word(word)?))
    }

    /// The gate sequence spelled out by the form.
    pub fn gates(&self) -> Vec<Gate> {
        let data = F::data();
        let mut out = Vec::with_capacity(3 * self.syllables.len() + 14);
        if self.lead_t {
            out.push(Gate::T);
        }
        for &s in &self.syllables {
            out.extend_from_slice(&data.syllable_gates[F::syllable_index(s)]);
        }
        out.extend(self.tail.gates());
        out
    }

    pub fn word(&self) -> String {
        word_string(&self.gates())
    }

    /// Exact unitary of the form.
    pub fn eval(&self) -> Mat2 {
        let data = F::data();
        let mut acc = if self.lead_t {
            Gate::T.unitary().clone()
        } else {
            Mat2::identity()
        };
        for &s in &self.syllables {
            acc = &acc * &data.syllable_mats[F::syllable_index(s)];
        }
        &acc * self.tail.unitary()
    }

    /// The equivalent normal form over another syllable family.
    pub fn convert<G: SyllableFamily>(&self) -> NormalForm<G> {
        let mut out = NormalForm::<G>::identity();
        if self.lead_t {
            out.push(Gate::T);
        }
        let data = F::data();
        for &s in &self.syllables {
            for &g in &data.syllable_gates[F::syllable_index(s)] {
                out.push(g);
            }
        }
        out.tail = out.tail * self.tail;
        out
    }
}

impl<F: SyllableFamily> fmt::Display for NormalForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lead_t {
            write!(f, "T.")?;
        }
        for &s in &self.syllables {
            write!(f, "{}.", F::SYLLABLE_NAMES[F::syllable_index(s)])?;
        }
        write!(f, "[C:{}]", self.tail)
    }
}

/// Splits `prefix.[C:tail]` into its dot-separated tokens and the tail.
pub(crate) fn split_form_text(s: &str) -> Result<(Vec<String>, CliffordElt)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let start = s
        .find("[C:")
        .ok_or_else(|| Error::Parse(format!("missing [C:...] tail in {s:?}")))?;
    let tail_text = s[start + 3..]
        .strip_suffix(']')
        .ok_or_else(|| Error::Parse("tail must end with ']'".into()))?;
    let tail: CliffordElt = tail_text.parse()?;
    let prefix = &s[..start];
    if prefix.is_empty() {
        return Ok((Vec::new(), tail));
    }
    let body = prefix
        .strip_suffix('.')
        .ok_or_else(|| Error::Parse("syllables must be separated from the tail by '.'".into()))?;
    Ok((body.split('.').map(str::to_owned).collect(), tail))
}

impl<F: SyllableFamily> FromStr for NormalForm<F> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tokens, tail) = split_form_text(s)?;
        let mut lead_t = false;
        let mut syllables = Vec::with_capacity(tokens.len());
        for (i, tok) in tokens.iter().enumerate() {
            if let Some(j) = F::SYLLABLE_NAMES.iter().position(|n| n == tok) {
                syllables.push(F::syllable(j));
            } else if i == 0 && tok == "T" {
                lead_t = true;
            } else {
                return Err(Error::Parse(format!(
                    "unexpected syllable {tok:?} in {} normal form",
                    F::NAME
                )));
            }
        }
        Ok(Self::new(lead_t, syllables, tail))
    }
}

/// Leftmost factor of a Clifford in the decomposition `(ε|H|SH)·s`, `s ∈ 𝒮`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaHead {
    Empty,
    H,
    SH,
}

impl MaHead {
    pub fn word(self) -> &'static str {
        match self {
            MaHead::Empty => "",
            MaHead::H => "H",
            MaHead::SH => "SH",
        }
    }
}

/// The unique decomposition `c = head · s` with `head ∈ {ε, H, SH}`, `s ∈ 𝒮`.
pub fn split_clifford(c: CliffordElt) -> (MaHead, CliffordElt) {
    let (j, s) = MatsumotoAmano::data().split[c.index() as usize];
    let head = match j {
        0 => MaHead::Empty,
        1 => MaHead::H,
        _ => MaHead::SH,
    };
    (head, s)
}

/// A Matsumoto-Amano form with its tail split as `(ε|H|SH)·s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MAFormSplit {
    pub lead_t: bool,
    pub syllables: Vec<MaSyllable>,
    pub head: MaHead,
    pub s: CliffordElt,
}

impl MAFormSplit {
    pub fn t_count(&self) -> usize {
        self.lead_t as usize + self.syllables.len()
    }

    pub fn h_count(&self) -> usize {
        self.syllables.len() + (self.head != MaHead::Empty) as usize
    }
}

impl fmt::Display for MAFormSplit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lead_t {
            write!(f, "T.")?;
        }
        for &s in &self.syllables {
            write!(f, "{s:?}.")?;
        }
        if self.head != MaHead::Empty {
            write!(f, "{}.", self.head.word())?;
        }
        write!(f, "[C:{}]", self.s)
    }
}

impl NormalForm<MatsumotoAmano> {
    pub fn split(&self) -> MAFormSplit {
        let (head, s) = split_clifford(self.tail);
        MAFormSplit {
            lead_t: self.lead_t,
            syllables: self.syllables.clone(),
            head,
            s,
        }
    }

    pub fn h_count(&self) -> usize {
        self.split().h_count()
    }

    pub fn to_et(&self) -> ETForm {
        self.convert()
    }

    pub fn from_et(e: &ETForm) -> Self {
        e.convert()
    }

    pub fn to_bs(&self) -> BSForm {
        self.convert()
    }

    pub fn from_bs(b: &BSForm) -> Self {
        b.convert()
    }

    pub fn to_xyz(&self) -> XYZForm {
        XYZForm::from_et(&self.to_et())
    }

    pub fn from_xyz(x: &XYZForm) -> Self {
        Self::from_et(&x.to_et())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::{BsSyllable, EtSyllable, MAForm};

    fn s_elt() -> CliffordElt {
        CliffordElt::from_gate(Gate::S).unwrap()
    }

    #[test]
    fn push_examples() {
        let t = MAForm::identity().pushed(Gate::T);
        assert_eq!(t, MAForm::new(true, vec![], CliffordElt::IDENTITY));
        assert_eq!(t.pushed(Gate::T), MAForm::from_clifford(s_elt()));
    }

    #[test]
    fn normalize_examples() {
        let h = CliffordElt::from_gate(Gate::H).unwrap();
        assert_eq!(MAForm::normalize_word("H").unwrap(), MAForm::from_clifford(h));
        let z = CliffordElt::from_gate(Gate::Z).unwrap();
        let tst = MAForm::normalize_word("TST").unwrap();
        assert_eq!(tst, MAForm::from_clifford(z));
        assert_eq!(tst.t_count(), 0);
        let ththt = MAForm::normalize_word("THTHT").unwrap();
        assert_eq!(
            ththt,
            MAForm::new(true, vec![MaSyllable::HT, MaSyllable::HT], CliffordElt::IDENTITY)
        );
        assert_eq!(ththt.t_count(), 3);
        assert!(MAForm::normalize_word("THQ").is_err());
    }

    #[test]
    fn counts_of_small_forms() {
        assert_eq!(MAForm::identity().t_count(), 0);
        assert_eq!(MAForm::identity().h_count(), 0);
        // H·T: syllable HT with empty head.
        let ht = MAForm::normalize_word("HT").unwrap();
        assert_eq!((ht.t_count(), ht.h_count()), (1, 1));
    }

    #[test]
    fn split_clifford_examples() {
        assert_eq!(split_clifford(CliffordElt::IDENTITY), (MaHead::Empty, CliffordElt::IDENTITY));
        let h = CliffordElt::from_gate(Gate::H).unwrap();
        assert_eq!(split_clifford(h), (MaHead::H, CliffordElt::IDENTITY));
        let sh = CliffordElt::from_word("SH").unwrap();
        assert_eq!(split_clifford(sh), (MaHead::SH, CliffordElt::IDENTITY));
    }

    #[test]
    fn display_and_parse() {
        let f = MAForm::normalize_word("THTSHT").unwrap();
        assert_eq!(f.to_string(), "T.HT.SHT.[C:0,0,0,0]");
        assert_eq!(f.to_string().parse::<MAForm>().unwrap(), f);
        assert_eq!("[C:I]".parse::<MAForm>().unwrap(), MAForm::identity());
        assert_eq!("[C:S]".parse::<MAForm>().unwrap(), MAForm::from_clifford(s_elt()));
        assert!("HT.T.[C:I]".parse::<MAForm>().is_err());
        assert!("HT.[C:I".parse::<MAForm>().is_err());
        assert!("HT[C:I]".parse::<MAForm>().is_err());
        let e = ETForm::new(true, vec![EtSyllable::E2T], CliffordElt::IDENTITY);
        assert_eq!(e.to_string(), "T.E2T.[C:0,0,0,0]");
        assert_eq!(e.to_string().parse::<ETForm>().unwrap(), e);
    }

    #[test]
    fn bs_replaces_sht_by_hsht() {
        let m = MAForm::new(false, vec![MaSyllable::SHT], CliffordElt::IDENTITY);
        let b = m.to_bs();
        let x = CliffordElt::from_gate(Gate::X).unwrap();
        assert_eq!(b, BSForm::new(false, vec![BsSyllable::HSHT], x));
        assert_eq!(b.eval(), m.eval());
        assert_eq!(MAForm::from_bs(&b), m);
    }
}
