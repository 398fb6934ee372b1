use std::fmt::Debug;
use std::hash::Hash;
use std::sync::OnceLock;

use super::push_tables;
use crate::matrix::{CliffordElt, Gate, Mat2};

/// Tables shared by every form of one syllable family.
#[derive(Debug)]
pub struct FamilyData {
    pub(crate) heads: [CliffordElt; 2],
    pub(crate) syllable_gates: [Vec<Gate>; 2],
    pub(crate) syllable_mats: [Mat2; 2],
    /// For each Clifford `c`: `(j, s)` with `c = head_j · s`, `s ∈ 𝒮`,
    /// `j = 0` the trivial head and `j = 1, 2` the syllable heads.
    pub(crate) split: [(u8, CliffordElt); 192],
}

impl FamilyData {
    fn build(head_words: [&str; 2]) -> Self {
        let syllable_gates = head_words.map(|w| {
            let mut g = Gate::parse_word(w).expect("head words are valid");
            g.push(Gate::T);
            g
        });
        let heads = head_words.map(|w| CliffordElt::from_word(w).expect("heads are Clifford"));
        let syllable_mats = [0, 1].map(|i| heads[i].unitary() * Gate::T.unitary());
        let all_heads = [CliffordElt::IDENTITY, heads[0], heads[1]];
        let split = std::array::from_fn(|i| {
            let c = CliffordElt::from_index(i as u8);
            all_heads
                .iter()
                .enumerate()
                .find_map(|(j, h)| {
                    let s = h.inv() * c;
                    s.in_s().then_some((j as u8, s))
                })
                .expect("heads form a left transversal of S")
        });
        Self {
            heads,
            syllable_gates,
            syllable_mats,
            split,
        }
    }
}

/// A choice of two syllables `h₁T`, `h₂T` such that `{I, h₁, h₂}` is a
/// left transversal of 𝒮 in the Clifford group.
pub trait SyllableFamily: Copy + Debug + Default + Eq + Hash + 'static {
    type Syllable: Copy + Debug + Eq + Hash + 'static;

    const NAME: &'static str;
    /// Clifford words of the heads `h₁`, `h₂`.
    const HEAD_WORDS: [&'static str; 2];
    /// Printed names of the two syllables.
    const SYLLABLE_NAMES: [&'static str; 2];

    fn syllable(index: usize) -> Self::Syllable;
    fn syllable_index(s: Self::Syllable) -> usize;

    fn data() -> &'static FamilyData;
    /// The shipped `T`-push table, see [`super::TPush`].
    fn t_push_table() -> &'static [[u16; 192]; 4];
}

macro_rules! family {
    (
        $(#[$meta:meta])*
        $fam:ident, $syl:ident { $s0:ident, $s1:ident },
        $name:literal, $heads:expr, $names:expr, $table:path
    ) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
        pub struct $fam;

        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $syl {
            $s0,
            $s1,
        }

        impl SyllableFamily for $fam {
            type Syllable = $syl;
            const NAME: &'static str = $name;
            const HEAD_WORDS: [&'static str; 2] = $heads;
            const SYLLABLE_NAMES: [&'static str; 2] = $names;

            fn syllable(index: usize) -> $syl {
                match index {
                    0 => $syl::$s0,
                    1 => $syl::$s1,
                    _ => panic!("syllable index {index} out of range"),
                }
            }

            fn syllable_index(s: $syl) -> usize {
                s as usize
            }

            fn data() -> &'static FamilyData {
                static DATA: OnceLock<FamilyData> = OnceLock::new();
                DATA.get_or_init(|| FamilyData::build($heads))
            }

            fn t_push_table() -> &'static [[u16; 192]; 4] {
                &$table
            }
        }
    };
}

family!(
    /// Matsumoto-Amano syllables `HT` and `SHT`.
    MatsumotoAmano, MaSyllable { HT, SHT },
    "ma", ["H", "SH"], ["HT", "SHT"], push_tables::MA_T_PUSH
);
family!(
    /// E-T syllables `ET` and `E²T`.
    ETFamily, EtSyllable { ET, E2T },
    "et", ["E", "EE"], ["ET", "E2T"], push_tables::ET_T_PUSH
);
family!(
    /// Bocharov-Svore syllables `HT` and `HSHT`.
    BocharovSvore, BsSyllable { HT, HSHT },
    "bs", ["H", "HSH"], ["HT", "HSHT"], push_tables::BS_T_PUSH
);

#[cfg(test)]
mod tests {
    use super::*;

    fn coset_sizes<F: SyllableFamily>() -> [usize; 3] {
        let mut sizes = [0; 3];
        for (j, _) in F::data().split.iter() {
            sizes[*j as usize] += 1;
        }
        sizes
    }

    #[test]
    fn heads_split_clifford_group_evenly() {
        assert_eq!(coset_sizes::<MatsumotoAmano>(), [64; 3]);
        assert_eq!(coset_sizes::<ETFamily>(), [64; 3]);
        assert_eq!(coset_sizes::<BocharovSvore>(), [64; 3]);
    }

    #[test]
    fn split_recombines() {
        let data = MatsumotoAmano::data();
        for c in CliffordElt::all() {
            let (j, s) = data.split[c.index() as usize];
            let head = if j == 0 { CliffordElt::IDENTITY } else { data.heads[j as usize - 1] };
            assert_eq!(head * s, c);
        }
    }
}
