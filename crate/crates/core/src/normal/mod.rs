//! Normal forms `(T|ε)(h₁T|h₂T)*C` for single-qubit Clifford+T operators.
//!
//! Three syllable families share one implementation: Matsumoto-Amano
//! (`HT`, `SHT`), E-T (`ET`, `E²T`) and Bocharov-Svore (`HT`, `HSHT`). In
//! each, `{I, h₁, h₂}` is a set of left coset representatives of the
//! 64-element subgroup 𝒮 = ⟨S, X, ω⟩ in the Clifford group. The
//! Tx-Ty-Tz form is derived from the E-T form.
//!
//! Normalization is streaming: gates are pushed one at a time onto a form
//! that is kept normal after every push. A Clifford gate is absorbed into
//! the tail; a `T` gate consults a 4 × 192 table indexed by the last
//! element of the form (nothing, the leading `T`, or one of the two
//! syllables) and the tail. Each entry either sets the leading `T`,
//! appends a syllable, or removes the last element, and supplies the new
//! tail. So a push touches at most the last syllable (three gate symbols)
//! and the tail, and never inspects the rest of the form.

mod derive;
mod family;
mod form;
mod push_tables;
mod word;
mod xyz;

pub use derive::{derive_t_push_table, render_table};
pub use family::{
    BocharovSvore, BsSyllable, EtSyllable, ETFamily, MaSyllable, MatsumotoAmano, SyllableFamily,
};
pub use form::{split_clifford, MAFormSplit, MaHead, NormalForm, TPush};
pub use word::{eval_word, t_count_word};
pub use xyz::{Axis, XYZForm};

pub type MAForm = NormalForm<MatsumotoAmano>;
pub type ETForm = NormalForm<ETFamily>;
pub type BSForm = NormalForm<BocharovSvore>;
