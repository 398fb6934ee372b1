//! Derivation of the `T`-push tables from exact matrices.
//!
//! For every last element `L` of a form (nothing, the leading `T`, or one
//! of the two syllables) and every tail `C`, the product `L·C·T` must be
//! rewritten as one of
//!
//! * `L·T·C'` with a new leading `T` (only when `L` is nothing),
//! * `L·(hᵢT)·C'` with an appended syllable,
//! * `C'` with `L` removed,
//!
//! where `C'` is Clifford. Each candidate is tested by an exact lookup of
//! `C'` among the 192 Clifford matrices; exactly one must succeed. The
//! shipped tables in `push_tables.rs` are the output of this routine.

use super::family::SyllableFamily;
use super::form::TPush;
use crate::matrix::{CliffordElt, Gate, Mat2};

pub fn derive_t_push_table<F: SyllableFamily>() -> [[u16; 192]; 4] {
    let t = Gate::T.unitary();
    let t_inv = t.adjoint();
    let syllables: Vec<Mat2> = F::data().heads.iter().map(|h| h.unitary() * t).collect();
    let lasts = [
        None,
        Some(t.clone()),
        Some(syllables[0].clone()),
        Some(syllables[1].clone()),
    ];

    let mut table = [[0u16; 192]; 4];
    for (state, last) in lasts.iter().enumerate() {
        for c in CliffordElt::all() {
            let ct = c.unitary() * t;
            let mut found = Vec::new();
            if last.is_none() {
                if let Ok(tail) = CliffordElt::from_unitary(&(&t_inv * &ct)) {
                    found.push(TPush::SetLead(tail));
                }
            }
            for (i, syl) in syllables.iter().enumerate() {
                if let Ok(tail) = CliffordElt::from_unitary(&(&syl.adjoint() * &ct)) {
                    found.push(TPush::Append(i, tail));
                }
            }
            if let Some(l) = last {
                if let Ok(tail) = CliffordElt::from_unitary(&(l * &ct)) {
                    found.push(TPush::Pop(tail));
                }
            }
            assert_eq!(
                found.len(),
                1,
                "{} state {state} tail {c}: successors {found:?}",
                F::NAME
            );
            table[state][c.index() as usize] = found[0].encode();
        }
    }
    table
}

/// Renders a table as Rust source for `push_tables.rs`.
pub fn render_table(name: &str, table: &[[u16; 192]; 4]) -> String {
    let mut out = format!("pub(crate) static {name}: [[u16; 192]; 4] = [\n");
    for row in table {
        out.push_str("    [\n");
        for chunk in row.chunks(12) {
            let cells: Vec<String> = chunk.iter().map(|v| format!("0x{v:04x}")).collect();
            out.push_str(&format!("        {},\n", cells.join(", ")));
        }
        out.push_str("    ],\n");
    }
    out.push_str("];\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::{BocharovSvore, ETFamily, MatsumotoAmano};

    #[test]
    fn shipped_tables_match_oracle_derivation() {
        assert_eq!(&derive_t_push_table::<MatsumotoAmano>(), MatsumotoAmano::t_push_table());
        assert_eq!(&derive_t_push_table::<ETFamily>(), ETFamily::t_push_table());
        assert_eq!(&derive_t_push_table::<BocharovSvore>(), BocharovSvore::t_push_table());
    }

    #[test]
    fn lead_t_only_from_empty_form() {
        let table = MatsumotoAmano::t_push_table();
        for (state, row) in table.iter().enumerate() {
            for &code in row {
                if matches!(TPush::decode(code), TPush::SetLead(_)) {
                    assert_eq!(state, 0);
                }
            }
        }
    }
}
