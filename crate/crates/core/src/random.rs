//! Seeded random generation of normal forms and gate words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::{CliffordElt, Gate};
use crate::normal::{MAForm, MaSyllable};

/// A deterministic generator for a given seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random normal form with T-count exactly `t`.
///
/// There are `3 · 2^(t-1) · 192` such forms for `t ≥ 1`: a third of them
/// start with a bare `T`.
pub fn random_form<R: Rng + ?Sized>(rng: &mut R, t: usize) -> MAForm {
    let lead_t = t > 0 && rng.gen_ratio(1, 3);
    let n = t - usize::from(lead_t);
    let syllables = (0..n)
        .map(|_| if rng.gen() { MaSyllable::HT } else { MaSyllable::SHT })
        .collect();
    MAForm::new(lead_t, syllables, random_clifford(rng))
}

/// A random normal form whose T-count is uniform in `0..=max_t`.
pub fn random_form_upto<R: Rng + ?Sized>(rng: &mut R, max_t: usize) -> MAForm {
    let t = rng.gen_range(0..=max_t);
    random_form(rng, t)
}

pub fn random_clifford<R: Rng + ?Sized>(rng: &mut R) -> CliffordElt {
    CliffordElt::from_index(rng.gen_range(0..192u8))
}

/// A random word over `H, S, T, X, Y, Z, W, E` of length `len`, with `T`
/// drawn about a third of the time.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Gate> {
    const OTHERS: [Gate; 7] = [Gate::H, Gate::S, Gate::X, Gate::Y, Gate::Z, Gate::W, Gate::E];
    (0..len)
        .map(|_| {
            if rng.gen_ratio(1, 3) {
                Gate::T
            } else {
                OTHERS[rng.gen_range(0..OTHERS.len())]
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a = random_form(&mut seeded(7), 10);
        let b = random_form(&mut seeded(7), 10);
        assert_eq!(a, b);
        assert_eq!(a.t_count(), 10);
        assert_eq!(random_word(&mut seeded(1), 50), random_word(&mut seeded(1), 50));
    }

    #[test]
    fn generated_forms_are_fixpoints() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            let m = random_form_upto(&mut rng, 12);
            assert_eq!(MAForm::normalize(&m.gates()), m);
        }
    }
}
