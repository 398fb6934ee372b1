//! Exact synthesis: from a Bloch rotation over ℤ[1/√2], or a unitary over
//! ℤ[ω, 1/√2], to its Matsumoto-Amano normal form with `O(k)` ring
//! operations, `k` the least denominator exponent of the Bloch matrix.
//!
//! While `k > 0`, the `k`-parity matrix of the current rotation equals one
//! of three patterns up to a column permutation, and the pattern names the
//! leftmost syllable. Multiplying by that syllable's inverse on the left
//! lowers `k` by exactly one. At `k = 0` the rotation is a Bloch Clifford.

use std::sync::OnceLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::{bloch, CliffordElt, Gate, Mat2, Mat3, ParityMat3};
use crate::normal::{MAForm, MaSyllable};
use crate::rings::DRoot2;

/// Parity pattern announcing a leading `T`.
pub const M_T: ParityMat3 = ParityMat3::new([[1, 1, 0], [1, 1, 0], [0, 0, 0]]);
/// Parity pattern announcing a leading `HT`.
pub const M_H: ParityMat3 = ParityMat3::new([[0, 0, 0], [1, 1, 0], [1, 1, 0]]);
/// Parity pattern announcing a leading `SHT`.
pub const M_S: ParityMat3 = ParityMat3::new([[1, 1, 0], [0, 0, 0], [1, 1, 0]]);

/// Leftmost syllable of a normal form with positive T-count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leading {
    T,
    HT,
    SHT,
}

impl Leading {
    const ALL: [Leading; 3] = [Leading::T, Leading::HT, Leading::SHT];

    pub fn pattern(self) -> ParityMat3 {
        match self {
            Leading::T => M_T,
            Leading::HT => M_H,
            Leading::SHT => M_S,
        }
    }

    /// Exact inverse of the syllable's Bloch rotation.
    fn inverse_rotation(self) -> &'static Mat3 {
        static INVS: OnceLock<[Mat3; 3]> = OnceLock::new();
        let invs = INVS.get_or_init(|| {
            let t = bloch(Gate::T.unitary()).transpose();
            let h = bloch(Gate::H.unitary()).transpose();
            let s = bloch(Gate::S.unitary()).transpose();
            let ht = &t * &h;
            let sht = &ht * &s;
            [t, ht, sht]
        });
        &invs[self as usize]
    }
}

/// The leftmost syllable determined by the `k`-parity of `v`, `k = lde(v) > 0`.
pub fn classify_parity(v: &Mat3) -> Result<Leading> {
    let k = v.lde();
    if k == 0 {
        return Err(Error::Hypothesis("k = 0, the rotation is a Clifford".into()));
    }
    classify_at(v, k)
}

fn classify_at(v: &Mat3, k: u32) -> Result<Leading> {
    let p = v.parity_mat(k)?;
    let mut hits = Leading::ALL.into_iter().filter(|l| p.sim_c(&l.pattern()));
    match (hits.next(), hits.next()) {
        (None, _) => Err(Error::NoMatch),
        (Some(l), None) => Ok(l),
        (Some(_), Some(_)) => Err(Error::Ambiguity),
    }
}

/// A synthesized form together with the number of peeling steps taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Synthesis {
    pub form: MAForm,
    pub iterations: u32,
}

/// Normal form of a special-orthogonal matrix over ℤ[1/√2]. The tail is
/// the Clifford with `d = 0` for the terminal Bloch Clifford.
pub fn synth_so3(v: &Mat3) -> Result<MAForm> {
    synth_so3_traced(v).map(|s| s.form)
}

pub fn synth_so3_traced(v: &Mat3) -> Result<Synthesis> {
    v.check_special_orthogonal()?;
    let mut cur = v.clone();
    let mut k = cur.lde();
    let mut lead_t = false;
    let mut syllables = Vec::with_capacity(k as usize);
    let mut iterations = 0;
    while k > 0 {
        let leading = classify_at(&cur, k)?;
        match leading {
            Leading::T if iterations == 0 => lead_t = true,
            // A T anywhere but first would make T·T, contradicting the drop in k.
            Leading::T => return Err(Error::NoMatch),
            Leading::HT => syllables.push(MaSyllable::HT),
            Leading::SHT => syllables.push(MaSyllable::SHT),
        }
        cur = leading.inverse_rotation() * &cur;
        let next = cur.lde();
        if next + 1 != k {
            return Err(Error::KNotDecreased(k));
        }
        k = next;
        iterations += 1;
    }
    let tail = CliffordElt::from_bloch(&cur).map_err(|_| Error::NoMatch)?;
    Ok(Synthesis {
        form: MAForm::new(lead_t, syllables, tail),
        iterations,
    })
}

/// Normal form of a unitary over ℤ[ω, 1/√2], global phase included.
pub fn synth_u2(u: &Mat2) -> Result<MAForm> {
    synth_u2_traced(u).map(|s| s.form)
}

pub fn synth_u2_traced(u: &Mat2) -> Result<Synthesis> {
    if !u.is_unitary() {
        return Err(Error::NotUnitary);
    }
    let Synthesis { form, iterations } = synth_so3_traced(&bloch(u))?;
    let phase = u * &form.eval().adjoint();
    let e = phase.entries();
    if !e[0][1].is_zero() || !e[1][0].is_zero() || e[0][0] != e[1][1] {
        return Err(Error::Phase);
    }
    let l = e[0][0].omega_exponent().ok_or(Error::Phase)?;
    let form = MAForm::new(form.lead_t(), form.syllables().to_vec(), form.tail().with_phase(l));
    Ok(Synthesis { form, iterations })
}

/// Integers `(a, b, c, d, e, f)` with `√2^k · v = (a + b√2, c + d√2, e + f√2)`.
pub fn decompose_column(v: &[DRoot2; 3], k: u32) -> Result<[BigInt; 6]> {
    let mut out: [BigInt; 6] = Default::default();
    for (i, x) in v.iter().enumerate() {
        let n = x.scaled(k)?;
        out[2 * i] = n.a;
        out[2 * i + 1] = n.b;
    }
    Ok(out)
}

/// Checks the integer dot-product identities for every pair of columns
/// and every pair of rows of an orthogonal `v` at exponent `k`: the √2
/// part `Σ (xᵢyᵢ' + xᵢ'yᵢ)` vanishes and the rational part
/// `Σ xᵢyᵢ + 2 Σ xᵢ'yᵢ'` equals `2^k δ`.
pub fn dot_product_identities_hold(v: &Mat3, k: u32) -> Result<bool> {
    let t = v.transpose();
    let cols = |m: &Mat3| -> Result<Vec<[BigInt; 6]>> {
        (0..3).map(|j| decompose_column(&m.column(j), k)).collect()
    };
    let two_k = BigInt::from(1) << k;
    for vecs in [cols(v)?, cols(&t)?] {
        for (j, x) in vecs.iter().enumerate() {
            for (l, y) in vecs.iter().enumerate() {
                let mut irr = BigInt::from(0);
                let mut rat = BigInt::from(0);
                for i in 0..3 {
                    let (a, b) = (&x[2 * i], &x[2 * i + 1]);
                    let (a2, b2) = (&y[2 * i], &y[2 * i + 1]);
                    irr += a * b2 + b * a2;
                    rat += a * a2 + ((b * b2) << 1);
                }
                let expected = if j == l { two_k.clone() } else { BigInt::from(0) };
                if irr != BigInt::from(0) || rat != expected {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normal::eval_word;

    fn bloch_word(w: &str) -> Mat3 {
        bloch(&eval_word(&Gate::parse_word(w).unwrap()))
    }

    #[test]
    fn classifies_single_syllables() {
        assert_eq!(classify_parity(&bloch_word("T")), Ok(Leading::T));
        assert_eq!(classify_parity(&bloch_word("HT")), Ok(Leading::HT));
        assert_eq!(classify_parity(&bloch_word("SHT")), Ok(Leading::SHT));
        assert_eq!(bloch_word("HT").parity_mat(1).unwrap(), M_H);
    }

    #[test]
    fn ht_bloch_matrix() {
        // (1/√2)[[0,0,√2],[-1,-1,0],[1,-1,0]]
        let r = DRoot2::new(crate::rings::ZRoot2::one(), 1);
        let z = DRoot2::zero();
        let expected = Mat3::new([
            [z.clone(), z.clone(), DRoot2::one()],
            [-r.clone(), -r.clone(), z.clone()],
            [r.clone(), -r, z],
        ]);
        assert_eq!(bloch_word("HT"), expected);
    }

    #[test]
    fn synthesizes_small_cases() {
        assert_eq!(synth_so3(&Mat3::identity()).unwrap(), MAForm::identity());
        assert_eq!(
            synth_so3(&bloch_word("T")).unwrap(),
            MAForm::new(true, vec![], CliffordElt::IDENTITY)
        );
        let w = Gate::W.unitary();
        assert_eq!(
            synth_u2(w).unwrap(),
            MAForm::from_clifford(CliffordElt::from_gate(Gate::W).unwrap())
        );
        assert_eq!(synth_u2(&Mat2::identity()).unwrap(), MAForm::identity());
    }

    #[test]
    fn precondition_errors() {
        let swap = Mat3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert!(matches!(synth_so3(&swap), Err(Error::NotSpecial(_))));
        let skew = Mat3::from_ints([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
        assert_eq!(synth_so3(&skew), Err(Error::NotOrthogonal));
        let two = Mat2::scalar(crate::rings::DOmega::from_int(2));
        assert_eq!(synth_u2(&two), Err(Error::NotUnitary));
        assert!(classify_parity(&Mat3::identity()).is_err());
    }

    #[test]
    fn column_decomposition() {
        let e1 = [DRoot2::one(), DRoot2::zero(), DRoot2::zero()];
        let d = decompose_column(&e1, 0).unwrap();
        assert_eq!(d, [1, 0, 0, 0, 0, 0].map(BigInt::from));
        let t_hat = bloch_word("T");
        let d = decompose_column(&t_hat.column(0), 1).unwrap();
        assert_eq!(d, [1, 0, 1, 0, 0, 0].map(BigInt::from));
        assert!(matches!(decompose_column(&t_hat.column(0), 0), Err(Error::Exponent { .. })));
        assert!(dot_product_identities_hold(&t_hat, 1).unwrap());
        assert!(dot_product_identities_hold(&t_hat, 3).unwrap());
    }
}
