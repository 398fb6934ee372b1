use std::sync::OnceLock;

use super::{Gate, Mat2, Mat3};
use crate::rings::DOmega;

fn paulis() -> &'static [Mat2; 3] {
    static P: OnceLock<[Mat2; 3]> = OnceLock::new();
    P.get_or_init(|| {
        [Gate::X, Gate::Y, Gate::Z].map(|g| g.unitary().clone())
    })
}

/// The Bloch-sphere representation of a unitary: column `j` holds the
/// Pauli coefficients of `U σ_j U†`, i.e. `Û_ij = tr(σ_i U σ_j U†) / 2`.
///
/// # Panics
///
/// If a coefficient is not real, which cannot happen for unitary input.
pub fn bloch(u: &Mat2) -> Mat3 {
    let half = DOmega::new(crate::rings::ZOmega::one(), 2);
    let ud = u.adjoint();
    let p = paulis();
    let conjugated: Vec<Mat2> = p.iter().map(|s| &(u * s) * &ud).collect();
    Mat3::new(std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let coeff = &(&p[i] * &conjugated[j]).trace() * &half;
            coeff
                .to_real()
                .unwrap_or_else(|e| panic!("non-unitary input to bloch: {e}"))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{DRoot2, ZRoot2};

    #[test]
    fn generator_rotations() {
        assert_eq!(bloch(Gate::H.unitary()), Mat3::from_ints([[0, 0, 1], [0, -1, 0], [1, 0, 0]]));
        assert_eq!(bloch(Gate::S.unitary()), Mat3::from_ints([[0, -1, 0], [1, 0, 0], [0, 0, 1]]));
        let r = DRoot2::new(ZRoot2::one(), 1);
        let t_hat = Mat3::new([
            [r.clone(), -r.clone(), DRoot2::zero()],
            [r.clone(), r, DRoot2::zero()],
            [DRoot2::zero(), DRoot2::zero(), DRoot2::one()],
        ]);
        assert_eq!(bloch(Gate::T.unitary()), t_hat);
        assert_eq!(bloch(Gate::E.unitary()), Mat3::from_ints([[0, 0, 1], [1, 0, 0], [0, 1, 0]]));
    }

    #[test]
    fn phases_are_invisible() {
        assert!(bloch(Gate::W.unitary()).is_identity());
        assert!(bloch(&Mat2::identity()).is_identity());
    }
}
