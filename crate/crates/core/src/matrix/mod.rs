//! Exact 2×2 unitaries and 3×3 Bloch-sphere rotations, the single-qubit
//! Clifford group, and parity/residue matrices with their equivalences.

mod bloch;
mod clifford;
mod gate;
mod mat2;
mod mat3;
mod pattern;
mod text;

pub use bloch::bloch;
pub use clifford::{enumerate_bloch_cliffords, enumerate_cliffords, CliffordElt};
pub use gate::{word_string, Gate};
pub use mat2::{mat2_mul_count, Mat2};
pub use mat3::Mat3;
pub use pattern::{ParityMat3, ResidueMat2};
