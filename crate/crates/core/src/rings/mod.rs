//! Exact arithmetic in ℤ[√2], ℤ[1/√2], ℤ[ω] and ℤ[ω, 1/√2], together with
//! the parity and residue homomorphisms onto ℤ₂ and ℤ₂[ω].
//!
//! The `D` rings are stored in reduced form (numerator over a power of √2
//! with the least possible exponent), so equality and hashing are
//! structural and the least denominator exponent is a field read.

mod domega;
mod droot2;
mod residue;
mod text;
mod zomega;
mod zroot2;

pub use domega::DOmega;
pub use droot2::DRoot2;
pub use residue::{Parity, Residue};
pub use zomega::ZOmega;
pub use zroot2::ZRoot2;

/// Forwards the owned and mixed-reference forms of a binary operator to the
/// `&T op &T` implementation.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident) => {
        impl std::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(&self, &rhs)
            }
        }
        impl std::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                std::ops::$tr::$method(&self, rhs)
            }
        }
        impl std::ops::$tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                std::ops::$tr::$method(self, &rhs)
            }
        }
    };
}

pub(crate) use forward_binop;
