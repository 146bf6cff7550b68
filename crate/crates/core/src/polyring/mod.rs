//! Multivariate Laurent-polynomial arithmetic, Buchberger Groebner bases,
//! finite-dimensional quotient rings with normal forms, Frobenius kernels,
//! and generalized eigendecomposition of multiplication operators.
//!
//! Laurent handling follows one convention everywhere: a quotient of the
//! Laurent ring is presented polynomially by adjoining one `*_inv` companion
//! per variable with the relation `x * x_inv - 1`, running Buchberger in the
//! ordinary polynomial ring, and translating exponents at the boundary.

mod eigen;
mod groebner;
mod poly;
mod quotient;

pub use eigen::{
    generalized_eigendecomposition, rational_char_poly, rational_roots, EigenDecomposition,
};
pub use groebner::{groebner_basis, reduce_by_basis, verify_buchberger};
pub use poly::{LaurentPoly, MonomialOrder};
pub use quotient::{Ideal, QuotientRing, RingElement};

use crate::field::Characteristic;
use alloc::string::String;
use core::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    /// Operands live over different variable lists or characteristics.
    ContextMismatch,
    /// A generator of an ideal was zero.
    ZeroGenerator,
    /// The quotient has an infinite monomial basis.
    InfiniteDimensional,
    /// Negative exponents fed to a construction that requires a polynomial.
    NegativeExponent,
    /// Negative power of a polynomial that is not a single term.
    NonMonomialInverse(String),
    WrongCharacteristic {
        found: Characteristic,
        needed: &'static str,
    },
    /// Evaluation hit a zero coordinate under a negative exponent.
    ZeroDenominator,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::ContextMismatch => write!(f, "variable/characteristic mismatch"),
            PolyError::ZeroGenerator => write!(f, "zero ideal generator"),
            PolyError::InfiniteDimensional => write!(f, "quotient ring is infinite-dimensional"),
            PolyError::NegativeExponent => {
                write!(f, "negative exponents not allowed in a polynomial quotient")
            }
            PolyError::NonMonomialInverse(p) => {
                write!(f, "negative power of a non-monomial: {p}")
            }
            PolyError::WrongCharacteristic { found, needed } => {
                write!(f, "wrong characteristic {found}: needed {needed}")
            }
            PolyError::ZeroDenominator => write!(f, "negative exponent at a zero coordinate"),
        }
    }
}
