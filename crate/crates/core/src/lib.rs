//! Exact algebra kernel behind the `cocert` toolkit.
//!
//! Everything here is computed over prime fields GF(p) or arbitrary-precision
//! rationals; there is no floating point anywhere. The crate is `no_std`
//! (alloc only) so the algebraic core stays free of IO concerns; the `cocert`
//! CLI crate layers file formats and command-line handling on top.
//!
//! Module map:
//!
//! * [`field`] — field elements, dense matrices, exact linear solving with
//!   infeasibility certificates.
//! * [`polyring`] — Laurent polynomials, Buchberger Groebner bases, finite
//!   quotient rings, Frobenius kernels, generalized eigendecomposition.
//! * [`qh`] — quantum cohomology presentations for projective spaces and the
//!   Picard-rank-2 family, Seidel elements, injectivity verdicts.
//! * [`hochschild`] — Hochschild cohomology of k\[u\]/(f): closed forms, a
//!   bar-complex oracle, the degree-one Yoneda product, non-formality
//!   certificates.
//! * [`ainfinity`] — A-infinity algebras by structure constants, the
//!   Hochschild differential, coboundary decisions, Massey products,
//!   Clifford presentations.
//! * [`superpotential`] — toric superpotentials from fan data, critical point
//!   classification (Morse / A2), split-generation verdicts.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod ainfinity;
pub mod field;
pub mod hochschild;
pub mod polyring;
pub mod qh;
pub mod superpotential;

pub use field::{Characteristic, FieldElement, Matrix};
pub use polyring::{Ideal, LaurentPoly, MonomialOrder, QuotientRing, RingElement};
