//! Exact arithmetic in `Z_n[x1..xm]` and deciders for the diagonal property
//! of multiplication tables.
//!
//! The multiplication table of a finite commutative ring has the *diagonal
//! property* when the entry 1 appears only on the diagonal, i.e. `a * b = 1`
//! forces `a = b`. Equivalently, every unit of the ring is an involution.
//! For the residue rings `Z_n` this happens exactly when `n` divides 24; for
//! the polynomial rings `Z_n[x1..xm]` (any positive number of variables) it
//! happens exactly when `n` divides 12. This crate implements the arithmetic
//! needed to state, decide, and cross-check those facts:
//!
//! - [`modring`]: the coefficient ring `Z_n` with its prime factorization,
//!   radical, and unit/nilpotency predicates.
//! - [`polyring`]: sparse multivariate polynomials in canonical form, with
//!   graded-lexicographic term order, exhaustive enumeration, and a text
//!   format.
//! - [`units`]: recognition of polynomial units (unit constant term plus
//!   nilpotent higher coefficients), inversion through the geometric series
//!   of the nilpotent part, involution tests, and coefficient homomorphisms.
//! - [`diagonal`]: the deciders themselves, producing [`DiagonalReport`]s
//!   whose witnesses are verified at construction.
//!
//! The crate is `no_std` (it allocates, so `alloc` is required). All
//! arithmetic is exact; moduli up to `2^63 - 1` are supported.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod diagonal;
pub mod modring;
#[cfg(feature = "oracles")]
pub mod oracle;
pub mod polyring;
pub mod units;

pub use diagonal::{DecisionMethod, DiagonalReport, RingDescription, Witness};
pub use modring::{Residue, RingSpec};
pub use polyring::{Degree, Monomial, Polynomial};
pub use units::UnitCertificate;
