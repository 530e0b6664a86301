//! Exact computer algebra for finitely generated supercommutative
//! superrings.
//!
//! The library builds finite-dimensional quotients of exterior algebras
//! over the rationals or a prime field, with exact scalar arithmetic
//! throughout, and decides the structural questions that make these
//! rings interesting: units and closed-form inverses, graded ideals and
//! the canonical superideal, superreduction, nilradical, prime and
//! maximal ideals, divisibility, associates (with unit certificates),
//! normality, regularity, irreducibility, prime elements, exhaustive
//! factorization enumeration, unique-factorization verdicts with
//! machine-checkable witnesses, Krull superdimension `0|d`, cotangent
//! superdimension, and superring regularity.
//!
//! Polynomial superalgebras with even indeterminates and the dual
//! integers live in [`superpoly`]; a randomized classification census
//! is in [`census`]; the bundled verification suite of worked examples
//! and structure theorems is in [`verify`].
//!
//! Entry points: build a [`algebra::Superalgebra`] from an
//! [`algebra::AlgebraSpec`] (directly or from its JSON form), parse
//! elements with [`algebra::Superalgebra::parse_element`], and call the
//! predicates in [`structure`], [`factor`], [`ufsr`], and [`dimension`].
//! The `examples/` directory shows one runnable program per capability.

pub mod algebra;
pub mod catalog;
pub mod census;
pub mod dimension;
pub mod error;
pub(crate) mod expr;
pub mod factor;
pub(crate) mod linalg;
pub mod monomial;
pub mod report;
pub mod scalar;
pub mod structure;
pub mod superpoly;
pub mod ufsr;
pub mod verify;

pub use crate::algebra::{AlgebraSpec, Element, Superalgebra};
pub use crate::error::{Error, Result};
pub use crate::scalar::{Scalar, ScalarDomain};
