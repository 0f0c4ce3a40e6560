//! Exact face-enumeration invariants of finite simplicial complexes.
//!
//! The crate computes f-, h-, h-tilde- and gamma-polynomials with
//! arbitrary-precision integers, certifies homology spheres via Smith normal
//! form, and checks the identities that tie these together on flag spheres:
//! Dehn–Sommerville symmetry, join multiplicativity, the vertex-link sum of
//! f-polynomials, and the vertex-link form of `(-1)^d h~(-1)`.

pub mod bigint_serde;
pub mod census;
pub mod complex;
pub mod error;
pub mod format;
pub mod generators;
pub mod homology;
pub mod invariants;
pub mod polynomial;
pub mod report;
pub mod snf;

pub use complex::{FVector, Graph, Link, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::{HomologyProfile, LinkCertifier};
pub use invariants::{SphereInvariants, TheoremWitness};
pub use polynomial::{GammaVector, IntPolynomial, Rational};
