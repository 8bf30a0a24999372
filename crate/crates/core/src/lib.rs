//! Exact computer algebra for quantized enveloping algebras over `Q(q)`.
//!
//! The crate computes the Drinfeld pairing between the positive and negative
//! halves, Lusztig's braid automorphisms, canonical elements of the pairing
//! and finite-dimensional integrable modules, and checks the identities that
//! relate them with exact arithmetic only.

pub mod scalars;
pub mod cartan;
pub mod algebra;
pub mod pairing;
pub mod repr;
pub mod par;
pub mod harness;
