//! Real Clifford algebras Cl(p,q) with a diagonal metric.
//!
//! Basis blades are bitmasks over the generator positions of a [`Signature`];
//! a [`Multivector`] is a sparse map from blades to real coefficients.

mod blade;
mod multivector;
mod signature;
pub(crate) mod text;

pub use blade::Blade;
pub use multivector::{Multivector, PRUNE_EPS};
pub use signature::Signature;
