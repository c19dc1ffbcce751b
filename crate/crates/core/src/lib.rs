//! Exact tools for strong odd colorings of graphs.
//!
//! A strong odd coloring is a proper coloring in which, around every
//! non-isolated vertex, each color that occurs in the neighborhood occurs an
//! odd number of times. The crate provides exact chromatic-number search for
//! proper, odd, strong odd and square colorings, exact maximum average degree,
//! the constructive system-of-odd-representatives procedure, detectors for
//! the reducible configurations of the associated discharging proofs, and a
//! discharging engine working in exact rational arithmetic.
//!
//! Numerical results are generic over the integer type behind [`Ratio`];
//! [`Rational`] and [`BigRational`] are the concrete choices.

pub mod error;
pub mod graph;
pub mod scalar;
pub mod coloring;
pub mod configurations;
pub mod density;
pub mod oddrep;

pub use error::{Error, Result};
pub use graph::{Girth, Graph};
pub use scalar::{BigInt, ExactInt, Ratio};

/// Exact rational on machine integers.
pub type Rational = Ratio<i64>;
/// Exact rational on arbitrary precision integers.
pub type BigRational = Ratio<BigInt>;
