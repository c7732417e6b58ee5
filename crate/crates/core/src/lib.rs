//! Exact invariants of ℕ-graded Lie algebras whose enveloping algebra has a
//! polynomial characteristic series.
//!
//! Everything that decides something (dimensions, realizability, cyclotomic
//! structure, finiteness) runs on arbitrary-precision integers and rationals.
//! Floating point only appears in [`charpoly::roots`], which is used for
//! reporting eigenvalues and entropy.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod charpoly;
mod error;
pub mod graphs;
pub mod numtheory;
pub mod presets;
pub mod series;

pub use charpoly::{
    CharPolynomial, CycloFactorization, Entropy, Exactness, SpectralReport, Verdict, WittDims,
    WittReport,
};
pub use error::Error;
pub use graphs::Graph;
pub use numtheory::IntPolynomial;
pub use series::TruncatedSeries;

pub use num_bigint::BigInt;
pub use num_complex::Complex64;
pub use num_rational::BigRational;

pub type Result<T, E = Error> = core::result::Result<T, E>;
