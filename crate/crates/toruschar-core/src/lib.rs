//! Exact computations for character varieties of torus knots.
//!
//! The crate is `no_std` (with `alloc`): everything in here is pure
//! arithmetic — integer polynomials in the Lefschetz class `L`, strata
//! censuses for SL/GL/PGL in ranks 2 and 3, brute-force enumeration of
//! eigenvalue labels over roots of unity, Smith normal form and lattice
//! quotient bases, and Alexander-polynomial root bookkeeping.
//!
//! IO, JSON, the CLI and the floating-point representation checks live in
//! the companion `toruschar` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod census;
pub mod error;
pub mod kclass;
pub mod knotpoly;
pub mod kring;
pub mod labels;
pub mod latquot;
pub mod oracle;
pub mod params;
mod polyops;
pub mod rootexp;

pub use error::Error;
pub use kring::KClass;
pub use params::KnotParams;

pub type Result<T> = core::result::Result<T, Error>;
