//! Exact Jack characters, anisotropic moments and free cumulants of Young
//! diagrams, and Kerov polynomials for Jack characters.
//!
//! Scalars live in ℚ(t) with `t = √α`. Everything here is `no_std` with
//! `alloc`; file formats, the CLI and parallel drivers live in the `kerov`
//! crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod field;
pub mod partitions;
pub mod symfunc;
pub mod diagrams;
pub mod jack;
pub mod cumulants;
pub mod kerov;
pub mod plancherel;

pub use error::{Error, Result};
pub use field::{FieldElement, GammaPolynomial, Rational};
pub use partitions::Partition;
