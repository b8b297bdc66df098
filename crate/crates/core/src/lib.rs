//! Rational cohomology of the spaces `B_com G` and `E_com G` of commuting
//! elements for the classical groups `U(n)`, `SU(n)` and `Sp(n)`.
//!
//! Every closed formula is paired with an independent check: descent
//! statistics over the Weyl group against class-averaged coinvariant
//! characters, and both against brute-force linear algebra in the ring of
//! multisymmetric polynomials.

pub mod cache;
pub mod cli;
pub mod coinvariants;
pub mod error;
pub mod multisym;
pub mod poincare;
pub mod qseries;
pub mod repa;
pub mod report;
pub mod toriposet;
pub mod weylcomb;

pub use error::{Error, Result};
pub use poincare::{Family, GroupSpec, Route};
pub use qseries::{QPoly, RationalSeries, TruncatedSeries};
pub use report::{Check, Report};
