//! Exact computation of super Catalan numbers `S(n, l)`, their alternating
//! convolutions and the D-sum machinery, with a registry of checkable
//! identities and a deterministic parallel sweep over parameter grids.

pub mod dsums;
pub mod error;
pub mod exactnum;
pub mod sums;
pub mod supercat;
pub mod verifier;

pub use error::{Error, Result};
pub use exactnum::{Integer, Rational};
