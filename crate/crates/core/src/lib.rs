//! Clifford algebras generated by process groupoids.
//!
//! The crate builds real and complex Clifford algebras from oriented
//! "extensives", then uses them for light-cone geometry (rotors, boosts,
//! k-calculus), spinors as ideal elements (Hopf map, Penrose null vectors,
//! chirality), conformal bi-twistors, Bohmian quantities on grids, trace
//! expectation values and the finite Weyl (clock-and-shift) algebra.

pub mod bohm;
pub mod clifford;
pub mod conformal;
pub mod error;
pub mod export;
pub mod groupoid;
pub mod lorentz;
pub mod observables;
pub mod spinor;
pub mod tables;
pub mod verify;
pub mod weyl;

pub use clifford::{Multivector, Scalar, Signature};
pub use error::{Error, Result};

/// Crate version reported in verification output.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
