//! Clifford algebra engine over real or complex scalars.
//!
//! Elements are dense coefficient vectors indexed by blade bitmask; the
//! product sign is the reordering parity times the metric of shared
//! generators.

mod multivector;
mod scalar;
mod signature;

pub use multivector::{geometric_product, sandwich, Multivector};
pub use scalar::Scalar;
pub use signature::Signature;
