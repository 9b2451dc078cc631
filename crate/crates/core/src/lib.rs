//! Binary locally repairable codes built by concatenating GF(4) outer codes
//! with the [3,2,2] binary single-parity inner code.
//!
//! Everything linear-algebraic is generic over [`FiniteField`]; the aliases
//! below name the two instantiations the crate works with.

pub mod bounds;
pub mod code;
mod enumerate;
pub mod error;
pub mod galois;
pub mod lrc;
pub mod macwilliams;
pub mod matspace;
pub mod outer;
pub mod repair;
pub mod reproduce;

pub use code::{AnyCode, DistanceCertificate, DistanceMethod, LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use galois::{FieldKind, FiniteField, Gf2, Gf4};
pub use lrc::{concatenate, BinaryLrc};
pub use matspace::{AnyMatrix, FieldMatrix};

pub type Gf2Matrix = FieldMatrix<Gf2>;
pub type Gf4Matrix = FieldMatrix<Gf4>;
pub type BinaryCode = LinearCode<Gf2>;
pub type QuaternaryCode = LinearCode<Gf4>;
