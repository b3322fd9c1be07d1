//! Denominator vectors of cluster variables in finite-type cluster algebras,
//! with respect to any initial seed, computed three independent ways:
//! symbolic Laurent mutation, rotation-invariant compatibility degrees on
//! almost positive roots, and root-function linear algebra on the subword
//! complex of `Q_c`.

pub mod cli;
pub mod cluster;
pub mod coxeter;
pub mod error;
pub mod geometry;
pub mod laurent;
pub mod linalg;
pub mod roots;
pub mod subword;
pub mod verify;

pub use error::{Error, Result};
