//! Homology jumping loci, exponential tangent cones and Σ-invariants of
//! toric complexes, right-angled Artin groups and finitely presented groups,
//! computed in exact arithmetic.

pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod fpgroups;
pub mod laurent;
pub mod raag;
pub mod simplicial;
pub mod tau;
pub mod toric;

pub use error::{Error, Result};
