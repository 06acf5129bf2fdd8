//! Exact verification of the correspondence between reverse plane partitions,
//! non-intersecting lattice paths, and the discrete two-dimensional Toda
//! molecule.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod identities;
pub mod lattice;
pub mod report;
pub mod shapes;
pub mod suites;
pub mod toda;

pub use error::{Error, Result};
