//! Exact torsion-weighted spanning-tree and forest counts of cell complexes.

pub mod error;
pub mod families;
pub mod census;
pub mod complex;
pub mod critical;
pub mod homology;
pub mod linalg;
pub mod matrix_forest;
pub mod sampling;
pub mod verify;

pub use error::{Error, Result};
