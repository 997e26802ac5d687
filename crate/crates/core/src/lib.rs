//! Exact computations on Stanley-Reisner rings of simplicial complexes and edge ideals:
//! quasi-forest recognition with certificates, Hochster Betti tables, Cohen-Macaulay and
//! almost Cohen-Macaulay tests, and the classification of cycle edge ideals.

pub mod cm;
pub mod complex;
pub mod corpus;
pub mod cyclelib;
pub mod error;
pub mod face;
pub mod graph;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod properties;
pub mod quasiforest;

pub use complex::{FVector, HVector, SimplicialComplex};
pub use error::{Error, Result};
pub use face::Face;
pub use graph::Graph;
pub use homology::{BettiTable, Engine};
pub use linalg::Field;
pub use quasiforest::{is_quasi_forest, QuasiForestVerdict};
