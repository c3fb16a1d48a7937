//! Exact-arithmetic spectral graph theory: M-spectra of graphs and of graph
//! products (rooted, C-product, Cartesian), separability and controllability
//! decisions with machine-checkable certificates, Wronskian-vertex detection,
//! cospectral-pair constructions, and a small-order census.
//!
//! Every verdict is decided over the rationals (or over Q\[t\]/(p) with dynamic
//! splitting); floating point appears only in optional numeric cross-checks.

pub mod analysis;
pub mod canon;
pub mod census;
pub mod constructions;
pub mod control;
pub mod error;
pub mod ext;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod poly;
pub mod products;
pub mod rat;
pub mod resultant;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use family::MatrixKind;
pub use graph::Graph;
pub use matrix::RatMatrix;
pub use poly::Poly;
pub use rat::Rat;
