//! Colored graphs from colored tensor models.
//!
//! The crate builds, validates and composes (D+1)-colored bipartite graphs
//! and computes their topological invariants:
//!
//! - [`graph`]: the [`ColoredGraph`] type, bubbles, isomorphism, text and DOT formats
//! - [`homology`]: bubble chain complex and integer homology via Smith normal form
//! - [`ribbon`]: half-edge ribbon structures, boundary components, genus
//! - [`jackets`]: jackets, Gurău degree, melonicity, amplitude exponents
//! - [`surgery`]: connected sums, edge opening, cones, boundary graphs, separators
//! - [`models`]: tensor-model vertex sets, Feynman membership and graph families

pub mod error;
pub mod graph;
pub mod homology;
pub mod jackets;
pub mod models;
pub mod ribbon;
pub mod surgery;

pub use error::{Error, Result};
pub use graph::iso::{find_isomorphism, is_isomorphic, Isomorphism};
pub use graph::{Bubble, Color, ColorSet, ColoredGraph, GraphBuilder, IsoMode, Parity};
