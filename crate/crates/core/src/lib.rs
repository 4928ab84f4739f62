//! Matching extendability in graphs: maximum matchings, Gallai–Edmonds
//! structure, extendability deciders with certificates, exact binding number
//! and toughness, and tools for checking the sufficient conditions that link them.

pub mod error;
pub mod extend;
pub mod graph;
pub mod harness;
pub mod lab;
pub mod matching;
pub mod params;
pub mod rational;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{edge, Edge, Graph, VertexSet};
pub use matching::Matching;
pub use rational::Rational;
