//! Berge-free hypergraphs: detection, the red-blue reduction, exact extremal
//! searches and closed-form upper bounds.

pub mod bounds;
pub mod canon;
pub mod detect;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod matching;
pub mod reduction;
pub mod redblue;
pub mod report;
pub mod rng;
pub mod search;
pub mod suites;
pub mod symmetrize;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{Graph, Pair};
pub use hypergraph::Hypergraph;
pub use redblue::{Color, RedBlueGraph};
