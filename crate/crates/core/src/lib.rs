//! Enumeration of preferred extensions (maximal semikernels) of directed
//! argumentation frameworks.
//!
//! The crate provides a brute-force oracle, an independent-set based
//! enumerator, a parameterized branching algorithm for maximal admissible
//! subsets, a monotone-local-search enumerator, a branching enumerator
//! specialized to oriented graphs, the graph translations connecting
//! them, and generators for extremal instances.

pub mod af;
pub mod bitset;
pub mod collation;
pub mod dispatch;
pub mod error;
pub mod formats;
pub mod generate;
pub mod mase;
pub mod mis;
pub mod mls;
pub mod oracle;
pub mod oriented;
pub mod report;
pub mod stats;
pub mod translate;

pub use af::ArgumentationFramework;
pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use stats::SearchStats;

/// An extension is just a set of vertices of its framework.
pub type Extension = VertexSet;
