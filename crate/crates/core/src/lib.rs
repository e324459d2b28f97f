pub mod chain;
pub mod error;
pub mod family;
pub mod graph;
pub mod group;
pub mod lab;
pub mod marking;
pub mod matrix;
pub mod spectral;
pub mod snf;

pub use chain::{direct_sum, independence_chain_complex, ChainComplex, GradedHomology};
pub use error::{Error, Result};
pub use graph::{Census, Graph, VertexSet};
pub use group::{AbelianGroup, GroupShape, Subquotient};
pub use marking::{build_bigraded, BigradedComplex, Marking};
pub use matrix::IntMatrix;
