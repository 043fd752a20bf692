//! Total/semitotal domination numbers, their edge-contraction numbers, and
//! the SAT gadget constructions and class tools used to study them.

pub mod bits;
pub mod classes;
pub mod contraction;
pub mod domination;
pub mod formula;
pub mod gadgets;
pub mod graph;
pub mod patterns;
pub mod subdivision;
pub mod poly;

pub use bits::{VertexSet, MAX_VERTICES};
pub use domination::{DomKind, SolveError, SolverBudget};
pub use graph::{Graph, GraphError};
