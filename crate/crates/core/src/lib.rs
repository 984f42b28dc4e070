//! Exact small-graph combinatorics around nontrivial vertices: local vertex
//! parameters, h-index, induced-subgraph search, Ramsey-style extraction
//! routines and witness pipelines that locate a forbidden family member.

mod dense;
mod error;

pub mod codec;
pub mod generators;
pub mod graph;
pub mod iso;
pub mod params;
pub mod ramsey;
pub mod witness;

pub use error::{Error, Result};
pub use generators::{theorem_family, FamilySpec, GraphName, Member, TheoremId};
pub use graph::{build_graph, Graph, GraphBuilder, VertexSet};
pub use params::ParamKind;
