//! Positive co-degree invariants of 3-uniform hypergraphs.
//!
//! The crate covers four layers:
//!
//! * [`system`]: the [`TripleSystem`] host type, pair neighborhoods `N(u, v)`,
//!   the minimum positive co-degree, complete balanced `k`-partite
//!   constructions and the closed-form extremal values.
//! * [`pattern`]: the catalog of small forbidden configurations (K4-minus, K4,
//!   C5-minus, C5, F32) with an injective embedding search.
//! * [`witness`]: witness extraction for hosts whose minimum positive
//!   co-degree exceeds the extremal value, and the structure analysis of the
//!   `n/2` boundary case for C5.
//! * [`search`]: exact values for `n <= 7` and a local search for lower-bound
//!   constructions at larger `n`.

pub mod error;
pub mod pattern;
pub mod search;
pub mod system;
pub mod vertex_set;
pub mod witness;

pub use error::Error;
pub use pattern::{find_embedding, is_free, validate_embedding, Embedding, Pattern, PatternKind};
pub use system::{
    build_codegree_table, construct_complete_k_partite, min_positive_codegree, theorem_value,
    CodegreeTable, Neighborhoods, PartitionSpec, Triple, TripleSystem,
};
pub use vertex_set::VertexSet;
