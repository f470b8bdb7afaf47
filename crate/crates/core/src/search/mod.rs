//! Exact values by exhaustive search, and heuristic lower-bound search.

pub mod canonical;
pub mod exact;
pub mod local;

pub use canonical::{canonical_key, CanonicalForm};
pub use exact::{
    decide_min_codegree, exact_copos_ex, exact_copos_ex_with_jobs, seed_construction, Decision,
    DecisionRecord, SearchOutcome,
};
pub use local::{local_search_lower_bound, LocalSearchResult};
