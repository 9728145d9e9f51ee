//! The per-block edit channel: error patterns, their enumeration and
//! sampling, and the brute-force attribution oracle.

mod oracle;
mod pattern;
mod space;

pub use oracle::{
    canonical_key, canonical_vector, consistent_vectors, select_canonical, vector_is_consistent,
    Attribution,
};
pub use pattern::{apply_pattern, max_gap, true_count_vector, BlockEdit, ErrorPattern, Insertion};
pub(crate) use pattern::apply_unchecked;
pub use space::{
    enumerate_patterns, random_pattern, BlockEditSpace, PatternIter, PatternSpace,
    DEFAULT_PATTERN_LIMIT,
};
