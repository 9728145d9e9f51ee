//! Codes that detect the exact number of deletions and insertions in each
//! fixed-length block of a concatenated binary string.
//!
//! - [`code`]: the four fixed-position constructions and systematic encoding.
//! - [`decode`]: block-by-block decoders returning per-block counts.
//! - [`channel`]: per-block edit patterns, their enumeration, seeded
//!   sampling and the brute-force attribution oracle.
//! - [`verify`]: exhaustive checks, bounds, audits and maximum-code search.
//!
//! Positions are 1-based everywhere in the public API.

pub mod bits;
pub mod channel;
pub mod code;
pub mod count;
pub mod decode;
pub mod error;
pub mod params;
pub mod verify;

pub use bits::BitString;
pub use count::{BlockCount, CountVector};
pub use error::{Error, Result};
pub use params::{CodeParams, Family};
