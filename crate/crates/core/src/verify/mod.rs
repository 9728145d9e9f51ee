//! Ground-truth checks: exhaustive decoder verification against the
//! attribution oracle, code-level validity and block-decodability under the
//! deletion channel, redundancy bounds, necessary-condition audits and the
//! exact maximum-code search, plus seeded stress runs at large lengths.

mod audit;
mod bounds;
mod exhaustive;
mod report;
mod search;
mod stress;
mod validity;

pub use audit::audit_necessary_conditions;
pub use bounds::{bounds, epsilon, BoundValues};
pub use exhaustive::{
    check_decoder_exhaustive, check_decoder_exhaustive_jobs, check_decoder_until_failure, default_jobs,
};
pub use report::{Counterexample, Metric, ReportKind, ReportParams, VerificationReport};
pub use search::{max_code_search, MAX_SEARCH_BITS};
pub use stress::{random_message, scaling_table, stress, ScalingRow, StressMismatch, StressReport};
pub use validity::{check_block_decodable, check_code_validity, MAX_SCENARIOS};

use crate::error::Result;

/// A [`ReportKind::BoundsTable`] report carrying [`bounds`] and its size caps.
pub fn bounds_report(delta: usize, ell: usize, n: usize) -> Result<VerificationReport> {
    let b = bounds(delta, ell, n)?;
    let mut r = VerificationReport::new(ReportKind::BoundsTable, ReportParams::Raw { delta, ell, n });
    r.passed = b.bound1 <= b.bound_thm2 && b.bound_thm3 == b.bound1 + (n / ell - 1) as f64;
    r.metric("cap_bound1", b.size_cap(b.bound1));
    r.metric("cap_thm2", b.size_cap(b.bound_thm2));
    r.metric("cap_thm3", b.size_cap(b.bound_thm3));
    r.metric("construction_size", 1u64 << (n - b.construction_redundancy));
    r.bounds = Some(b);
    Ok(r)
}
