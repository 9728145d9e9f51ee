use std::time::Instant;

use crate::bits::BitString;
use crate::channel::{apply_unchecked, Attribution, PatternSpace, DEFAULT_PATTERN_LIMIT};
use crate::code::{encode, message_len, MAX_ENUMERATION_BITS};
use crate::count::CountVector;
use crate::error::{Error, Result};
use crate::params::CodeParams;

use super::report::{Counterexample, ReportKind, ReportParams, VerificationReport};

/// Default worker count: every available core.
pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Runs `decoder` on every (codeword, admissible pattern) pair of `params`
/// and compares with the canonical count vector. Single-threaded.
pub fn check_decoder_exhaustive<D>(params: &CodeParams, decoder: D) -> Result<VerificationReport>
where
    D: Fn(&BitString) -> Result<CountVector> + Sync,
{
    check_decoder_exhaustive_jobs(params, decoder, 1)
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failures: u64,
    // (codeword index, pattern index, witness)
    first: Option<(u64, u64, Counterexample)>,
}

/// [`check_decoder_exhaustive`] over `jobs` threads. The codewords are split
/// into contiguous chunks; every pair is checked (no early exit) and the
/// reported witness is the failure with the smallest (message, pattern)
/// rank, so the report does not depend on `jobs`.
pub fn check_decoder_exhaustive_jobs<D>(
    params: &CodeParams,
    decoder: D,
    jobs: usize,
) -> Result<VerificationReport>
where
    D: Fn(&BitString) -> Result<CountVector> + Sync,
{
    exhaustive(params, decoder, jobs, false)
}

/// Same enumeration order as [`check_decoder_exhaustive`], but returns at
/// the first failure. Its witness is the one the full run would report;
/// `pairs_checked` then counts only the pairs visited.
pub fn check_decoder_until_failure<D>(params: &CodeParams, decoder: D) -> Result<VerificationReport>
where
    D: Fn(&BitString) -> Result<CountVector> + Sync,
{
    exhaustive(params, decoder, 1, true)
}

fn exhaustive<D>(
    params: &CodeParams,
    decoder: D,
    jobs: usize,
    stop_early: bool,
) -> Result<VerificationReport>
where
    D: Fn(&BitString) -> Result<CountVector> + Sync,
{
    let k = message_len(params);
    if k > MAX_ENUMERATION_BITS {
        return Err(Error::TooLarge(format!("{params} has 2^{k} codewords")));
    }
    let space = PatternSpace::new(params);
    let words = 1u64 << k;
    let total = words.saturating_mul(space.len());
    if total > DEFAULT_PATTERN_LIMIT.saturating_mul(4) {
        return Err(Error::TooLarge(format!(
            "{params}: {words} codewords x {} patterns",
            space.len()
        )));
    }
    let start = Instant::now();
    let jobs = jobs.clamp(1, words as usize);
    let chunk = words.div_ceil(jobs as u64);
    let run = |lo: u64, hi: u64| -> Result<Tally> {
        let mut t = Tally::default();
        for w in lo..hi {
            let x = encode(params, &BitString::from_u64(w, k))?;
            let attr = Attribution::new(params, &x)?;
            for (pi, pattern) in space.iter().enumerate() {
                let y = apply_unchecked(params, &x, &pattern);
                let expected = attr.canonical_vector(&y)?;
                let got = decoder(&y);
                t.checked += 1;
                if got.as_ref().ok() == Some(&expected) {
                    continue;
                }
                t.failures += 1;
                if t.first.is_none() {
                    let (got, error) = match got {
                        Ok(v) => (Some(v), None),
                        Err(e) => (None, Some(e.to_string())),
                    };
                    t.first = Some((
                        w,
                        pi as u64,
                        Counterexample {
                            x: x.clone(),
                            pattern: pattern.to_string(),
                            y,
                            expected,
                            got,
                            error,
                            other_x: None,
                            other_pattern: None,
                        },
                    ));
                }
                if stop_early {
                    return Ok(t);
                }
            }
        }
        Ok(t)
    };
    let tallies: Vec<Result<Tally>> = if jobs == 1 {
        vec![run(0, words)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs as u64)
                .map(|i| {
                    let lo = i * chunk;
                    let hi = ((i + 1) * chunk).min(words);
                    let run = &run;
                    s.spawn(move || run(lo, hi))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect()
        })
    };
    let mut all = Tally::default();
    for t in tallies {
        let t = t?;
        all.checked += t.checked;
        all.failures += t.failures;
        if let Some(f) = t.first {
            if all.first.as_ref().map_or(true, |g| (f.0, f.1) < (g.0, g.1)) {
                all.first = Some(f);
            }
        }
    }
    let mut report = VerificationReport::new(ReportKind::DecoderExhaustive, ReportParams::Code(*params));
    report.passed = all.failures == 0;
    report.counterexample = all.first.map(|f| f.2);
    report.metric("codewords", words);
    report.metric("patterns_per_codeword", space.len());
    report.metric("pairs_checked", all.checked);
    report.metric("failures", all.failures);
    report.metric("elapsed_ms", start.elapsed().as_secs_f64() * 1e3);
    Ok(report)
}
