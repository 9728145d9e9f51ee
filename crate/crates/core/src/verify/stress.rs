//! Seeded random trials at lengths far beyond exhaustive reach, and decode
//! timing across lengths.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::channel::{apply_pattern, random_pattern, vector_is_consistent};
use crate::code::{encode, message_len};
use crate::decode::decode;
use crate::error::Result;
use crate::params::{CodeParams, Family};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StressMismatch {
    pub trial: u64,
    pub pattern: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StressReport {
    pub params: CodeParams,
    pub seed: u64,
    pub trials: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<StressMismatch>,
    pub bits_decoded: u64,
    pub decode_seconds: f64,
    /// Received bits decoded per second of decoder time.
    pub throughput: f64,
}

/// Random message of the right length for `params`, from `seed`.
pub fn random_message(params: &CodeParams, seed: u64) -> BitString {
    let mut rng = SplitMix64::seed_from_u64(seed);
    BitString::from_bits((0..message_len(params)).map(|_| rng.gen_range(0..2u8)).collect())
}

/// Runs `trials` seeded trials: trial t encodes a random message and
/// applies `random_pattern(params, seed + t)`.
///
/// For deletion codes the decoder must return the pattern's own counts
/// (deletion-only attributions are unique). For the other families it must
/// return a vector consistent with `x` and `y`. Canonical optimality is
/// left to the exhaustive checks.
pub fn stress(params: &CodeParams, seed: u64, trials: u64) -> Result<StressReport> {
    let mut report = StressReport {
        params: *params,
        seed,
        trials,
        mismatches: 0,
        first_mismatch: None,
        bits_decoded: 0,
        decode_seconds: 0.0,
        throughput: 0.0,
    };
    let mut decode_time = Duration::ZERO;
    for t in 0..trials {
        let s = seed.wrapping_add(t);
        let x = encode(params, &random_message(params, s ^ 0x5eed))?;
        let pattern = random_pattern(params, s);
        let y = apply_pattern(params, &x, &pattern)?;
        let start = Instant::now();
        let got = decode(params, &y);
        decode_time += start.elapsed();
        report.bits_decoded += y.len() as u64;
        let problem = match (&got, params.family()) {
            (Err(e), _) => Some(e.to_string()),
            (Ok(v), Family::DeletionDetect) => {
                let want = pattern.true_count_vector();
                (v != &want).then(|| format!("decoded {v}, pattern has {want}"))
            }
            (Ok(v), _) => (!vector_is_consistent(params, &x, &y, v))
                .then(|| format!("decoded {v} is not consistent with x and y")),
        };
        if let Some(detail) = problem {
            report.mismatches += 1;
            if report.first_mismatch.is_none() {
                report.first_mismatch = Some(StressMismatch {
                    trial: t,
                    pattern: pattern.to_string(),
                    detail,
                });
            }
        }
    }
    report.decode_seconds = decode_time.as_secs_f64();
    report.throughput = if report.decode_seconds > 0.0 {
        report.bits_decoded as f64 / report.decode_seconds
    } else {
        f64::INFINITY
    };
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    pub n: usize,
    /// Best time of one decode, in seconds.
    pub seconds: f64,
    /// Ratio to the previous row's time (absent on the first row).
    pub ratio: Option<f64>,
}

/// Decode time of one corrupted codeword for each length in `ns`.
///
/// Each measurement decodes the same received string `batch` times in a
/// row and keeps the fastest of `repeats` batches, which filters out
/// scheduler noise.
pub fn scaling_table(
    family: Family,
    delta: usize,
    ell: usize,
    ns: &[usize],
    seed: u64,
    repeats: usize,
) -> Result<Vec<ScalingRow>> {
    let mut rows: Vec<ScalingRow> = Vec::new();
    for &n in ns {
        let params = CodeParams::new(family, delta, ell, n)?;
        let x = encode(&params, &random_message(&params, seed))?;
        let y = apply_pattern(&params, &x, &random_pattern(&params, seed))?;
        // aim for batches of roughly a millisecond
        let probe = Instant::now();
        decode(&params, &y)?;
        let once = probe.elapsed().as_secs_f64().max(1e-7);
        let batch = ((1e-3 / once) as usize).clamp(1, 10_000);
        let mut best = f64::INFINITY;
        for _ in 0..repeats.max(1) {
            let start = Instant::now();
            for _ in 0..batch {
                std::hint::black_box(decode(&params, std::hint::black_box(&y))?);
            }
            best = best.min(start.elapsed().as_secs_f64() / batch as f64);
        }
        let ratio = rows.last().map(|r| best / r.seconds);
        rows.push(ScalingRow {
            n,
            seconds: best,
            ratio,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stress_is_clean_and_deterministic() {
        let p = CodeParams::deletion(2, 16, 1024).unwrap();
        let a = stress(&p, 3, 50).unwrap();
        assert_eq!(a.mismatches, 0, "{:?}", a.first_mismatch);
        let b = stress(&p, 3, 50).unwrap();
        assert_eq!(a.bits_decoded, b.bits_decoded);
        for p in [
            CodeParams::insertion1(8, 256).unwrap(),
            CodeParams::insertion2(12, 240).unwrap(),
            CodeParams::mixed1(10, 200).unwrap(),
        ] {
            let r = stress(&p, 11, 200).unwrap();
            assert_eq!(r.mismatches, 0, "{p}: {:?}", r.first_mismatch);
        }
    }
}
