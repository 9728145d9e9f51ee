//! Code-level checks under the deletion channel: no received string may
//! be explained by two different count vectors, and, for block-by-block
//! decodability, each block's count must be a function of the `ell` bits
//! of `y` starting at the block's true start.

use std::collections::HashMap;

use crate::bits::BitString;
use crate::count::CountVector;
use crate::error::{Error, Result};

use super::report::{Counterexample, ReportKind, ReportParams, VerificationReport};

/// Cap on scenarios (string x deletion pattern) a single check may build.
pub const MAX_SCENARIOS: u64 = 1 << 24;

/// One deletion scenario: per-block deleted positions and the outcome.
#[derive(Debug, Clone)]
pub(crate) struct Scenario {
    pub y: Vec<u8>,
    pub deleted: Vec<Vec<usize>>,
}

impl Scenario {
    pub fn counts(&self) -> Vec<usize> {
        self.deleted.iter().map(Vec::len).collect()
    }

    pub fn vector(&self) -> CountVector {
        CountVector::from_deletions(&self.counts())
    }

    pub fn pattern_text(&self) -> String {
        let mut parts = Vec::new();
        for (k, d) in self.deleted.iter().enumerate() {
            for p in d {
                parts.push(format!("{}=del@{p}", k + 1));
            }
        }
        parts.join(",")
    }

    /// Bits of `y` seen by block `j`'s window: `ell` bits from the true
    /// block start, cut at the end of `y`.
    pub fn window(&self, j: usize, ell: usize) -> &[u8] {
        let start: usize = self.deleted[..j - 1].iter().map(|d| ell - d.len()).sum();
        let end = (start + ell).min(self.y.len());
        &self.y[start..end]
    }
}

fn subsets_up_to(ell: usize, delta: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << ell) {
        if mask.count_ones() as usize <= delta {
            out.push((1..=ell).filter(|p| mask >> (p - 1) & 1 == 1).collect());
        }
    }
    out.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub(crate) fn check_shape(code: &[BitString], ell: usize, delta: usize) -> Result<usize> {
    let n = code.first().map_or(0, BitString::len);
    if ell == 0 || n == 0 || n % ell != 0 {
        return Err(Error::NonDivisible { ell, n });
    }
    if ell > 24 || delta > ell {
        return Err(Error::RangeViolation(format!("ell={ell}, delta={delta}")));
    }
    if let Some(x) = code.iter().find(|x| x.len() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: x.len(),
        });
    }
    let per_block = subsets_up_to(ell, delta).len() as u64;
    let m = (n / ell) as u32;
    let scenarios = per_block
        .checked_pow(m)
        .and_then(|s| s.checked_mul(code.len() as u64));
    match scenarios {
        Some(s) if s <= MAX_SCENARIOS => Ok(n),
        _ => Err(Error::TooLarge(format!(
            "{} strings x {per_block}^{m} deletion patterns",
            code.len()
        ))),
    }
}

/// Every deletion scenario of `x` with at most `delta` deletions per block.
pub(crate) fn scenarios(x: &BitString, ell: usize, delta: usize) -> Vec<Scenario> {
    let m = x.len() / ell;
    let choices = subsets_up_to(ell, delta);
    let mut out = Vec::new();
    let mut pick = vec![0usize; m];
    loop {
        let mut y = Vec::with_capacity(x.len());
        let mut deleted = Vec::with_capacity(m);
        for (k, &c) in pick.iter().enumerate() {
            let d = &choices[c];
            for (i, &b) in x.block(k + 1, ell).iter().enumerate() {
                if !d.contains(&(i + 1)) {
                    y.push(b);
                }
            }
            deleted.push(d.clone());
        }
        out.push(Scenario { y, deleted });
        // odometer, last block fastest
        let mut k = m;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices.len() {
                break;
            }
            pick[k] = 0;
        }
    }
}

fn witness(
    code: &[BitString],
    first: (usize, &Scenario),
    second: (usize, &Scenario),
) -> Counterexample {
    Counterexample {
        x: code[first.0].clone(),
        pattern: first.1.pattern_text(),
        y: BitString::from_bits(first.1.y.clone()),
        expected: first.1.vector(),
        got: Some(second.1.vector()),
        error: None,
        other_x: Some(code[second.0].clone()),
        other_pattern: Some(second.1.pattern_text()),
    }
}

fn raw_params(code: &[BitString], ell: usize, delta: usize) -> ReportParams {
    ReportParams::Raw {
        delta,
        ell,
        n: code.first().map_or(0, BitString::len),
    }
}

/// Valid iff no received string is reachable under two different count
/// vectors, over all pairs of members (a member with itself included).
pub fn check_code_validity(code: &[BitString], ell: usize, delta: usize) -> Result<VerificationReport> {
    check_shape(code, ell, delta)?;
    let mut report = VerificationReport::new(ReportKind::CodeValidity, raw_params(code, ell, delta));
    let all: Vec<Vec<Scenario>> = code.iter().map(|x| scenarios(x, ell, delta)).collect();
    let mut seen: HashMap<&[u8], (usize, usize)> = HashMap::new();
    let mut total = 0u64;
    'outer: for (xi, list) in all.iter().enumerate() {
        for (si, s) in list.iter().enumerate() {
            total += 1;
            match seen.get(s.y.as_slice()) {
                None => {
                    seen.insert(&s.y, (xi, si));
                }
                Some(&(fx, fs)) => {
                    let f = &all[fx][fs];
                    if f.counts() != s.counts() {
                        report.passed = false;
                        report.counterexample = Some(witness(code, (fx, f), (xi, s)));
                        break 'outer;
                    }
                }
            }
        }
    }
    report.metric("code_size", code.len());
    report.metric("scenarios_checked", total);
    report.metric("distinct_outputs", seen.len());
    Ok(report)
}

/// Block-by-block decodability: for every block `j`, the window of `ell`
/// bits at the true start of block `j` must determine that block's
/// deletion count. Each `j` gets its own lookup table.
pub fn check_block_decodable(code: &[BitString], ell: usize, delta: usize) -> Result<VerificationReport> {
    let n = check_shape(code, ell, delta)?;
    let m = n / ell;
    let mut report = VerificationReport::new(ReportKind::BlockDecodable, raw_params(code, ell, delta));
    let all: Vec<Vec<Scenario>> = code.iter().map(|x| scenarios(x, ell, delta)).collect();
    let mut total = 0u64;
    'outer: for j in 1..=m {
        let mut seen: HashMap<&[u8], (usize, usize)> = HashMap::new();
        for (xi, list) in all.iter().enumerate() {
            for (si, s) in list.iter().enumerate() {
                total += 1;
                let w = s.window(j, ell);
                match seen.get(w) {
                    None => {
                        seen.insert(w, (xi, si));
                    }
                    Some(&(fx, fs)) => {
                        let f = &all[fx][fs];
                        if f.deleted[j - 1].len() != s.deleted[j - 1].len() {
                            report.passed = false;
                            report.counterexample = Some(witness(code, (fx, f), (xi, s)));
                            report.findings.push(format!(
                                "block {j}: window {} reads as {} and {} deletions",
                                BitString::from_bits(w.to_vec()),
                                f.deleted[j - 1].len(),
                                s.deleted[j - 1].len()
                            ));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    report.metric("code_size", code.len());
    report.metric("window_lookups", total);
    Ok(report)
}
