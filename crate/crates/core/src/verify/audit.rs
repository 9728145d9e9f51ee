use std::collections::BTreeSet;

use crate::bits::BitString;
use crate::error::Result;

use super::report::{ReportKind, ReportParams, VerificationReport};
use super::validity::check_shape;

/// Checks the structural conditions every valid deletion-detecting code
/// must satisfy, codeword by codeword:
///
/// - (a) the last `delta` bits of block j all differ from the first
///   `delta` bits of block j+1;
/// - (b) every codeword uses the same polarity at each boundary;
/// - (c) for block-by-block decodable codes, bit `delta + 1` of block j+1
///   also differs from the last `delta` bits of block j;
/// - (d) for m >= 3, bits `[delta+1, 3 delta]` of block j+1 differ from the
///   `2 delta` bits straddling boundary j (j <= m - 2).
///
/// Report-only: violations are listed in `findings`.
pub fn audit_necessary_conditions(
    code: &[BitString],
    ell: usize,
    delta: usize,
    block_decodable: bool,
) -> Result<VerificationReport> {
    let n = check_shape(code, ell, delta)?;
    let m = n / ell;
    let d = delta;
    let mut report = VerificationReport::new(ReportKind::ConstraintAudit, ReportParams::Raw { delta, ell, n });
    // bit i (1-based) of block j
    let at = |x: &BitString, j: usize, i: usize| x.bit((j - 1) * ell + i);
    let mut checks = [0u64; 4];
    let mut failed = [0u64; 4];
    let mut note = |item: usize, msg: String, report: &mut VerificationReport| {
        failed[item] += 1;
        if failed[item] <= 8 {
            report.findings.push(msg);
        }
    };

    for x in code {
        for j in 1..m {
            for i1 in ell - d + 1..=ell {
                for i2 in 1..=d {
                    checks[0] += 1;
                    if at(x, j, i1) == at(x, j + 1, i2) {
                        note(0, format!("(a) {x}: block {j} bit {i1} equals block {} bit {i2}", j + 1), &mut report);
                    }
                }
                if block_decodable && d < ell {
                    checks[2] += 1;
                    if at(x, j, i1) == at(x, j + 1, d + 1) {
                        note(2, format!("(c) {x}: block {j} bit {i1} equals block {} bit {}", j + 1, d + 1), &mut report);
                    }
                }
            }
        }
        if m >= 3 && 3 * d <= ell {
            for j in 1..=m - 2 {
                checks[3] += 1;
                let inner: Vec<u8> = (d + 1..=3 * d).map(|i| at(x, j + 1, i)).collect();
                let straddle: Vec<u8> = (ell - d + 1..=ell)
                    .map(|i| at(x, j, i))
                    .chain((1..=d).map(|i| at(x, j + 1, i)))
                    .collect();
                if inner == straddle {
                    note(3, format!("(d) {x}: block {} bits {}..{} repeat boundary {j}", j + 1, d + 1, 3 * d), &mut report);
                }
            }
        }
    }
    for j in 1..m {
        checks[1] += 1;
        let polarities: BTreeSet<u8> = code.iter().map(|x| at(x, j, ell)).collect();
        if polarities.len() > 1 {
            note(1, format!("(b) boundary {j}: codewords end block {j} with both 0 and 1"), &mut report);
        }
    }

    for (k, name) in ["a", "b", "c", "d"].iter().enumerate() {
        report.metric(&format!("checks_{name}"), checks[k]);
        report.metric(&format!("violations_{name}"), failed[k]);
    }
    report.metric("code_size", code.len());
    report.passed = failed.iter().all(|&f| f == 0);
    Ok(report)
}
