//! Membership, systematic encoding and enumeration for the four families.
//!
//! Every family is defined by a set of fixed bits at the block boundaries.
//! The remaining ("free") positions carry the message, read left to right.

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::error::{Error, Result};
use crate::params::{CodeParams, Family};

/// One fixed bit of a code: 1-based position in `[1, n]` and its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedBit {
    pub position: usize,
    pub bit: u8,
}

/// Fixed bits of a code, sorted by strictly increasing position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPositionMap {
    pub entries: Vec<FixedBit>,
}

impl FixedPositionMap {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_pairs(&self) -> Vec<(usize, u8)> {
        self.entries.iter().map(|e| (e.position, e.bit)).collect()
    }
}

/// Required prefix and suffix of block `j` (1-based) out of `m`.
fn block_pattern(params: &CodeParams, j: usize) -> (Vec<u8>, Vec<u8>) {
    let m = params.blocks();
    let first = j == 1;
    let last = j == m;
    match params.family() {
        Family::DeletionDetect => {
            let d = params.delta();
            let prefix = if first { vec![] } else { vec![0; d + 1] };
            let suffix = if last { vec![] } else { vec![1; d] };
            (prefix, suffix)
        }
        Family::InsertDetect1 => {
            let prefix = if first { vec![] } else { vec![0] };
            let suffix = if last { vec![] } else { vec![1] };
            (prefix, suffix)
        }
        // blocks 2..=m carry both ends, including the last block
        Family::InsertDetect2 => {
            let prefix = if first { vec![] } else { vec![0, 0, 1, 1, 1] };
            (prefix, vec![0, 1, 1])
        }
        Family::MixedDetect1 => {
            let prefix = if first { vec![] } else { vec![0, 0, 0] };
            let suffix = if last { vec![] } else { vec![0, 1, 1] };
            (prefix, suffix)
        }
    }
}

pub fn fixed_positions(params: &CodeParams) -> FixedPositionMap {
    let ell = params.ell();
    let mut entries = Vec::new();
    for j in 1..=params.blocks() {
        let base = (j - 1) * ell;
        let (prefix, suffix) = block_pattern(params, j);
        for (k, &bit) in prefix.iter().enumerate() {
            entries.push(FixedBit {
                position: base + 1 + k,
                bit,
            });
        }
        let start = base + ell - suffix.len();
        for (k, &bit) in suffix.iter().enumerate() {
            entries.push(FixedBit {
                position: start + 1 + k,
                bit,
            });
        }
    }
    FixedPositionMap { entries }
}

/// Number of redundant bits, by closed form.
pub fn redundancy(params: &CodeParams) -> usize {
    let m = params.blocks();
    match params.family() {
        Family::DeletionDetect => (2 * params.delta() + 1) * (m - 1),
        Family::InsertDetect1 => 2 * (m - 1),
        Family::InsertDetect2 => 8 * m - 5,
        Family::MixedDetect1 => 6 * (m - 1),
    }
}

/// Message length `n - redundancy`.
pub fn message_len(params: &CodeParams) -> usize {
    params.n() - redundancy(params)
}

/// Per-position template: `Some(bit)` at fixed positions, `None` at free ones.
fn template(params: &CodeParams) -> Vec<Option<u8>> {
    let mut t = vec![None; params.n()];
    for e in fixed_positions(params).entries {
        t[e.position - 1] = Some(e.bit);
    }
    t
}

pub fn is_codeword(params: &CodeParams, x: &BitString) -> bool {
    x.len() == params.n()
        && fixed_positions(params)
            .entries
            .iter()
            .all(|e| x.bit(e.position) == e.bit)
}

/// Systematic encoder: message bits fill the free positions in increasing
/// position order.
pub fn encode(params: &CodeParams, message: &BitString) -> Result<BitString> {
    let k = message_len(params);
    if message.len() != k {
        return Err(Error::LengthMismatch {
            expected: k,
            got: message.len(),
        });
    }
    let mut msg = message.iter();
    let bits = template(params)
        .into_iter()
        .map(|slot| slot.unwrap_or_else(|| msg.next().expect("message length checked")))
        .collect();
    Ok(BitString::from_bits(bits))
}

/// Reads the free positions of `x` back into a message.
pub fn extract_message(params: &CodeParams, x: &BitString) -> Result<BitString> {
    if x.len() != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n(),
            got: x.len(),
        });
    }
    let bits = template(params)
        .into_iter()
        .zip(x.iter())
        .filter_map(|(slot, b)| slot.is_none().then_some(b))
        .collect();
    Ok(BitString::from_bits(bits))
}

/// Upper limit on `n - redundancy` for [`enumerate_codewords`].
pub const MAX_ENUMERATION_BITS: usize = 30;

/// All codewords, in lexicographic message order.
pub fn enumerate_codewords(params: &CodeParams) -> Result<Codewords> {
    let k = message_len(params);
    if k > MAX_ENUMERATION_BITS {
        return Err(Error::TooLarge(format!(
            "{params} has 2^{k} codewords (limit 2^{MAX_ENUMERATION_BITS})"
        )));
    }
    Ok(Codewords {
        template: template(params),
        k,
        next: 0,
        end: 1u64 << k,
    })
}

/// Iterator returned by [`enumerate_codewords`].
#[derive(Debug, Clone)]
pub struct Codewords {
    template: Vec<Option<u8>>,
    k: usize,
    next: u64,
    end: u64,
}

impl Iterator for Codewords {
    type Item = BitString;

    fn next(&mut self) -> Option<BitString> {
        if self.next >= self.end {
            return None;
        }
        let msg = self.next;
        self.next += 1;
        let mut shift = self.k;
        let bits = self
            .template
            .iter()
            .map(|slot| {
                slot.unwrap_or_else(|| {
                    shift -= 1;
                    ((msg >> shift) & 1) as u8
                })
            })
            .collect();
        Some(BitString::from_bits(bits))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords {}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn fixed_positions_small() {
        let d = CodeParams::deletion(1, 3, 6).unwrap();
        assert_eq!(fixed_positions(&d).as_pairs(), vec![(3, 1), (4, 0), (5, 0)]);
        let i = CodeParams::insertion1(3, 6).unwrap();
        assert_eq!(fixed_positions(&i).as_pairs(), vec![(3, 1), (4, 0)]);
        let d = CodeParams::deletion(1, 5, 20).unwrap();
        assert_eq!(fixed_positions(&d).len(), 9);
    }

    #[test]
    fn insertion2_constrains_last_block_suffix() {
        let p = CodeParams::insertion2(9, 18).unwrap();
        let pairs = fixed_positions(&p).as_pairs();
        assert_eq!(
            pairs,
            vec![
                (7, 0),
                (8, 1),
                (9, 1),
                (10, 0),
                (11, 0),
                (12, 1),
                (13, 1),
                (14, 1),
                (16, 0),
                (17, 1),
                (18, 1)
            ]
        );
    }

    #[test]
    fn redundancy_formulas() {
        assert_eq!(redundancy(&CodeParams::deletion(1, 5, 20).unwrap()), 9);
        assert_eq!(redundancy(&CodeParams::insertion2(9, 18).unwrap()), 11);
        assert_eq!(redundancy(&CodeParams::mixed1(7, 14).unwrap()), 6);
        assert_eq!(redundancy(&CodeParams::insertion1(3, 9).unwrap()), 4);
    }

    #[test]
    fn worked_example_membership() {
        let p = CodeParams::deletion(1, 5, 20).unwrap();
        assert!(is_codeword(&p, &bs("10101 00111 00011 00100")));
        assert!(!is_codeword(&p, &bs("10100 00111 00011 00100")));
        assert!(!is_codeword(&p, &bs("10101 00111 00011 0010")));
    }

    #[test]
    fn encode_small() {
        let d = CodeParams::deletion(1, 3, 6).unwrap();
        assert_eq!(encode(&d, &bs("101")).unwrap(), bs("101001"));
        assert_eq!(encode(&d, &bs("000")).unwrap(), bs("001000"));
        let i = CodeParams::insertion1(3, 6).unwrap();
        assert_eq!(encode(&i, &bs("0110")).unwrap(), bs("011010"));
        assert_eq!(
            encode(&d, &bs("10")),
            Err(Error::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn middle_block_fully_fixed() {
        // ell = 2*delta + 1 leaves no free bit in interior blocks.
        let p = CodeParams::deletion(1, 3, 9).unwrap();
        let x = encode(&p, &bs("000")).unwrap();
        assert_eq!(x, bs("001001000"));
        assert_eq!(extract_message(&p, &x).unwrap(), bs("000"));
    }

    #[test]
    fn enumeration_matches_membership_scan() {
        let d = CodeParams::deletion(1, 3, 6).unwrap();
        let words: Vec<_> = enumerate_codewords(&d).unwrap().collect();
        assert_eq!(words.len(), 8);
        let scan = (0..64u64)
            .map(|v| BitString::from_u64(v, 6))
            .filter(|x| is_codeword(&d, x))
            .count();
        assert_eq!(scan, 8);
        assert_eq!(
            enumerate_codewords(&CodeParams::insertion1(3, 6).unwrap())
                .unwrap()
                .count(),
            16
        );
        assert_eq!(
            enumerate_codewords(&CodeParams::mixed1(7, 14).unwrap())
                .unwrap()
                .count(),
            256
        );
    }

    #[test]
    fn enumeration_guard() {
        let p = CodeParams::deletion(1, 32, 64).unwrap();
        assert!(matches!(enumerate_codewords(&p), Err(Error::TooLarge(_))));
    }
}
