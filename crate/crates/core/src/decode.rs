//! Block-by-block decoders.
//!
//! Each decoder walks the received string `y` from the left, keeping the
//! start `alpha_j` (1-based) of the current block in `y`. The counts of
//! block `j < m` are a function of a short window of `y` at `alpha_j`; the
//! last block's counts follow from `alpha_m` and `|y|`.
//!
//! Every bit read goes through [`Reader::read`], tagged with a probe site.
//! That single choke point is what the read-tracing API and the mutation
//! hooks build on.

use crate::bits::BitString;
use crate::count::{BlockCount, CountVector};
use crate::error::{Error, Result};
use crate::params::{CodeParams, Family};

/// Offset applied to one probe site of a decoder. Used to check that the
/// exhaustive verifier notices off-by-one probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProbeShift {
    pub site: usize,
    pub offset: isize,
}

/// Number of distinct probe sites of each decoder.
pub fn probe_sites(family: Family) -> usize {
    match family {
        Family::DeletionDetect => 1,
        Family::InsertDetect1 => 1,
        Family::InsertDetect2 => 6,
        Family::MixedDetect1 => 3,
    }
}

struct Reader<'a, F: FnMut(usize, usize)> {
    y: &'a BitString,
    block: usize,
    shift: Option<ProbeShift>,
    on_read: F,
}

impl<'a, F: FnMut(usize, usize)> Reader<'a, F> {
    fn read(&mut self, site: usize, pos: usize) -> Result<u8> {
        let pos = match self.shift {
            Some(s) if s.site == site => pos as isize + s.offset,
            _ => pos as isize,
        };
        if pos < 1 || pos as usize > self.y.len() {
            return Err(Error::MalformedReceived(format!(
                "block {}: probe at {pos} outside [1, {}]",
                self.block,
                self.y.len()
            )));
        }
        (self.on_read)(self.block, pos as usize);
        Ok(self.y.bit(pos as usize))
    }
}

/// Decodes `y` with the decoder of `params.family()`.
pub fn decode(params: &CodeParams, y: &BitString) -> Result<CountVector> {
    decode_impl(params, y, None, |_, _| {})
}

/// Like [`decode`], reporting every bit read as `(block, position)` with
/// 1-based block index and 1-based position in `y`.
pub fn decode_traced<F: FnMut(usize, usize)>(
    params: &CodeParams,
    y: &BitString,
    on_read: F,
) -> Result<CountVector> {
    decode_impl(params, y, None, on_read)
}

/// Decoder with one probe site displaced by `shift.offset` positions.
#[cfg(feature = "mutation")]
pub fn decode_shifted(
    params: &CodeParams,
    y: &BitString,
    shift: ProbeShift,
) -> Result<CountVector> {
    decode_impl(params, y, Some(shift), |_, _| {})
}

pub fn decode_deletions(params: &CodeParams, y: &BitString) -> Result<CountVector> {
    expect_family(params, Family::DeletionDetect)?;
    decode(params, y)
}

pub fn decode_ins1(params: &CodeParams, y: &BitString) -> Result<CountVector> {
    expect_family(params, Family::InsertDetect1)?;
    decode(params, y)
}

pub fn decode_ins2(params: &CodeParams, y: &BitString) -> Result<CountVector> {
    expect_family(params, Family::InsertDetect2)?;
    decode(params, y)
}

pub fn decode_mixed1(params: &CodeParams, y: &BitString) -> Result<CountVector> {
    expect_family(params, Family::MixedDetect1)?;
    decode(params, y)
}

fn expect_family(params: &CodeParams, family: Family) -> Result<()> {
    if params.family() == family {
        Ok(())
    } else {
        Err(Error::RangeViolation(format!(
            "decoder for {family} called with {params}"
        )))
    }
}

fn decode_impl<F: FnMut(usize, usize)>(
    params: &CodeParams,
    y: &BitString,
    shift: Option<ProbeShift>,
    on_read: F,
) -> Result<CountVector> {
    let mut reader = Reader {
        y,
        block: 1,
        shift,
        on_read,
    };
    let m = params.blocks();
    let ell = params.ell();
    let mut per_block = Vec::with_capacity(m);
    let mut alpha = 1usize;
    for j in 1..m {
        reader.block = j;
        let count = match params.family() {
            Family::DeletionDetect => deletion_block(&mut reader, alpha, ell, params.delta())?,
            Family::InsertDetect1 => ins1_block(&mut reader, alpha, ell)?,
            Family::InsertDetect2 => ins2_block(&mut reader, alpha, ell)?,
            Family::MixedDetect1 => mixed1_block(&mut reader, alpha, ell)?,
        };
        per_block.push(count);
        alpha = alpha + ell + count.insertions - count.deletions;
    }
    per_block.push(last_block(params, y, alpha)?);
    Ok(CountVector { per_block })
}

/// Counts of block `m` from the number of bits left after `alpha_m`.
fn last_block(params: &CodeParams, y: &BitString, alpha: usize) -> Result<BlockCount> {
    let remaining = (y.len() + 1) as isize - alpha as isize;
    let diff = remaining - params.ell() as isize;
    let count = if diff < 0 {
        BlockCount::new((-diff) as usize, 0)
    } else {
        BlockCount::new(0, diff as usize)
    };
    if !params.admits(count.deletions, count.insertions) {
        return Err(Error::MalformedReceived(format!(
            "last block has {remaining} bits, block length is {}",
            params.ell()
        )));
    }
    Ok(count)
}

// Deletions: scan s^j = y[alpha+ell-delta, alpha+ell-1] for its first 0.
// A 0 at offset beta (1-based) means delta - beta + 1 deletions.
fn deletion_block<F: FnMut(usize, usize)>(
    r: &mut Reader<'_, F>,
    alpha: usize,
    ell: usize,
    delta: usize,
) -> Result<BlockCount> {
    let start = alpha + ell - delta;
    for beta in 1..=delta {
        if r.read(0, start + beta - 1)? == 0 {
            return Ok(BlockCount::new(delta - beta + 1, 0));
        }
    }
    Ok(BlockCount::ZERO)
}

// One insertion: the bit right after the unextended block. It is the
// block's final 1 pushed right by an insertion, or the 0 opening the next
// block. A 1 inserted at the start of the next block also reads as 1 and is
// attributed to this block.
//
// Probe index resolved by exhaustive check: alpha + ell. The variant
// alpha + ell + 1 misreads the no-insertion case.
fn ins1_block<F: FnMut(usize, usize)>(
    r: &mut Reader<'_, F>,
    alpha: usize,
    ell: usize,
) -> Result<BlockCount> {
    let probe = r.read(0, alpha + ell)?;
    Ok(BlockCount::new(0, probe as usize))
}

// Two insertions. Decision tree on (y[a+l], y[a+l+1]):
//   (0,0) -> 0, (1,0) -> 1, (1,1) -> 2,
//   (0,1) -> count zeros z in y[a+l+2, a+l+5]:
//       z <= 1 -> 0, z >= 3 -> 2,
//       z == 2 -> y[a+l+3] == 0 -> 2,
//                 else (y[a+2l], y[a+2l+1]) == (1,1) -> 0, else 2.
//
// The z == 2 test is the pair (y[a+l+2], y[a+l+3]) == (0,0) reduced to
// its second bit: with no insertion in block j, a (0,1) start means a 1
// went in at gap 1 of block j+1, and then y[a+l+2] = 1 forces
// y[a+l+3..] = 0111, one zero. A (1,0) pair here therefore always
// comes with insertions in block j, and both tests answer 2.
//
// In the z == 2 branch, two insertions in block j leave block j+1 intact
// from a+l+2, so its last two bits (both 1) sit at a+2l, a+2l+1 only when
// block j had none. Checking (a+l+2, a+l+5) first, or the pair one
// position to the right, both disagree with the oracle.
fn ins2_block<F: FnMut(usize, usize)>(
    r: &mut Reader<'_, F>,
    alpha: usize,
    ell: usize,
) -> Result<BlockCount> {
    let a = alpha;
    let pair = (r.read(0, a + ell)?, r.read(1, a + ell + 1)?);
    let ins = match pair {
        (0, 0) => 0,
        (1, 0) => 1,
        (1, 1) => 2,
        _ => {
            let mut zeros = 0;
            for k in 0..4 {
                if r.read(2, a + ell + 2 + k)? == 0 {
                    zeros += 1;
                }
            }
            match zeros {
                0 | 1 => 0,
                3 | 4 => 2,
                _ => {
                    if r.read(3, a + ell + 3)? == 0 {
                        2
                    } else if (r.read(4, a + 2 * ell)?, r.read(5, a + 2 * ell + 1)?) == (1, 1) {
                        0
                    } else {
                        2
                    }
                }
            }
        }
    };
    Ok(BlockCount::new(0, ins))
}

// One edit, deletion or insertion. Block j ends with 011 and block j+1
// starts with 000. With z = y[a+l], w = y[a+l-1], u = y[a+l-3]:
//   z == 1, w == 1        -> insertion (the final 1 was pushed right),
//   z == 1, w == 0, u == 0 -> insertion (a 0 went in before the final 1),
//   z == 1, w == 0, u == 1 -> deletion, followed by a 1 inserted right
//                             after the first 0 of block j+1,
//   z == 0, w == 0        -> deletion (the next block's 0 was pulled left),
//   z == 0, w == 1        -> u == 0: no error, u == 1: deletion followed by
//                            a 1 inserted at the start of block j+1.
// u is 1 exactly when the lost bit sat at or before the suffix's 0.
fn mixed1_block<F: FnMut(usize, usize)>(
    r: &mut Reader<'_, F>,
    alpha: usize,
    ell: usize,
) -> Result<BlockCount> {
    let a = alpha;
    let z = r.read(0, a + ell)?;
    let w = r.read(1, a + ell - 1)?;
    if z == 0 && w == 0 {
        return Ok(BlockCount::new(1, 0));
    }
    let u = r.read(2, a + ell - 3)?;
    Ok(match (z, w, u) {
        (1, 0, 1) | (0, 1, 1) => BlockCount::new(1, 0),
        (1, _, _) => BlockCount::new(0, 1),
        _ => BlockCount::ZERO,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        let p = CodeParams::deletion(1, 5, 20).unwrap();
        let v = decode_deletions(&p, &bs("10010011100010100")).unwrap();
        assert_eq!(v, CountVector::from_deletions(&[1, 0, 1, 1]));
        let v = decode_deletions(&p, &bs("10101001110001100100")).unwrap();
        assert_eq!(v, CountVector::zeros(4));
    }

    #[test]
    fn small_deletion_trace() {
        // 101001 with x_2 deleted
        let p = CodeParams::deletion(1, 3, 6).unwrap();
        let v = decode_deletions(&p, &bs("11001")).unwrap();
        assert_eq!(v, CountVector::from_deletions(&[1, 0]));
    }

    #[test]
    fn ins1_examples() {
        let p = CodeParams::insertion1(3, 6).unwrap();
        assert_eq!(
            decode_ins1(&p, &bs("0111011")).unwrap(),
            CountVector::from_insertions(&[1, 0])
        );
        assert_eq!(
            decode_ins1(&p, &bs("011011")).unwrap(),
            CountVector::zeros(2)
        );
    }

    #[test]
    fn malformed_inputs_fail_loudly() {
        let p = CodeParams::deletion(1, 5, 20).unwrap();
        assert!(matches!(
            decode(&p, &bs("1001")),
            Err(Error::MalformedReceived(_))
        ));
        // too long: last block would need insertions
        assert!(matches!(
            decode(&p, &bs("101010011100011001001")),
            Err(Error::MalformedReceived(_))
        ));
        let p = CodeParams::insertion1(3, 6).unwrap();
        assert!(matches!(
            decode(&p, &bs("01101")),
            Err(Error::MalformedReceived(_))
        ));
    }

    #[test]
    fn wrong_family_rejected() {
        let p = CodeParams::insertion1(3, 6).unwrap();
        assert!(decode_deletions(&p, &bs("011011")).is_err());
    }

    #[test]
    fn traced_reads_stay_in_block_window() {
        let p = CodeParams::deletion(1, 5, 20).unwrap();
        let mut reads = Vec::new();
        decode_traced(&p, &bs("10010011100010100"), |j, pos| reads.push((j, pos))).unwrap();
        assert_eq!(reads, vec![(1, 5), (2, 9), (3, 14)]);
    }
}
