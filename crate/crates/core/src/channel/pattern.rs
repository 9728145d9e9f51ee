use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::BitString;
use crate::count::{BlockCount, CountVector};
use crate::error::{Error, Result};
use crate::params::CodeParams;

/// A bit inserted into a block. `gap` g places it right after original
/// position g of the block; g = 0 puts it before the first bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Insertion {
    pub gap: usize,
    pub bit: u8,
}

/// Edits applied to one block.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockEdit {
    /// Deleted original positions (1-based, strictly increasing).
    pub deletions: Vec<usize>,
    /// Inserted bits with non-decreasing gaps. Bits sharing a gap appear in
    /// list order.
    pub insertions: Vec<Insertion>,
}

impl BlockEdit {
    pub fn is_empty(&self) -> bool {
        self.deletions.is_empty() && self.insertions.is_empty()
    }

    pub fn count(&self) -> BlockCount {
        BlockCount::new(self.deletions.len(), self.insertions.len())
    }

    /// Applies the edit to one block's bits, appending the result to `out`.
    pub fn apply_to(&self, block: &[u8], out: &mut Vec<u8>) {
        let mut ins = self.insertions.iter().peekable();
        let mut del = self.deletions.iter().peekable();
        for g in 0..=block.len() {
            if g > 0 {
                if del.peek() == Some(&&g) {
                    del.next();
                } else {
                    out.push(block[g - 1]);
                }
            }
            while let Some(i) = ins.next_if(|i| i.gap == g) {
                out.push(i.bit);
            }
        }
    }
}

/// Per-block edits for a whole codeword; one entry per block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ErrorPattern {
    pub per_block: Vec<BlockEdit>,
}

/// Largest admissible insertion gap in block `j` (1-based).
///
/// An inserted bit that lands after the last bit of block `j < m` belongs
/// to block `j + 1`, so only the last block accepts gap `ell`.
pub fn max_gap(params: &CodeParams, j: usize) -> usize {
    if j == params.blocks() {
        params.ell()
    } else {
        params.ell() - 1
    }
}

impl ErrorPattern {
    pub fn empty(blocks: usize) -> Self {
        Self {
            per_block: vec![BlockEdit::default(); blocks],
        }
    }

    /// Checks block count, positions, gaps and per-block budgets.
    pub fn validate(&self, params: &CodeParams) -> Result<()> {
        let m = params.blocks();
        let ell = params.ell();
        if self.per_block.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: self.per_block.len(),
            });
        }
        for (k, edit) in self.per_block.iter().enumerate() {
            let j = k + 1;
            for (t, &pos) in edit.deletions.iter().enumerate() {
                if pos == 0 || pos > ell {
                    return Err(Error::PositionOutOfRange {
                        block: j,
                        position: pos,
                        ell,
                    });
                }
                if t > 0 && edit.deletions[t - 1] >= pos {
                    return Err(Error::Parse(format!(
                        "block {j}: deletion positions must be strictly increasing"
                    )));
                }
            }
            let max = max_gap(params, j);
            for (t, ins) in edit.insertions.iter().enumerate() {
                if ins.gap > max {
                    return Err(Error::GapOutOfRange {
                        block: j,
                        gap: ins.gap,
                        max,
                    });
                }
                if ins.bit > 1 {
                    return Err(Error::Parse(format!("block {j}: inserted bit must be 0 or 1")));
                }
                if t > 0 && edit.insertions[t - 1].gap > ins.gap {
                    return Err(Error::Parse(format!(
                        "block {j}: insertion gaps must be non-decreasing"
                    )));
                }
            }
            let c = edit.count();
            if !params.admits(c.deletions, c.insertions) {
                return Err(Error::BudgetExceeded {
                    block: j,
                    detail: format!(
                        "{} deletions and {} insertions for {}",
                        c.deletions,
                        c.insertions,
                        params
                    ),
                });
            }
        }
        Ok(())
    }

    /// Parses the text grammar: comma-separated `B=del@P` or `B=ins@G:V`
    /// entries (B 1-based block, P 1-based position, G gap, V bit).
    /// The empty string is the empty pattern. Entries for one block may
    /// come in any order; they are sorted.
    pub fn parse(params: &CodeParams, text: &str) -> Result<Self> {
        let mut pattern = Self::empty(params.blocks());
        for entry in text.split(',').map(str::trim).filter(|e| !e.is_empty()) {
            let bad = || Error::Parse(format!("bad pattern entry {entry:?}"));
            let (block, op) = entry.split_once('=').ok_or_else(bad)?;
            let block: usize = block.trim().parse().map_err(|_| bad())?;
            if block == 0 || block > params.blocks() {
                return Err(Error::Parse(format!(
                    "block {block} out of range [1, {}]",
                    params.blocks()
                )));
            }
            let edit = &mut pattern.per_block[block - 1];
            if let Some(pos) = op.strip_prefix("del@") {
                edit.deletions.push(pos.parse().map_err(|_| bad())?);
            } else if let Some(rest) = op.strip_prefix("ins@") {
                let (gap, bit) = rest.split_once(':').ok_or_else(bad)?;
                let bit: u8 = bit.parse().map_err(|_| bad())?;
                edit.insertions.push(Insertion {
                    gap: gap.parse().map_err(|_| bad())?,
                    bit,
                });
            } else {
                return Err(bad());
            }
        }
        for edit in &mut pattern.per_block {
            edit.deletions.sort_unstable();
            // stable: same-gap insertions keep their textual order
            edit.insertions.sort_by_key(|i| i.gap);
        }
        pattern.validate(params)?;
        Ok(pattern)
    }

    /// Structural counts: (|deletions|, |insertions|) per block.
    pub fn true_count_vector(&self) -> CountVector {
        CountVector {
            per_block: self.per_block.iter().map(BlockEdit::count).collect(),
        }
    }
}

impl fmt::Display for ErrorPattern {
    /// Same grammar as [`ErrorPattern::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            let r = if first { Ok(()) } else { f.write_str(",") };
            first = false;
            r
        };
        for (k, edit) in self.per_block.iter().enumerate() {
            for d in &edit.deletions {
                sep(f)?;
                write!(f, "{}=del@{}", k + 1, d)?;
            }
            for i in &edit.insertions {
                sep(f)?;
                write!(f, "{}=ins@{}:{}", k + 1, i.gap, i.bit)?;
            }
        }
        Ok(())
    }
}

/// Passes `x` through the channel described by `pattern`.
pub fn apply_pattern(
    params: &CodeParams,
    x: &BitString,
    pattern: &ErrorPattern,
) -> Result<BitString> {
    if x.len() != params.n() {
        return Err(Error::LengthMismatch {
            expected: params.n(),
            got: x.len(),
        });
    }
    pattern.validate(params)?;
    Ok(apply_unchecked(params, x, pattern))
}

pub(crate) fn apply_unchecked(params: &CodeParams, x: &BitString, pattern: &ErrorPattern) -> BitString {
    let ell = params.ell();
    let mut out = Vec::with_capacity(x.len() + 2 * params.blocks());
    for (k, edit) in pattern.per_block.iter().enumerate() {
        edit.apply_to(x.block(k + 1, ell), &mut out);
    }
    BitString::from_bits(out)
}

/// Per-block (deletions, insertions) of `pattern`, read off structurally.
pub fn true_count_vector(pattern: &ErrorPattern) -> CountVector {
    pattern.true_count_vector()
}
