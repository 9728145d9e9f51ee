//! Ground-truth attribution of edit counts.
//!
//! For a transmitted `x` and received `y`, the consistent vectors are the
//! count vectors of all admissible patterns that turn `x` into `y`. They
//! are found by brute force: every admissible edit of every block is
//! applied to that block, and the outcomes are chained left to right
//! through `y`.
//!
//! When several vectors are consistent, the canonical one places every
//! block boundary of `y` as far right as possible: it maximizes the
//! per-block net length change `(ins_1 - del_1, ..., ins_m - del_m)`
//! lexicographically, then minimizes `(del_1, ..., del_m)`. For
//! insertion-only codes this is the lexicographically largest insertion
//! vector, so an ambiguous insertion at a boundary goes to the earlier
//! block; a boundary transposition reads as an insertion in block `j` and
//! a deletion in block `j + 1`; and an untouched word reads as error-free.

use std::collections::{BTreeSet, HashMap};

use super::pattern::max_gap;
use super::space::BlockEditSpace;
use crate::bits::BitString;
use crate::count::{BlockCount, CountVector};
use crate::error::{Error, Result};
use crate::params::CodeParams;

/// Cap on the number of vectors [`Attribution::consistent_vectors`] returns.
pub const MAX_CONSISTENT_VECTORS: usize = 1 << 20;

/// Upper limit on per-block edit spaces the oracle will enumerate.
pub const MAX_BLOCK_EDITS: u64 = 1 << 20;

type BlockOutcomes = HashMap<Vec<u8>, Vec<BlockCount>>;

/// Per-codeword attribution oracle. Building it enumerates each block's
/// edits once; queries for many `y` then reuse the tables.
#[derive(Debug, Clone)]
pub struct Attribution {
    params: CodeParams,
    // outcome string -> distinct counts producing it, per block
    blocks: Vec<BlockOutcomes>,
}

impl Attribution {
    pub fn new(params: &CodeParams, x: &BitString) -> Result<Self> {
        if x.len() != params.n() {
            return Err(Error::LengthMismatch {
                expected: params.n(),
                got: x.len(),
            });
        }
        let m = params.blocks();
        let mut blocks = Vec::with_capacity(m);
        let mut buf = Vec::new();
        for j in 1..=m {
            let space = BlockEditSpace::new(params, j);
            if space.len() > MAX_BLOCK_EDITS {
                return Err(Error::TooLarge(format!(
                    "block {j} of {params} has {} edits",
                    space.len()
                )));
            }
            let block = x.block(j, params.ell());
            let mut outcomes = BlockOutcomes::new();
            for edit in space.iter() {
                buf.clear();
                edit.apply_to(block, &mut buf);
                let counts = outcomes.entry(buf.clone()).or_default();
                let c = edit.count();
                if !counts.contains(&c) {
                    counts.push(c);
                }
            }
            blocks.push(outcomes);
        }
        Ok(Self {
            params: *params,
            blocks,
        })
    }

    fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        let ell = self.params.ell();
        ell - self.params.max_deletions()..=ell + self.params.max_insertions()
    }

    fn outcomes_at<'s>(
        &'s self,
        j: usize,
        y: &'s [u8],
        offset: usize,
    ) -> impl Iterator<Item = (usize, &'s [BlockCount])> + 's {
        self.lengths().filter_map(move |len| {
            let end = offset + len;
            if end > y.len() {
                return None;
            }
            self.blocks[j]
                .get(&y[offset..end])
                .map(|counts| (len, counts.as_slice()))
        })
    }

    /// Every count vector of an admissible pattern mapping `x` to `y`.
    pub fn consistent_vectors(&self, y: &BitString) -> Result<BTreeSet<CountVector>> {
        let mut out = BTreeSet::new();
        let mut path = Vec::with_capacity(self.blocks.len());
        self.walk(y.as_slice(), 0, 0, &mut path, &mut out)?;
        Ok(out)
    }

    fn walk(
        &self,
        y: &[u8],
        j: usize,
        offset: usize,
        path: &mut Vec<BlockCount>,
        out: &mut BTreeSet<CountVector>,
    ) -> Result<()> {
        if j == self.blocks.len() {
            if offset == y.len() {
                out.insert(CountVector {
                    per_block: path.clone(),
                });
                if out.len() > MAX_CONSISTENT_VECTORS {
                    return Err(Error::TooLarge("too many consistent vectors".into()));
                }
            }
            return Ok(());
        }
        for (len, counts) in self.outcomes_at(j, y, offset) {
            for &c in counts {
                path.push(c);
                self.walk(y, j + 1, offset + len, path, out)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// The canonical consistent vector (see the module docs).
    ///
    /// Computed greedily: with suffix feasibility known, taking the longest
    /// feasible stretch of `y` for each block in turn maximizes the net
    /// change vector.
    pub fn canonical_vector(&self, y: &BitString) -> Result<CountVector> {
        let y = y.as_slice();
        let m = self.blocks.len();
        // feasible[j][a]: blocks j.. can consume exactly y[a..]
        let mut feasible = vec![vec![false; y.len() + 1]; m + 1];
        feasible[m][y.len()] = true;
        for j in (0..m).rev() {
            for a in 0..=y.len() {
                feasible[j][a] = self
                    .outcomes_at(j, y, a)
                    .any(|(len, _)| feasible[j + 1][a + len]);
            }
        }
        if !feasible[0][0] {
            return Err(Error::Unreachable);
        }
        let mut per_block = Vec::with_capacity(m);
        let mut offset = 0;
        for j in 0..m {
            let (len, counts) = self
                .outcomes_at(j, y, offset)
                .filter(|(len, _)| feasible[j + 1][offset + len])
                .max_by_key(|(len, _)| *len)
                .expect("feasible path continues");
            let best = counts
                .iter()
                .copied()
                .min_by_key(|c| c.deletions)
                .expect("non-empty outcome");
            per_block.push(best);
            offset += len;
        }
        Ok(CountVector { per_block })
    }
}

/// Order key of the canonical rule; the canonical vector is the maximum.
pub fn canonical_key(v: &CountVector) -> (Vec<isize>, std::cmp::Reverse<Vec<usize>>) {
    (
        v.per_block.iter().map(BlockCount::net).collect(),
        std::cmp::Reverse(v.deletions()),
    )
}

/// Picks the canonical vector out of a consistent set.
pub fn select_canonical<'a, I>(vectors: I) -> Option<CountVector>
where
    I: IntoIterator<Item = &'a CountVector>,
{
    vectors.into_iter().max_by_key(|v| canonical_key(v)).cloned()
}

pub fn consistent_vectors(
    params: &CodeParams,
    x: &BitString,
    y: &BitString,
) -> Result<BTreeSet<CountVector>> {
    Attribution::new(params, x)?.consistent_vectors(y)
}

pub fn canonical_vector(params: &CodeParams, x: &BitString, y: &BitString) -> Result<CountVector> {
    Attribution::new(params, x)?.canonical_vector(y)
}

fn is_subsequence(short: &[u8], long: &[u8]) -> bool {
    let mut it = long.iter();
    short.iter().all(|b| it.any(|c| c == b))
}

/// Whether some admissible pattern with counts `v` maps `x` to `y`.
///
/// Checked per block by subsequence embedding rather than by enumerating
/// edits, so it scales to long words. Each block must be pure deletion or
/// pure insertion, which holds for every family.
pub fn vector_is_consistent(
    params: &CodeParams,
    x: &BitString,
    y: &BitString,
    v: &CountVector,
) -> bool {
    let ell = params.ell();
    let m = params.blocks();
    if v.blocks() != m || x.len() != params.n() {
        return false;
    }
    let y = y.as_slice();
    let mut offset = 0;
    for (k, c) in v.per_block.iter().enumerate() {
        let j = k + 1;
        if !params.admits(c.deletions, c.insertions) {
            return false;
        }
        assert!(
            c.deletions == 0 || c.insertions == 0,
            "mixed edits within one block are not modelled"
        );
        let len = ell + c.insertions - c.deletions;
        if offset + len > y.len() {
            return false;
        }
        let s = &y[offset..offset + len];
        let b = x.block(j, ell);
        let ok = if c.insertions == 0 {
            is_subsequence(s, b)
        } else if max_gap(params, j) == ell {
            is_subsequence(b, s)
        } else {
            // every inserted bit sits before the block's last bit
            s[len - 1] == b[ell - 1] && is_subsequence(&b[..ell - 1], &s[..len - 1])
        };
        if !ok {
            return false;
        }
        offset += len;
    }
    offset == y.len()
}
