use std::fmt;

use serde::{Deserialize, Serialize};

/// Deletions and insertions attributed to one block.
#[derive(
    Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct BlockCount {
    pub deletions: usize,
    pub insertions: usize,
}

impl BlockCount {
    pub const ZERO: BlockCount = BlockCount {
        deletions: 0,
        insertions: 0,
    };

    pub fn new(deletions: usize, insertions: usize) -> Self {
        Self {
            deletions,
            insertions,
        }
    }

    /// Change in the block's length on the channel.
    pub fn net(&self) -> isize {
        self.insertions as isize - self.deletions as isize
    }
}

/// Per-block edit counts, the output of every decoder.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CountVector {
    pub per_block: Vec<BlockCount>,
}

impl CountVector {
    pub fn zeros(blocks: usize) -> Self {
        Self {
            per_block: vec![BlockCount::ZERO; blocks],
        }
    }

    pub fn from_deletions(deletions: &[usize]) -> Self {
        Self {
            per_block: deletions.iter().map(|&d| BlockCount::new(d, 0)).collect(),
        }
    }

    pub fn from_insertions(insertions: &[usize]) -> Self {
        Self {
            per_block: insertions.iter().map(|&i| BlockCount::new(0, i)).collect(),
        }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Self {
            per_block: pairs.iter().map(|&(d, i)| BlockCount::new(d, i)).collect(),
        }
    }

    pub fn blocks(&self) -> usize {
        self.per_block.len()
    }

    pub fn deletions(&self) -> Vec<usize> {
        self.per_block.iter().map(|c| c.deletions).collect()
    }

    pub fn insertions(&self) -> Vec<usize> {
        self.per_block.iter().map(|c| c.insertions).collect()
    }

    pub fn total_deletions(&self) -> usize {
        self.per_block.iter().map(|c| c.deletions).sum()
    }

    pub fn total_insertions(&self) -> usize {
        self.per_block.iter().map(|c| c.insertions).sum()
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, values: impl Iterator<Item = usize>) -> fmt::Result {
    f.write_str("(")?;
    for (k, v) in values.enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

impl fmt::Display for CountVector {
    /// `del=(d1,...,dm) ins=(i1,...,im)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("del=")?;
        write_tuple(f, self.per_block.iter().map(|c| c.deletions))?;
        f.write_str(" ins=")?;
        write_tuple(f, self.per_block.iter().map(|c| c.insertions))
    }
}
