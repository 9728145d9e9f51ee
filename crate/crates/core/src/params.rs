use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The four code families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Up to `delta` deletions per block.
    DeletionDetect,
    /// Up to one insertion per block.
    InsertDetect1,
    /// Up to two insertions per block.
    InsertDetect2,
    /// Up to one edit (deletion or insertion) per block.
    MixedDetect1,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::DeletionDetect,
        Family::InsertDetect1,
        Family::InsertDetect2,
        Family::MixedDetect1,
    ];

    /// Short name used by the CLI and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            Family::DeletionDetect => "del",
            Family::InsertDetect1 => "ins1",
            Family::InsertDetect2 => "ins2",
            Family::MixedDetect1 => "mix1",
        }
    }

    /// Whether the per-block budget is fixed by the family (no `delta`).
    pub fn has_fixed_budget(self) -> bool {
        self != Family::DeletionDetect
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "del" | "deletion" => Ok(Family::DeletionDetect),
            "ins1" => Ok(Family::InsertDetect1),
            "ins2" => Ok(Family::InsertDetect2),
            "mix1" | "mixed" => Ok(Family::MixedDetect1),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// Validated code parameters. Construct through [`CodeParams::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeParams {
    family: Family,
    delta: usize,
    ell: usize,
    n: usize,
}

impl CodeParams {
    /// Validates raw parameters.
    ///
    /// `delta` is the per-block deletion budget and only matters for
    /// [`Family::DeletionDetect`]; it is ignored (stored as 0) otherwise.
    pub fn new(family: Family, delta: usize, ell: usize, n: usize) -> Result<Self> {
        if ell == 0 || n == 0 {
            return Err(Error::RangeViolation("ell and n must be positive".into()));
        }
        if n % ell != 0 {
            return Err(Error::NonDivisible { ell, n });
        }
        if 2 * ell > n {
            return Err(Error::RangeViolation(format!(
                "ell <= n/2 fails (ell = {ell}, n = {n})"
            )));
        }
        let delta = match family {
            Family::DeletionDetect => {
                if delta == 0 {
                    return Err(Error::RangeViolation("delta must be positive".into()));
                }
                if 2 * delta >= ell {
                    return Err(Error::RangeViolation(format!(
                        "2*delta < ell fails (delta = {delta}, ell = {ell})"
                    )));
                }
                delta
            }
            _ => {
                let min_ell = match family {
                    Family::InsertDetect1 => 2,
                    Family::InsertDetect2 => 8,
                    _ => 6,
                };
                if ell <= min_ell {
                    return Err(Error::RangeViolation(format!(
                        "{min_ell} < ell fails for {family} (ell = {ell})"
                    )));
                }
                0
            }
        };
        Ok(Self {
            family,
            delta,
            ell,
            n,
        })
    }

    pub fn deletion(delta: usize, ell: usize, n: usize) -> Result<Self> {
        Self::new(Family::DeletionDetect, delta, ell, n)
    }

    pub fn insertion1(ell: usize, n: usize) -> Result<Self> {
        Self::new(Family::InsertDetect1, 0, ell, n)
    }

    pub fn insertion2(ell: usize, n: usize) -> Result<Self> {
        Self::new(Family::InsertDetect2, 0, ell, n)
    }

    pub fn mixed1(ell: usize, n: usize) -> Result<Self> {
        Self::new(Family::MixedDetect1, 0, ell, n)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Deletion budget per block (0 for the fixed-budget families).
    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks `n / ell`.
    pub fn blocks(&self) -> usize {
        self.n / self.ell
    }

    pub fn max_deletions(&self) -> usize {
        match self.family {
            Family::DeletionDetect => self.delta,
            Family::MixedDetect1 => 1,
            _ => 0,
        }
    }

    pub fn max_insertions(&self) -> usize {
        match self.family {
            Family::InsertDetect1 | Family::MixedDetect1 => 1,
            Family::InsertDetect2 => 2,
            Family::DeletionDetect => 0,
        }
    }

    /// Whether `deletions` deletions together with `insertions` insertions
    /// fit in one block's budget.
    pub fn admits(&self, deletions: usize, insertions: usize) -> bool {
        match self.family {
            Family::MixedDetect1 => deletions + insertions <= 1,
            _ => deletions <= self.max_deletions() && insertions <= self.max_insertions(),
        }
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::DeletionDetect => write!(f, "D_{}({},{})", self.delta, self.ell, self.n),
            Family::InsertDetect1 => write!(f, "I_1({},{})", self.ell, self.n),
            Family::InsertDetect2 => write!(f, "I_2({},{})", self.ell, self.n),
            Family::MixedDetect1 => write!(f, "C_1({},{})", self.ell, self.n),
        }
    }
}
