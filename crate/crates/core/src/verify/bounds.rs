use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Converse redundancy bounds for codes detecting up to `delta` deletions
/// per block, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundValues {
    pub delta: usize,
    pub ell: usize,
    pub n: usize,
    /// 2 delta (m - 1): any detecting code.
    pub bound1: f64,
    /// bound1 + epsilon (m - 2): any detecting code, m >= 3.
    pub bound_thm2: f64,
    /// (2 delta + 1)(m - 1): block-by-block decodable codes.
    pub bound_thm3: f64,
    pub epsilon: f64,
    /// Redundancy of the fixed-position deletion code.
    pub construction_redundancy: usize,
    /// False when m < 3; `bound_thm2` then equals `bound1` and says nothing new.
    pub thm2_applies: bool,
}

/// 2 delta - log2(2^(2 delta) - 1).
pub fn epsilon(delta: usize) -> f64 {
    let q = (2 * delta) as f64;
    q - (q.exp2() - 1.0).log2()
}

pub fn bounds(delta: usize, ell: usize, n: usize) -> Result<BoundValues> {
    if delta == 0 || ell == 0 || n == 0 {
        return Err(Error::RangeViolation(
            "delta, ell and n must be positive".into(),
        ));
    }
    if 2 * delta >= ell {
        return Err(Error::RangeViolation(format!(
            "need 2*delta < ell, got delta={delta}, ell={ell}"
        )));
    }
    if n % ell != 0 {
        return Err(Error::NonDivisible { ell, n });
    }
    let m = n / ell;
    let eps = epsilon(delta);
    let bound1 = (2 * delta * (m - 1)) as f64;
    let extra = m.saturating_sub(2) as f64;
    Ok(BoundValues {
        delta,
        ell,
        n,
        bound1,
        bound_thm2: bound1 + eps * extra,
        bound_thm3: ((2 * delta + 1) * (m - 1)) as f64,
        epsilon: eps,
        construction_redundancy: (2 * delta + 1) * (m - 1),
        thm2_applies: m >= 3,
    })
}

impl BoundValues {
    /// Largest code size allowed by a redundancy of `bits`:
    /// floor(2^(n - bits)), with a small slack for rounding.
    pub fn size_cap(&self, bits: f64) -> u64 {
        ((self.n as f64 - bits).exp2() + 1e-9).floor() as u64
    }

    /// Tightest cap on any detecting code (bound_thm2 when it applies).
    pub fn general_cap(&self) -> u64 {
        if self.thm2_applies {
            self.size_cap(self.bound_thm2)
        } else {
            self.size_cap(self.bound1)
        }
    }

    /// Cap on block-by-block decodable codes.
    pub fn block_decodable_cap(&self) -> u64 {
        self.size_cap(self.bound_thm3).min(self.general_cap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let b = bounds(1, 3, 9).unwrap();
        assert!((b.bound_thm2 - (6.0 - 3f64.log2())).abs() < 1e-12);
        assert_eq!(b.general_cap(), 24);
        let b = bounds(1, 3, 6).unwrap();
        assert_eq!((b.bound1, b.bound_thm3, b.construction_redundancy), (2.0, 3.0, 3));
        assert!(!b.thm2_applies);
        assert_eq!(b.general_cap(), 16);
        assert_eq!(b.block_decodable_cap(), 8);
        let b = bounds(2, 5, 20).unwrap();
        assert_eq!(b.bound_thm3, 15.0);
        assert_eq!(b.construction_redundancy, 15);
    }

    #[test]
    fn epsilon_in_unit_interval_and_decreasing() {
        let mut prev = 1.0;
        for d in 1..=20 {
            let e = epsilon(d);
            assert!(e > 0.0 && e < prev, "delta={d} eps={e}");
            prev = e;
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(bounds(2, 4, 8).is_err());
        assert!(bounds(1, 3, 10).is_err());
        assert!(bounds(0, 3, 9).is_err());
    }
}
