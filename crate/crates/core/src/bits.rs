//! Bit strings with 1-based indexing.
//!
//! Positions in the public API are 1-based: `x.bit(1)` is the first bit and
//! `x.range(i, j)` is the substring `x_i ... x_j` (empty when `i == j + 1`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered sequence of bits. Each stored byte is 0 or 1.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString {
    bits: Vec<u8>,
}

impl BitString {
    pub fn new() -> Self {
        Self { bits: Vec::new() }
    }

    pub fn zeros(len: usize) -> Self {
        Self { bits: vec![0; len] }
    }

    /// Builds a string from 0/1 bytes.
    ///
    /// Panics if any byte is not 0 or 1.
    pub fn from_bits(bits: Vec<u8>) -> Self {
        assert!(bits.iter().all(|&b| b <= 1), "bits must be 0 or 1");
        Self { bits }
    }

    /// The low `len` bits of `value`, most significant first.
    pub fn from_u64(value: u64, len: usize) -> Self {
        assert!(len <= 64);
        let bits = (0..len).rev().map(|k| ((value >> k) & 1) as u8).collect();
        Self { bits }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Bit at 1-based position `i`, or `None` when out of range.
    pub fn get(&self, i: usize) -> Option<u8> {
        if i == 0 {
            return None;
        }
        self.bits.get(i - 1).copied()
    }

    /// Bit at 1-based position `i`. Panics when out of range.
    pub fn bit(&self, i: usize) -> u8 {
        self.get(i)
            .unwrap_or_else(|| panic!("index {i} out of range [1, {}]", self.len()))
    }

    /// Sets the bit at 1-based position `i`.
    pub fn set(&mut self, i: usize, value: u8) {
        assert!(value <= 1);
        self.bits[i - 1] = value;
    }

    /// Substring `x_i ... x_j` (1-based, inclusive).
    ///
    /// Requires `1 <= i <= j + 1` and `j <= len`.
    pub fn range(&self, i: usize, j: usize) -> &[u8] {
        assert!(i >= 1 && i <= j + 1 && j <= self.len(), "bad range [{i}, {j}]");
        &self.bits[i - 1..j]
    }

    /// The `j`-th block (1-based) of length `ell`.
    pub fn block(&self, j: usize, ell: usize) -> &[u8] {
        self.range((j - 1) * ell + 1, j * ell)
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.bits
    }

    pub fn push(&mut self, bit: u8) {
        assert!(bit <= 1);
        self.bits.push(bit);
    }

    pub fn extend_from_slice(&mut self, bits: &[u8]) {
        debug_assert!(bits.iter().all(|&b| b <= 1));
        self.bits.extend_from_slice(bits);
    }

    pub fn count_zeros(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 0).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.bits.iter().copied()
    }
}

impl From<&[u8]> for BitString {
    fn from(bits: &[u8]) -> Self {
        Self::from_bits(bits.to_vec())
    }
}

impl FromStr for BitString {
    type Err = Error;

    /// Parses a string of '0'/'1' characters. Spaces and underscores are
    /// accepted as visual separators.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (k, c) in s.chars().enumerate() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                ' ' | '_' => {}
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} at offset {k}"
                    )))
                }
            }
        }
        Ok(Self { bits })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl Serialize for BitString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
