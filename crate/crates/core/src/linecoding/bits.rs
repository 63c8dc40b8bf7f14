//! MSB-first bit vectors.

use std::ops::{Deref, DerefMut};

use crate::{Error, Result};

/// Ordered bits stored one per byte (each 0 or 1).
///
/// Bytes are packed MSB-first: the most significant bit of a byte is
/// transmitted first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BitVector(Vec<u8>);

impl BitVector {
    pub fn new() -> Self {
        BitVector(Vec::new())
    }

    pub fn with_capacity(n: usize) -> Self {
        BitVector(Vec::with_capacity(n))
    }

    /// Wraps raw bits. Any nonzero value is normalized to 1.
    pub fn from_bits(bits: impl IntoIterator<Item = u8>) -> Self {
        BitVector(bits.into_iter().map(|b| (b != 0) as u8).collect())
    }

    pub fn from_bytes(bytes: &[u8]) -> Self {
        let mut v = Vec::with_capacity(bytes.len() * 8);
        for &byte in bytes {
            v.extend((0..8).rev().map(|i| (byte >> i) & 1));
        }
        BitVector(v)
    }

    /// The low `width` bits of `word`, most significant first.
    pub fn from_word(word: u64, width: usize) -> Self {
        assert!(width <= 64);
        BitVector((0..width).rev().map(|i| ((word >> i) & 1) as u8).collect())
    }

    pub fn push(&mut self, bit: u8) {
        self.0.push((bit != 0) as u8);
    }

    pub fn extend_from_bits(&mut self, bits: &[u8]) {
        self.0.extend(bits.iter().map(|&b| (b != 0) as u8));
    }

    pub fn to_bytes(&self) -> Result<Vec<u8>> {
        deserialize_bits(self)
    }

    pub fn into_inner(self) -> Vec<u8> {
        self.0
    }
}

impl Deref for BitVector {
    type Target = [u8];
    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl DerefMut for BitVector {
    fn deref_mut(&mut self) -> &mut [u8] {
        &mut self.0
    }
}

impl FromIterator<u8> for BitVector {
    fn from_iter<I: IntoIterator<Item = u8>>(iter: I) -> Self {
        BitVector::from_bits(iter)
    }
}

/// Packs up to 64 bits MSB-first into an integer.
#[inline]
pub fn pack_word(bits: &[u8]) -> u64 {
    debug_assert!(bits.len() <= 64);
    bits.iter().fold(0u64, |acc, &b| (acc << 1) | (b & 1) as u64)
}

/// Parallel-to-serial conversion.
pub fn serialize_bytes(bytes: &[u8]) -> BitVector {
    BitVector::from_bytes(bytes)
}

/// Serial-to-parallel conversion. The bit count must be a multiple of 8.
pub fn deserialize_bits(bits: &[u8]) -> Result<Vec<u8>> {
    if !bits.len().is_multiple_of(8) {
        return Err(Error::length("bit stream", "a multiple of 8", bits.len()));
    }
    Ok(bits
        .chunks_exact(8)
        .map(|c| c.iter().fold(0u8, |acc, &b| (acc << 1) | (b & 1)))
        .collect())
}
