use crate::linecoding::bits::pack_word;
use crate::{Error, Result};

/// Preamble length in bits.
pub const PREAMBLE_BITS: usize = 32;
/// Correlators per bank, one per bit offset within a byte.
pub const CORRELATORS: usize = 8;
/// Bits seen by one bank: 32 + 7.
pub const BANK_WINDOW: usize = PREAMBLE_BITS + CORRELATORS - 1;

/// Number of agreeing bit positions, `32 − Hamming distance`.
#[inline]
pub fn correlate32(window: u32, preamble: u32) -> u32 {
    32 - (window ^ preamble).count_ones()
}

/// Scores of the 8 correlators over a 39-bit window.
/// `score[k]` correlates bits `k..k+32`.
pub fn bank_scan(bits: &[u8], preamble: u32) -> Result<[u32; CORRELATORS]> {
    if bits.len() != BANK_WINDOW {
        return Err(Error::length("correlator bank window", BANK_WINDOW, bits.len()));
    }
    let mut out = [0u32; CORRELATORS];
    for (k, score) in out.iter_mut().enumerate() {
        *score = correlate32(pack_word(&bits[k..k + PREAMBLE_BITS]) as u32, preamble);
    }
    Ok(out)
}
