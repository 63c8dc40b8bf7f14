//! Periodic 4-byte XOR scrambler and scrambler-phase selection.

use super::pn::PnSequence;
use crate::{Error, Result};

/// XORs `block[i]` with `scrambler[i % 4]`. Self-inverse.
pub fn scramble(block: &[u8], scrambler: &[u8; 4]) -> Result<Vec<u8>> {
    if !block.len().is_multiple_of(4) {
        return Err(Error::length("scrambled block", "a multiple of 4", block.len()));
    }
    Ok(block.iter().zip(scrambler.iter().cycle()).map(|(b, s)| b ^ s).collect())
}

/// Largest agreement count between `preamble` and any 32-bit window of the
/// stream formed by repeating `scrambler` forever.
pub fn max_sliding_agreement(scrambler: u32, preamble: u32) -> u32 {
    (0..32)
        .map(|o| 32 - (scrambler.rotate_left(o) ^ preamble).count_ones())
        .max()
        .unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScramblerChoice {
    /// LFSR phase the scrambler was taken from.
    pub phase: usize,
    pub word: u32,
    pub max_agreement: u32,
}

impl ScramblerChoice {
    pub fn bytes(&self) -> [u8; 4] {
        self.word.to_be_bytes()
    }
}

/// Screens every nonzero phase of `pn` and keeps the one whose repeated
/// pattern has the lowest maximum sliding agreement with `preamble`
/// (smallest phase on ties).
pub fn select_scrambler_phase(pn: &PnSequence, preamble: u32) -> Result<ScramblerChoice> {
    let period = pn.period()?;
    let mut best: Option<ScramblerChoice> = None;
    for phase in 1..period {
        let word = pn.word(phase)?;
        let max_agreement = max_sliding_agreement(word, preamble);
        if best.is_none_or(|b| max_agreement < b.max_agreement) {
            best = Some(ScramblerChoice {
                phase,
                word,
                max_agreement,
            });
        }
    }
    best.ok_or_else(|| Error::config("PN sequence has no nonzero phase"))
}
