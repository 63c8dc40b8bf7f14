//! Byte/frame alignment by periodic preamble detection.
//!
//! Bank 1 looks at the bits under the current byte position and bank 2 at
//! the bits one frame period later. Correlator `k` of each bank handles bit
//! offset `k`; a frame is declared where the same correlator passes the
//! threshold in every bank. Scanning goes byte by byte and, within a byte,
//! correlator by correlator, so the first hit is simply the smallest
//! absolute bit offset.

use serde::{Deserialize, Serialize};

use super::correlator::{correlate32, CORRELATORS, PREAMBLE_BITS};
use crate::framing::FRAME_LEN;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SyncConfig {
    /// Agreement threshold, 0..=32.
    pub gamma: u32,
    /// 1 or 2 correlator banks.
    pub banks: u32,
    /// Distance between banks in bytes (one frame).
    pub bank_spacing: usize,
}

impl Default for SyncConfig {
    fn default() -> Self {
        SyncConfig {
            gamma: 28,
            banks: 2,
            bank_spacing: FRAME_LEN,
        }
    }
}

impl SyncConfig {
    pub fn new(gamma: u32, banks: u32) -> Result<Self> {
        let c = SyncConfig {
            gamma,
            banks,
            ..SyncConfig::default()
        };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.gamma > PREAMBLE_BITS as u32 {
            return Err(Error::config(format!("gamma {} exceeds 32", self.gamma)));
        }
        if !(1..=2).contains(&self.banks) {
            return Err(Error::config(format!("banks must be 1 or 2, got {}", self.banks)));
        }
        if self.bank_spacing == 0 {
            return Err(Error::config("bank spacing must be positive"));
        }
        Ok(())
    }

    pub fn correlators_per_bank(&self) -> usize {
        CORRELATORS
    }

    /// 32 + correlators − 1.
    pub fn window(&self) -> usize {
        PREAMBLE_BITS + CORRELATORS - 1
    }

    /// Bytes spanned by one decision: preamble, a frame body, preamble.
    pub fn decision_span(&self) -> usize {
        (self.banks as usize - 1) * self.bank_spacing + 4
    }

    fn spacing_bits(&self) -> usize {
        (self.banks as usize - 1) * self.bank_spacing * 8
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Detection {
    /// Bit offset within the byte, i.e. the winning correlator index.
    pub shift: usize,
    /// Absolute bit position of the first preamble bit.
    pub frame_start: usize,
    pub score_bank1: u32,
    pub score_bank2: Option<u32>,
}

/// Every bit offset whose correlators pass in all banks, in stream order.
pub struct Detections<'a> {
    bits: &'a [u8],
    preamble: u32,
    gamma: u32,
    spacing: Option<usize>,
    pos: usize,
    reg1: u32,
    reg2: u32,
    end: usize,
}

impl<'a> Detections<'a> {
    pub fn new(bits: &'a [u8], preamble: u32, config: &SyncConfig) -> Self {
        let spacing = (config.banks == 2).then(|| config.spacing_bits());
        let reach = spacing.unwrap_or(0) + PREAMBLE_BITS;
        let end = (bits.len() + 1).saturating_sub(reach);
        let mut it = Detections {
            bits,
            preamble,
            gamma: config.gamma,
            spacing,
            pos: 0,
            reg1: 0,
            reg2: 0,
            end,
        };
        if end > 0 {
            it.reg1 = pack(&bits[..PREAMBLE_BITS]);
            if let Some(s) = spacing {
                it.reg2 = pack(&bits[s..s + PREAMBLE_BITS]);
            }
        }
        it
    }

    /// Number of bit offsets that will be evaluated.
    pub fn evaluations(&self) -> usize {
        self.end
    }

    fn advance(&mut self) {
        let next = self.pos + PREAMBLE_BITS;
        if next < self.bits.len() {
            self.reg1 = (self.reg1 << 1) | self.bits[next] as u32;
        }
        if let Some(s) = self.spacing {
            if next + s < self.bits.len() {
                self.reg2 = (self.reg2 << 1) | self.bits[next + s] as u32;
            }
        }
        self.pos += 1;
    }
}

impl Iterator for Detections<'_> {
    type Item = Detection;

    fn next(&mut self) -> Option<Detection> {
        while self.pos < self.end {
            let s1 = correlate32(self.reg1, self.preamble);
            let hit = if s1 < self.gamma {
                None
            } else if self.spacing.is_some() {
                let s2 = correlate32(self.reg2, self.preamble);
                (s2 >= self.gamma).then_some((s1, Some(s2)))
            } else {
                Some((s1, None))
            };
            let pos = self.pos;
            self.advance();
            if let Some((score_bank1, score_bank2)) = hit {
                return Some(Detection {
                    shift: pos % 8,
                    frame_start: pos,
                    score_bank1,
                    score_bank2,
                });
            }
        }
        None
    }
}

fn pack(bits: &[u8]) -> u32 {
    bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32)
}

/// First position where the same correlator clears `gamma` in every bank.
pub fn detect_frame(stream: &[u8], preamble: u32, config: &SyncConfig) -> Option<Detection> {
    Detections::new(stream, preamble, config).next()
}
