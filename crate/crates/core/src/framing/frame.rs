//! The 260-byte on-air frame.
//!
//! ```text
//! | preamble (4) | payload (239) | check (16) | dummy (1) |
//!                 \______________ scrambled (256) ________/
//! ```
//!
//! Bytes are transmitted in order, each MSB first. The preamble is never
//! scrambled. The dummy byte is chosen on its on-air value, so the byte fed
//! to the scrambler is `dummy ^ scrambler[3]`.

use std::sync::OnceLock;

use super::dummy::search_dummy_byte;
use crate::fec::rs::{Decoded, RsCodec, K, N};
use crate::linecoding::pn::PnSequence;
use crate::linecoding::scrambler::{scramble, select_scrambler_phase};
use crate::{Error, Result};

pub const PREAMBLE_LEN: usize = 4;
pub const SCRAMBLED_LEN: usize = N + 1;
pub const FRAME_LEN: usize = PREAMBLE_LEN + SCRAMBLED_LEN;
pub const FRAME_BITS: usize = FRAME_LEN * 8;

/// Constants shared by transmitter and receiver.
#[derive(Debug, Clone)]
pub struct FrameConfig {
    pub preamble: [u8; 4],
    pub scrambler: [u8; 4],
    /// On-air dummy byte.
    pub dummy: u8,
    pub codec: RsCodec,
}

impl FrameConfig {
    /// Preamble from phase 0 of `pn`, scrambler from the best screened
    /// phase, dummy byte from the minimax search.
    pub fn derive(pn: &PnSequence, codec: RsCodec) -> Result<Self> {
        let preamble = pn.word(0)?;
        let scrambler = select_scrambler_phase(pn, preamble)?;
        let dummy = search_dummy_byte(preamble);
        Ok(FrameConfig {
            preamble: preamble.to_be_bytes(),
            scrambler: scrambler.bytes(),
            dummy: dummy.d,
            codec,
        })
    }

    /// Derived from the default PN generator and RS codec.
    pub fn standard() -> &'static FrameConfig {
        static CONFIG: OnceLock<FrameConfig> = OnceLock::new();
        CONFIG.get_or_init(|| {
            FrameConfig::derive(&PnSequence::default(), RsCodec::standard().clone())
                .expect("default PN sequence is valid")
        })
    }

    pub fn preamble_word(&self) -> u32 {
        u32::from_be_bytes(self.preamble)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Frame(pub [u8; FRAME_LEN]);

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Frame(preamble={:02x?}, dummy={:02x})",
            self.preamble(),
            self.dummy()
        )
    }
}

impl Frame {
    pub fn as_bytes(&self) -> &[u8; FRAME_LEN] {
        &self.0
    }

    pub fn preamble(&self) -> &[u8] {
        &self.0[..PREAMBLE_LEN]
    }

    pub fn scrambled(&self) -> &[u8] {
        &self.0[PREAMBLE_LEN..]
    }

    pub fn dummy(&self) -> u8 {
        self.0[FRAME_LEN - 1]
    }
}

pub fn build_frame(payload: &[u8], config: &FrameConfig) -> Result<Frame> {
    if payload.len() != K {
        return Err(Error::length("frame payload", K, payload.len()));
    }
    let codeword = config.codec.encode(payload)?;
    let mut region = [0u8; SCRAMBLED_LEN];
    region[..N].copy_from_slice(codeword.as_bytes());
    region[N] = config.dummy ^ config.scrambler[(SCRAMBLED_LEN - 1) % 4];
    let scrambled = scramble(&region, &config.scrambler)?;

    let mut out = [0u8; FRAME_LEN];
    out[..PREAMBLE_LEN].copy_from_slice(&config.preamble);
    out[PREAMBLE_LEN..].copy_from_slice(&scrambled);
    Ok(Frame(out))
}

/// Descrambles the trailing 256 bytes and returns the 255-byte codeword,
/// before any correction.
pub fn descramble_codeword(frame: &[u8], config: &FrameConfig) -> Result<[u8; N]> {
    if frame.len() != FRAME_LEN {
        return Err(Error::length("frame", FRAME_LEN, frame.len()));
    }
    let region = scramble(&frame[PREAMBLE_LEN..], &config.scrambler)?;
    Ok(region[..N].try_into().unwrap())
}

/// Inverse of [`build_frame`] for a byte-aligned frame.
pub fn parse_frame(frame: &[u8], config: &FrameConfig) -> Result<Decoded> {
    let codeword = descramble_codeword(frame, config)?;
    config.codec.decode(&codeword)
}
